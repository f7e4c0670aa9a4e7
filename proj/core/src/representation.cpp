#include "coinbound/representation.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "coinbound/closed_form.hpp"

namespace coinbound {

namespace {

__extension__ using Wide = __int128;

void require_in_range(const BoundedInstance& inst, Int s) {
  if (!inst.contains_value(s)) {
    throw Error(ErrorKind::OutOfRange, "value " + std::to_string(s) + " outside 0.." +
                                           std::to_string(inst.total()));
  }
}

Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Int ceil_div(Int x, Int y) { return -floor_div(-x, y); }

// Smallest a >= 0 with a*m = s (mod n), using m^{-1} mod n from extended Euclid.
Int min_residue_coefficient(Int m, Int n, Int s) {
  if (n == 1) return 0;
  const Bezout bz = extended_gcd(m, n);
  const Wide inverse = ((Wide{bz.x} % n) + n) % n;
  return static_cast<Int>((Wide{s % n} * inverse) % n);
}

std::vector<Int> split_lower(const std::vector<Int>& gaps, Int boundary) {
  return {gaps.begin(), std::upper_bound(gaps.begin(), gaps.end(), boundary)};
}

std::vector<Int> split_upper(const std::vector<Int>& gaps, Int boundary) {
  return {std::upper_bound(gaps.begin(), gaps.end(), boundary), gaps.end()};
}

std::vector<Int> small_case_gaps(const BoundedInstance& inst, const OracleOptions& options) {
  if (inst.total() > options.capacity) {
    throw Error(ErrorKind::CapacityExceeded, "gap range 0.." + std::to_string(inst.total()) +
                                                 " exceeds capacity " +
                                                 std::to_string(options.capacity));
  }
  const Int pairs = checked_mul(inst.max_a() + 1, inst.max_b() + 1);
  if (pairs > kSmallCaseEnumerationLimit) {
    return oracle_gaps(GeneralInstance(inst), options);
  }

  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(pairs));
  for (Int a = 0; a <= inst.max_a(); ++a) {
    for (Int b = 0; b <= inst.max_b(); ++b) values.push_back(a * inst.m() + b * inst.n());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Int> gaps;
  auto next = values.begin();
  for (Int v = 0; v <= inst.total(); ++v) {
    if (next != values.end() && *next == v) {
      ++next;
    } else {
      gaps.push_back(v);
    }
  }
  return gaps;
}

}  // namespace

Int reflect(const BoundedInstance& inst, Int s) {
  require_in_range(inst, s);
  return inst.total() - s;
}

UnboundedGapSet unbounded_gaps(const DenominationPair& d, Int max_size) {
  const Int h = sylvester_count(d);
  if (h > max_size) {
    throw Error(ErrorKind::CapacityExceeded, "classic gap set has " + std::to_string(h) +
                                                 " values, limit " + std::to_string(max_size));
  }
  UnboundedGapSet out;
  if (h == 0) return out;
  out.values.reserve(static_cast<std::size_t>(h));
  // For a in 0..n-1 the values a*m hit every residue mod n once and are the
  // smallest representable value in their class; everything below a*m in
  // that class is a gap.
  const Int m = d.m();
  const Int n = d.n();
  for (Int a = 1; a < n; ++a) {
    for (Int v = checked_mul(a, m) - n; v > 0; v -= n) out.values.push_back(v);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

GapReport bounded_gaps(const BoundedInstance& inst, const OracleOptions& options) {
  GapReport report;
  report.case_tag = classify(inst);

  if (report.case_tag == CaseTag::LargeCoefficients) {
    report.lower_gaps = unbounded_gaps(inst.denoms(), options.capacity / 2).values;
    report.upper_gaps.reserve(report.lower_gaps.size());
    std::transform(report.lower_gaps.rbegin(), report.lower_gaps.rend(),
                   std::back_inserter(report.upper_gaps),
                   [&](Int v) { return inst.total() - v; });
    std::set_union(report.lower_gaps.begin(), report.lower_gaps.end(),
                   report.upper_gaps.begin(), report.upper_gaps.end(),
                   std::back_inserter(report.gaps));
    return report;
  }

  report.gaps = small_case_gaps(inst, options);
  const Int boundary = inst.total() / 2;
  report.lower_gaps = split_lower(report.gaps, boundary);
  report.upper_gaps = split_upper(report.gaps, boundary);
  return report;
}

std::optional<Representation> find_representation(const BoundedInstance& inst, Int s) {
  require_in_range(inst, s);
  const Int m = inst.m();
  const Int n = inst.n();

  // Admissible a: b <= B needs a*m >= s - B*n, b >= 0 needs a*m <= s.
  const Int lo = std::max<Int>(0, ceil_div(s - inst.max_b() * n, m));
  const Int hi = std::min(inst.max_a(), s / m);

  // Particular solution a0 in [0, n); shift t times by (n, -m) to reach lo.
  const Int a0 = min_residue_coefficient(m, n, s);
  const Int shifts = std::max<Int>(0, ceil_div(lo - a0, n));
  const Wide a = Wide{a0} + Wide{shifts} * n;
  if (a > hi) return std::nullopt;

  const Int a_final = static_cast<Int>(a);
  return Representation{a_final, (s - a_final * m) / n, s};
}

std::optional<Representation> find_representation_iterative(const BoundedInstance& inst, Int s) {
  require_in_range(inst, s);
  const Int m = inst.m();
  const Int n = inst.n();

  Int a = min_residue_coefficient(m, n, s);
  if (a > s / m) return std::nullopt;
  Int b = (s - a * m) / n;

  while (b > inst.max_b()) {
    a += n;
    b -= m;
    if (a > inst.max_a() || b < 0) return std::nullopt;
  }
  if (a > inst.max_a()) return std::nullopt;
  return Representation{a, b, s};
}

}  // namespace coinbound
