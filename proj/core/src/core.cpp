#include "coinbound/core.hpp"

#include <cstdlib>
#include <numeric>

namespace coinbound {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveDenomination: return "NonPositiveDenomination";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NegativeBound: return "NegativeBound";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

std::string_view to_string(CaseTag tag) noexcept {
  return tag == CaseTag::LargeCoefficients ? "LargeCoefficients" : "SmallCoefficients";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorKind::Overflow,
                "integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw Error(ErrorKind::Overflow,
                "integer overflow in " + std::to_string(x) + " - " + std::to_string(y));
  }
  return r;
}

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(ErrorKind::Overflow,
                "integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

Int gcd(Int x, Int y) noexcept { return std::gcd(x, y); }

Bezout extended_gcd(Int a, Int b) noexcept {
  // Iterative form; |x| <= b and |y| <= a on exit, so no overflow for a, b >= 0.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  return {old_r, old_x, old_y};
}

DenominationPair::DenominationPair(Int m, Int n) : m_(m), n_(n) {
  if (m <= 0 || n <= 0) {
    throw Error(ErrorKind::NonPositiveDenomination,
                "denominations must be positive, got m=" + std::to_string(m) +
                    ", n=" + std::to_string(n));
  }
  if (const Int g = gcd(m, n); g != 1) {
    throw Error(ErrorKind::NonCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                           ") = " + std::to_string(g) + ", expected 1");
  }
}

BoundedInstance::BoundedInstance(DenominationPair denoms, Int max_a, Int max_b)
    : denoms_(denoms), max_a_(max_a), max_b_(max_b), total_(0) {
  if (max_a < 0 || max_b < 0) {
    throw Error(ErrorKind::NegativeBound, "bounds must be non-negative, got A=" +
                                              std::to_string(max_a) +
                                              ", B=" + std::to_string(max_b));
  }
  total_ = checked_add(checked_mul(max_a, denoms.m()), checked_mul(max_b, denoms.n()));
}

BoundedInstance make_instance(Int m, Int n, Int max_a, Int max_b) {
  return BoundedInstance(DenominationPair(m, n), max_a, max_b);
}

CaseTag classify(const BoundedInstance& inst) noexcept {
  return inst.max_a() >= inst.n() && inst.max_b() >= inst.m() ? CaseTag::LargeCoefficients
                                                              : CaseTag::SmallCoefficients;
}

bool is_valid_for(const Representation& rep, const BoundedInstance& inst) noexcept {
  if (rep.a < 0 || rep.a > inst.max_a() || rep.b < 0 || rep.b > inst.max_b()) return false;
  // Inside the box a*m + b*n <= total, which already fits.
  return rep.a * inst.m() + rep.b * inst.n() == rep.value;
}

}  // namespace coinbound
