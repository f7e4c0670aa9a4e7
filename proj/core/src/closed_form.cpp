#include "coinbound/closed_form.hpp"

namespace coinbound {

namespace {

Int twice_sylvester(const DenominationPair& d) {
  return checked_mul(d.m() - 1, d.n() - 1);
}

}  // namespace

Int sylvester_count(const DenominationPair& d) { return twice_sylvester(d) / 2; }

Int frobenius_number(const DenominationPair& d) {
  // mn - m - n rewritten as (m-1)(n-1) - 1 to keep the intermediate small.
  return twice_sylvester(d) - 1;
}

ClassicSummary classic_summary(const DenominationPair& d) {
  return {sylvester_count(d), frobenius_number(d)};
}

Int count_representable(const BoundedInstance& inst) {
  switch (classify(inst)) {
    case CaseTag::LargeCoefficients:
      return checked_sub(checked_add(inst.total(), 1), twice_sylvester(inst.denoms()));
    case CaseTag::SmallCoefficients:
      return checked_mul(checked_add(inst.max_a(), 1), checked_add(inst.max_b(), 1));
  }
  return 0;
}

Int count_gaps(const BoundedInstance& inst) {
  return checked_sub(checked_add(inst.total(), 1), count_representable(inst));
}

}  // namespace coinbound
