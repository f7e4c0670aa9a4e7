#pragma once

// Closed-form counts for the two-coin problem, bounded and unbounded.

#include "coinbound/core.hpp"

namespace coinbound {

/// Classic unbounded quantities for a coprime pair.
struct ClassicSummary {
  Int h;  ///< number of non-representable values, (m-1)(n-1)/2
  Int g;  ///< largest non-representable value, mn - m - n; -1 when none exist

  friend bool operator==(const ClassicSummary&, const ClassicSummary&) = default;
};

/// (m-1)(n-1)/2. The product is always even for a coprime pair.
Int sylvester_count(const DenominationPair& d);

/// mn - m - n, which is -1 exactly when min(m, n) = 1.
Int frobenius_number(const DenominationPair& d);

ClassicSummary classic_summary(const DenominationPair& d);

/// Number of distinct values a*m + b*n over the box {0..A} x {0..B}.
///
/// LargeCoefficients: A*m + B*n + 1 - (m-1)(n-1).
/// SmallCoefficients: (A+1)(B+1), since every box point gives a distinct value.
Int count_representable(const BoundedInstance& inst);

/// Values in {0..A*m + B*n} that are not representable from the box.
Int count_gaps(const BoundedInstance& inst);

}  // namespace coinbound
