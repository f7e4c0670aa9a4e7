#pragma once

/**
 * @file representation.hpp
 * @brief Constructive side of the bounded two-coin problem.
 *
 * Finding a boxed witness for a value, the reflection s -> total - s, the
 * classic gap set, and the structured gap report for a bounded instance.
 *
 * In the LargeCoefficients case the bounded gap set is exactly the classic
 * gaps below the midpoint together with their reflections above it. In the
 * SmallCoefficients case gaps are computed extensionally.
 */

#include <optional>
#include <vector>

#include "coinbound/core.hpp"
#include "coinbound/oracle.hpp"

namespace coinbound {

/// Classic (uncapped) gaps of a coprime pair, ascending.
struct UnboundedGapSet {
  std::vector<Int> values;

  friend bool operator==(const UnboundedGapSet&, const UnboundedGapSet&) = default;
};

struct GapReport {
  std::vector<Int> gaps;
  std::vector<Int> lower_gaps;
  std::vector<Int> upper_gaps;
  CaseTag case_tag = CaseTag::SmallCoefficients;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Pair-count threshold under which small-case gaps are enumerated directly.
inline constexpr Int kSmallCaseEnumerationLimit = 4096;

/// total - s. Throws OutOfRange unless 0 <= s <= total.
Int reflect(const BoundedInstance& inst, Int s);

/// Throws CapacityExceeded when the set would hold more than max_size values.
UnboundedGapSet unbounded_gaps(const DenominationPair& d,
                               Int max_size = kDefaultOracleCapacity);

/// Gap report for inst. Small-case lower_gaps holds gaps <= floor(total / 2).
/// The oracle capacity in options bounds the number of values the report may hold.
GapReport bounded_gaps(const BoundedInstance& inst, const OracleOptions& options = {});

/// Boxed witness for s with the smallest a, or nullopt when s is a gap.
///
/// Starts from the extended-Euclid solution and jumps along the solution
/// lattice (a, b) + t(n, -m) with a single computed shift count.
/// Throws OutOfRange unless 0 <= s <= total.
std::optional<Representation> find_representation(const BoundedInstance& inst, Int s);

/// Same contract as find_representation, stepping a <- a + n, b <- b - m one
/// lattice point at a time. O(total / (m*n)) steps; intended for cross-checks.
std::optional<Representation> find_representation_iterative(const BoundedInstance& inst, Int s);

}  // namespace coinbound
