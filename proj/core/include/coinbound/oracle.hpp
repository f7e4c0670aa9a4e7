#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force bounded reachability over any number of coins.
 *
 * The oracle answers "which values in {0..total} are a sum of at most
 * bound_i copies of denomination_i" by running a bounded-knapsack
 * reachability DP over a dense bit sequence. It knows nothing about
 * coprimality or closed forms and is the ground truth those are checked
 * against.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "coinbound/core.hpp"

namespace coinbound {

inline constexpr Int kDefaultOracleCapacity = 10'000'000;

struct Coin {
  Int denomination;
  Int bound;

  friend bool operator==(const Coin&, const Coin&) = default;
};

/// A list of (denomination, bound) entries. Duplicate denominations are kept
/// as separate entries, each with its own bound.
class GeneralInstance {
 public:
  /// Throws InvalidInstance (empty list), NonPositiveDenomination,
  /// NegativeBound, or Overflow when the total does not fit.
  explicit GeneralInstance(std::vector<Coin> coins);

  /// The two-coin instance as coins [(m, A), (n, B)].
  explicit GeneralInstance(const BoundedInstance& inst);

  std::span<const Coin> coins() const noexcept { return coins_; }
  Int total() const noexcept { return total_; }

 private:
  std::vector<Coin> coins_;
  Int total_;
};

enum class DpStrategy {
  ShiftOr,      ///< one shifted OR pass per unit of bound
  BinarySplit,  ///< bound split into 1, 2, 4, ..., remainder
};

struct OracleOptions {
  Int capacity = kDefaultOracleCapacity;
  DpStrategy strategy = DpStrategy::BinarySplit;
};

/// Dense membership bits for {0..total}.
class ReachableSet {
 public:
  Int total() const noexcept { return total_; }
  bool contains(Int v) const noexcept;
  Int count() const noexcept;

  std::vector<Int> members() const;
  /// Complement within {0..total}, ascending.
  std::vector<Int> gaps() const;

  /// Packed words, bit v of the sequence at word v / 64, bit v % 64.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const ReachableSet&, const ReachableSet&) = default;

 private:
  friend ReachableSet reachable_set(const GeneralInstance&, const OracleOptions&);

  explicit ReachableSet(Int total);
  void or_shifted(Int shift);

  Int total_;
  std::vector<std::uint64_t> words_;
};

/// Throws CapacityExceeded when g.total() > options.capacity.
ReachableSet reachable_set(const GeneralInstance& g, const OracleOptions& options = {});

Int oracle_count(const GeneralInstance& g, const OracleOptions& options = {});

std::vector<Int> oracle_gaps(const GeneralInstance& g, const OracleOptions& options = {});

}  // namespace coinbound
