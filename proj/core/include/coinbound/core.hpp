#pragma once

/**
 * @file core.hpp
 * @brief Domain types for the bounded two-coin problem.
 *
 * A problem instance is a coprime pair of coin values (m, n) together with
 * per-coin bounds (A, B). The admissible coefficient box is
 * {0..A} x {0..B} and every value a*m + b*n lies in {0..A*m + B*n}.
 *
 * All arithmetic is exact over std::int64_t. Anything that would overflow
 * is reported as an Error with kind Overflow instead of wrapping.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coinbound {

using Int = std::int64_t;

enum class ErrorKind {
  NonPositiveDenomination,
  NonCoprime,
  NegativeBound,
  Overflow,
  CapacityExceeded,
  OutOfRange,
  InvalidInstance,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every validating constructor and operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Checked arithmetic. Each throws Error{Overflow} rather than wrapping.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(Int x, Int y) noexcept;

/// Bezout coefficients: x*a + y*b = g = gcd(a, b), for a, b >= 0.
struct Bezout {
  Int g;
  Int x;
  Int y;
};
Bezout extended_gcd(Int a, Int b) noexcept;

/// Coprime pair of positive coin values.
class DenominationPair {
 public:
  /// Throws NonPositiveDenomination or NonCoprime.
  DenominationPair(Int m, Int n);

  Int m() const noexcept { return m_; }
  Int n() const noexcept { return n_; }

  friend bool operator==(const DenominationPair&, const DenominationPair&) = default;

 private:
  Int m_;
  Int n_;
};

enum class CaseTag { LargeCoefficients, SmallCoefficients };

std::string_view to_string(CaseTag tag) noexcept;

/// Coin pair plus bounds: a in {0..A} multiplies m, b in {0..B} multiplies n.
class BoundedInstance {
 public:
  /// Throws NegativeBound, or Overflow when A*m + B*n does not fit in Int.
  BoundedInstance(DenominationPair denoms, Int max_a, Int max_b);

  const DenominationPair& denoms() const noexcept { return denoms_; }
  Int m() const noexcept { return denoms_.m(); }
  Int n() const noexcept { return denoms_.n(); }
  Int max_a() const noexcept { return max_a_; }
  Int max_b() const noexcept { return max_b_; }

  /// A*m + B*n, the largest value in range.
  Int total() const noexcept { return total_; }

  bool contains_value(Int s) const noexcept { return s >= 0 && s <= total_; }

  friend bool operator==(const BoundedInstance&, const BoundedInstance&) = default;

 private:
  DenominationPair denoms_;
  Int max_a_;
  Int max_b_;
  Int total_;
};

/// Validates all four integers in order: denominations, coprimality, bounds, overflow.
BoundedInstance make_instance(Int m, Int n, Int max_a, Int max_b);

/// LargeCoefficients iff A >= n and B >= m.
CaseTag classify(const BoundedInstance& inst) noexcept;

/// A boxed witness a*m + b*n = value.
struct Representation {
  Int a = 0;
  Int b = 0;
  Int value = 0;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// True when rep recomputes to its value and lies within the box of inst.
bool is_valid_for(const Representation& rep, const BoundedInstance& inst) noexcept;

}  // namespace coinbound
