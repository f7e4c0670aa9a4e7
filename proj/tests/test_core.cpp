#include <doctest.h>

#include <limits>

#include "coinbound/core.hpp"

using namespace coinbound;

namespace {

ErrorKind kind_of(Int m, Int n, Int a, Int b) {
  try {
    make_instance(m, n, a, b);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInstance;
}

}  // namespace

TEST_CASE("make_instance accepts valid tuples") {
  const auto inst = make_instance(3, 5, 5, 3);
  CHECK(inst.total() == 30);
  CHECK(inst.m() == 3);
  CHECK(inst.n() == 5);
  CHECK(inst.max_a() == 5);
  CHECK(inst.max_b() == 3);

  CHECK(make_instance(1, 1, 0, 0).total() == 0);
  CHECK(make_instance(1, 1, 4, 7).total() == 11);
}

TEST_CASE("make_instance reports each documented error") {
  CHECK(kind_of(4, 6, 2, 2) == ErrorKind::NonCoprime);
  CHECK(kind_of(0, 5, 1, 1) == ErrorKind::NonPositiveDenomination);
  CHECK(kind_of(3, -5, 1, 1) == ErrorKind::NonPositiveDenomination);
  CHECK(kind_of(3, 5, -1, 1) == ErrorKind::NegativeBound);
  CHECK(kind_of(3, 5, 1, -1) == ErrorKind::NegativeBound);

  constexpr Int big = std::numeric_limits<Int>::max() / 2;
  CHECK(kind_of(3, 5, big, 0) == ErrorKind::Overflow);
  CHECK(kind_of(1, 2, big, big) == ErrorKind::Overflow);
}

TEST_CASE("validation order: denominations before coprimality before bounds") {
  CHECK(kind_of(0, 0, -1, -1) == ErrorKind::NonPositiveDenomination);
  CHECK(kind_of(2, 4, -1, -1) == ErrorKind::NonCoprime);
}

TEST_CASE("construction is total over a grid of small tuples") {
  for (Int m = -2; m <= 6; ++m) {
    for (Int n = -2; n <= 6; ++n) {
      for (Int a = -2; a <= 3; ++a) {
        for (Int b = -2; b <= 3; ++b) {
          const bool should_pass = m > 0 && n > 0 && gcd(m, n) == 1 && a >= 0 && b >= 0;
          bool passed = false;
          try {
            passed = make_instance(m, n, a, b).total() == a * m + b * n;
          } catch (const Error&) {
          }
          CHECK(passed == should_pass);
        }
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(make_instance(3, 5, 5, 3)) == CaseTag::LargeCoefficients);
  CHECK(classify(make_instance(3, 5, 2, 1)) == CaseTag::SmallCoefficients);
  CHECK(classify(make_instance(3, 5, 10, 2)) == CaseTag::SmallCoefficients);
  CHECK(classify(make_instance(3, 5, 0, 100)) == CaseTag::SmallCoefficients);
  CHECK(classify(make_instance(1, 1, 1, 1)) == CaseTag::LargeCoefficients);
  CHECK(classify(make_instance(1, 1, 0, 0)) == CaseTag::SmallCoefficients);

  for (Int a = 0; a <= 12; ++a) {
    for (Int b = 0; b <= 8; ++b) {
      const bool large = a >= 5 && b >= 3;
      CHECK((classify(make_instance(3, 5, a, b)) == CaseTag::LargeCoefficients) == large);
    }
  }
}

TEST_CASE("checked arithmetic") {
  constexpr Int max = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_add(max, 1), Error);
  CHECK_THROWS_AS(checked_sub(-max - 1, 1), Error);
  CHECK_THROWS_AS(checked_mul(max / 2 + 1, 2), Error);
}

TEST_CASE("extended_gcd returns Bezout coefficients") {
  for (Int a = 0; a <= 40; ++a) {
    for (Int b = 0; b <= 40; ++b) {
      const Bezout bz = extended_gcd(a, b);
      CHECK(bz.g == gcd(a, b));
      CHECK(bz.x * a + bz.y * b == bz.g);
    }
  }
}

TEST_CASE("is_valid_for checks value and box") {
  const auto inst = make_instance(3, 5, 5, 3);
  CHECK(is_valid_for({2, 1, 11}, inst));
  CHECK_FALSE(is_valid_for({2, 1, 12}, inst));
  CHECK_FALSE(is_valid_for({6, 0, 18}, inst));
  CHECK_FALSE(is_valid_for({0, 4, 20}, inst));
  CHECK_FALSE(is_valid_for({-1, 3, 12}, inst));
}

TEST_CASE("error kinds have stable names") {
  CHECK(to_string(ErrorKind::NonCoprime) == "NonCoprime");
  CHECK(to_string(ErrorKind::OutOfRange) == "OutOfRange");
  CHECK(to_string(CaseTag::LargeCoefficients) == "LargeCoefficients");
}
