#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "sectorstab/core.hpp"
#include "sectorstab/rootfind.hpp"
#include "sectorstab/vertexgen.hpp"

using namespace sectorstab;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

}  // namespace

TEST_CASE("sector validation accepts the documented cases") {
  const SectorSpec hurwitz = validate_sector(1, 2);
  CHECK(hurwitz.p() == 1);
  CHECK(hurwitz.q() == 2);
  CHECK(hurwitz.boundary_angle() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));

  const SectorSpec narrow = validate_sector(3, 4);
  CHECK(narrow.boundary_angle() == doctest::Approx(3 * std::numbers::pi / 4).epsilon(1e-15));

  CHECK_NOTHROW(validate_sector(3, 5));
  CHECK_NOTHROW(validate_sector(500, 999));
}

TEST_CASE("sector validation rejects bad p/q") {
  CHECK(code_of([] { validate_sector(2, 4); }) == Errc::NotCoprime);
  CHECK(code_of([] { validate_sector(1, 3); }) == Errc::RatioOutOfRange);
  CHECK(code_of([] { validate_sector(1, 1); }) == Errc::RatioOutOfRange);
  CHECK(code_of([] { validate_sector(5, 4); }) == Errc::RatioOutOfRange);
  CHECK(code_of([] { validate_sector(0, 2); }) == Errc::NonPositive);
  CHECK(code_of([] { validate_sector(-1, 2); }) == Errc::NonPositive);
  CHECK(code_of([] { validate_sector(1, 0); }) == Errc::NonPositive);
  CHECK(code_of([] { validate_sector(3, -5); }) == Errc::NonPositive);
  // gcd(600001, 1200001) = 1 and the ratio is barely above 1/2, but the
  // circle would be enormous.
  CHECK(code_of([] { validate_sector(600001, 1200001); }) == Errc::RatioOutOfRange);
}

TEST_CASE("sector boundary angle lies in [pi/2, pi) for every accepted pair") {
  for (int q = 2; q <= 60; ++q) {
    for (int p : testing::valid_ps(q)) {
      const SectorSpec sector(p, q);
      // The rational inequality is exact; the floating angle must agree.
      CHECK(2 * p >= q);
      CHECK(p < q);
      CHECK(sector.boundary_angle() >= std::numbers::pi / 2 - 1e-15);
      CHECK(sector.boundary_angle() < std::numbers::pi);
    }
  }
}

TEST_CASE("family validation accepts a well-formed box") {
  const IntervalFamily family = validate_family({1, 2, 3}, {2, 3, 4});
  CHECK(family.degree() == 2);
  CHECK_FALSE(family.negated());
  CHECK(family.lower() == std::vector<double>{1, 2, 3});
  CHECK(family.upper() == std::vector<double>{2, 3, 4});
}

TEST_CASE("family validation rejects malformed boxes") {
  CHECK(code_of([] { validate_family({1, 2, -1}, {2, 3, 1}); }) == Errc::DegreeDrop);
  CHECK(code_of([] { validate_family({1, 2, 0}, {2, 3, 0}); }) == Errc::DegreeDrop);
  // Zero at either endpoint of the leading interval counts as a drop.
  CHECK(code_of([] { validate_family({1, 2, 0}, {2, 3, 1}); }) == Errc::DegreeDrop);
  CHECK(code_of([] { validate_family({1, 2, -1}, {2, 3, 0}); }) == Errc::DegreeDrop);
  CHECK(code_of([] { validate_family({1, 2}, {2, 3, 4}); }) == Errc::LengthMismatch);
  CHECK(code_of([] { validate_family({1}, {2}); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { validate_family({}, {}); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { validate_family({1, 2, 5}, {2, 3, 4}); }) == Errc::EmptyInterval);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(code_of([inf] { validate_family({1, -inf, 1}, {2, 3, 4}); }) == Errc::NonFinite);
  CHECK(code_of([] { validate_family({1, std::nan(""), 1}, {2, 3, 4}); }) == Errc::NonFinite);

  // The EmptyInterval message names the offending index.
  try {
    validate_family({1, 2, 3, 9}, {2, 3, 4, 8});
    FAIL("expected EmptyInterval");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("[3]") != std::string::npos);
  }
}

TEST_CASE("all-negative leading interval is normalized by negation") {
  const IntervalFamily family = validate_family({-2, -3, -4}, {-1, -2, -3});
  CHECK(family.negated());
  CHECK(family.lower() == std::vector<double>{1, 2, 3});
  CHECK(family.upper() == std::vector<double>{2, 3, 4});
}

TEST_CASE("family validation is idempotent") {
  const IntervalFamily once = validate_family({-2, -3, -4}, {-1, -2, -3});
  const IntervalFamily twice = validate_family(once.lower(), once.upper());
  CHECK(once == twice);
  CHECK_FALSE(twice.negated());

  const IntervalFamily plain = validate_family({0.5, -1, 2}, {1.5, 1, 2.5});
  CHECK(plain == validate_family(plain.lower(), plain.upper()));
}

TEST_CASE("negation normalization preserves every vertex root multiset") {
  const std::vector<double> orig_lower{-2, -3.5, -1, -4};
  const std::vector<double> orig_upper{-1, -2, -0.5, -3};
  const IntervalFamily normalized = validate_family(orig_lower, orig_upper);
  REQUIRE(normalized.negated());

  // Vertex of the normalized box under pattern P equals the negation of the
  // original vertex under the flipped pattern, so their roots must agree.
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Sign> signs(4);
    std::vector<double> flipped_vertex(4);
    for (int i = 0; i < 4; ++i) {
      const bool plus = (mask >> i) & 1u;
      signs[static_cast<std::size_t>(i)] = plus ? Sign::Plus : Sign::Minus;
      flipped_vertex[static_cast<std::size_t>(i)] =
          plus ? orig_lower[static_cast<std::size_t>(i)] : orig_upper[static_cast<std::size_t>(i)];
    }
    const VertexPolynomial vertex = instantiate(normalized, SignPattern(signs));
    const RootSet a = roots(vertex.coeffs);
    const RootSet b = roots(flipped_vertex);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      CHECK(std::abs(a.roots[i] - b.roots[i]) < 1e-10);
    }
  }
}

TEST_CASE("sign pattern string round trip and negation") {
  const SignPattern pattern = SignPattern::parse("++-+-");
  CHECK(pattern.str() == "++-+-");
  CHECK(pattern.size() == 5);
  CHECK(pattern[0] == Sign::Plus);
  CHECK(pattern[2] == Sign::Minus);
  CHECK(pattern.negated().str() == "--+-+");
  CHECK(pattern.negated().negated() == pattern);
  CHECK_THROWS_AS(SignPattern::parse("+x-"), std::invalid_argument);
}
