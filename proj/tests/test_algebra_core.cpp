#include <random>

#include "doctest.h"
#include "fwb/error.hpp"
#include "test_util.hpp"

using namespace fwb;
using namespace fwb::testing;

TEST_CASE("prime field arithmetic") {
  PrimeField k(7);
  CHECK(k.add(5, 4) == 2);
  CHECK(k.sub(2, 5) == 4);
  CHECK(k.mul(3, 5) == 1);
  CHECK(k.inv(3) == 5);
  CHECK(k.from_int(-1) == 6);
  CHECK(k.pow(3, 6) == 1);
  for (Coeff a = 1; a < 7; ++a) CHECK(k.mul(a, k.inv(a)) == 1);
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(k.inv(0), Error);
  PrimeField big(2147483647);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("monomial orders") {
  auto r = ring(2, {"x", "y", "z"});
  auto lm = [&](const char* s) { return P(r, s).leading_monomial(); };
  // grevlex: x > y > z, degree first, then reverse lexicographic.
  CHECK(r->compare(lm("x"), lm("y")) > 0);
  CHECK(r->compare(lm("y^2"), lm("x*z")) > 0);
  CHECK(r->compare(lm("x*y"), lm("z^3")) < 0);
  auto lex = ring(2, {"x", "y", "z"}, MonomialOrder::lex());
  CHECK(lex->compare(P(lex, "x").leading_monomial(), P(lex, "y^5").leading_monomial()) > 0);
  auto el = ring(2, {"x", "y", "z"}, MonomialOrder::elimination(1));
  CHECK(el->compare(P(el, "x").leading_monomial(), P(el, "y^9*z^9").leading_monomial()) > 0);
  CHECK(el->compare(P(el, "x*z").leading_monomial(), P(el, "x*y").leading_monomial()) < 0);
}

TEST_CASE("parser") {
  auto r = ring(3, {"x", "y", "z"});
  CHECK(P(r, "x^2 + 4*x*y - y").to_string() == "x^2+x*y+2*y");
  CHECK(P(r, "(x+y)^3").to_string() == "x^3+y^3");
  CHECK(P(r, "-x + 3").to_string() == "2*x");
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, " 2 * x * 2 ").to_string() == "x");
  CHECK(parse_polynomial_list("x, y*(x+z), z^2", r).size() == 3);
  CHECK(parse_polynomial_list("  ", r).empty());
  try {
    P(r, "x + q");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK_THROWS_AS(P(r, "x +"), Error);
  CHECK_THROWS_AS(P(r, "x^"), Error);
  CHECK_THROWS_AS(P(r, "(x"), Error);
  CHECK_THROWS_AS(P(r, "x y"), Error);
}

TEST_CASE("ring mismatch is reported") {
  auto a = ring(2, {"x", "y"});
  auto b = ring(3, {"x", "y"});
  try {
    (void)(P(a, "x") + P(b, "y"));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRingMismatch);
  }
}

TEST_CASE("polynomial ring axioms (property)") {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto r = ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = random_poly(r, rng, 5, 3);
      Polynomial g = random_poly(r, rng, 5, 3);
      Polynomial h = random_poly(r, rng, 4, 2);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * g == g * f);
      CHECK((f - f).is_zero());
      CHECK(f + (-f) == Polynomial(r));
      // Freshman's dream and termwise Frobenius agree with repeated products.
      CHECK((f + g).pow(static_cast<std::uint64_t>(p)) ==
            f.pow(static_cast<std::uint64_t>(p)) + g.pow(static_cast<std::uint64_t>(p)));
      CHECK(frobenius_raise(f, 1) == f.pow(static_cast<std::uint64_t>(p)));
      // Round trip through the printer and parser.
      CHECK(P(r, f.to_string()) == f);
    }
  }
}

TEST_CASE("frobenius power overflow is checked") {
  auto r = ring(7, {"x"});
  CHECK_THROWS_AS(frobenius_raise(P(r, "x"), 40), Error);
}
