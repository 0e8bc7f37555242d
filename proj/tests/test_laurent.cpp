#include <random>

#include "doctest.h"
#include "tcknot/errors.hpp"
#include "tcknot/laurent.hpp"

using namespace tcknot;

namespace {

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5), exp(-6, 6), coeff(-4, 4);
  Laurent p;
  for (int i = terms(rng); i > 0; --i) p.add_term(exp(rng), coeff(rng));
  return p;
}

HalfLaurent random_half(std::mt19937& rng) { return HalfLaurent::from_doubled(random_laurent(rng)); }

bool no_zero_terms(const Laurent& p) {
  for (const auto& [e, c] : p.terms())
    if (c == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  const Laurent t = Laurent::monomial(1);
  const Laurent ti = Laurent::monomial(-1);
  CHECK(t * ti == Laurent(1));
  CHECK((t - t).is_zero());
  CHECK((t + 1).pow(2) == Laurent::monomial(2) + Laurent::monomial(1, 2) + 1);
  CHECK(Laurent(0).is_zero());
  CHECK(Laurent::parse("1*t^-1 + -1 + 1*t^1") == ti - 1 + t);
  CHECK((ti - 1 + t).eval_at_one() == 1);
  CHECK((t * t - 1).exact_div(t - 1) == t + 1);
  CHECK_THROWS_AS((t * t + 1).exact_div(t - 1), Error);
}

TEST_CASE("breadth and monic") {
  CHECK(breadth(Laurent(1)) == 0);
  CHECK(is_monic(Laurent(1)));
  CHECK(breadth(Laurent::parse("1*t^-1 + -1 + 1*t^1")) == 2);
  CHECK(is_monic(Laurent::parse("1*t^-1 + -1 + 1*t^1")));
  CHECK(breadth(Laurent::parse("2*t^-1 + -3 + 2*t^1")) == 2);
  CHECK_FALSE(is_monic(Laurent::parse("2*t^-1 + -3 + 2*t^1")));
  CHECK_THROWS(breadth(Laurent()));
  CHECK_THROWS(is_monic(Laurent()));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Laurent::parse("1*t^"), ParseError);
  CHECK_THROWS_AS(Laurent::parse("x"), ParseError);
  CHECK_THROWS_AS(HalfLaurent::parse("t^1/3"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const HalfLaurent a = random_half(rng), b = random_half(rng), c = random_half(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(no_zero_terms((a * b + c).doubled()));
    CHECK(a.invert_variable().invert_variable() == a);
    CHECK(a.mirror_folded() == a.invert_variable().mirror_folded());
  }
}

TEST_CASE("text round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Laurent p = random_laurent(rng);
    CHECK(Laurent::parse(p.to_string()) == p);
    const HalfLaurent h = random_half(rng);
    CHECK(HalfLaurent::parse(h.to_string()) == h);
  }
  const HalfLaurent half = HalfLaurent::monomial(3, -1) + HalfLaurent::monomial(-1, 2);
  CHECK(HalfLaurent::parse(half.to_string()) == half);
}

TEST_CASE("two-variable polynomials") {
  const Laurent2 p = Laurent2::monomial(-4, 0, -1) + Laurent2::monomial(-2, 0, 2) + Laurent2::monomial(-2, 2);
  CHECK(Laurent2::parse(p.to_string()) == p);
  CHECK(Laurent2::parse(p.to_string('a'), 'a') == p);
  CHECK(p.mirror().mirror() == p);
  CHECK(p.mirror_folded() == p.mirror().mirror_folded());
  CHECK(Laurent2(1).to_jones() == HalfLaurent(1));
  // HOMFLY of a trefoil specializes to its Jones polynomial.
  CHECK(p.to_jones() == HalfLaurent::parse("-1*t^-4 + 1*t^-3 + 1*t^-1"));
}
