#include "doctest.h"
#include "pqs/error.hpp"
#include "pqs/local_differentials.hpp"

using namespace pqs;

namespace {

SourceSection monomial(int m, int i, int j, Rational c = 1)
{
  SourceSection s;
  s.m = m;
  s.add(i, j, c);
  return s;
}

Rational binomial(int n, int k)
{
  Rational r = 1;
  for (int t = 1; t <= k; ++t)
    r = r * (n - k + t) / t;
  return r;
}

Rational pow2(int e)
{
  Rational r = 1;
  for (int t = 0; t < e; ++t)
    r *= 2;
  return r;
}

// sum_k C(m,k) / 2^(2m-k) mu2^(m-k) (a o phi) mu1^-(m-k) dmu1^(2m-k) dmu2^k, a o phi = mu1^((i+j)/2) mu2^j
PuiseuxDifferential closed_form(int m, int i, int j)
{
  PuiseuxDifferential d;
  for (int k = 0; k <= m; ++k) {
    PuiseuxMonomial mono;
    mono.p = make_rational(i + j, 2) - (m - k);
    mono.q = m - k + j;
    mono.alpha = 2 * m - k;
    mono.beta = k;
    d.add(mono, binomial(m, k) / pow2(2 * m - k));
  }
  return d;
}

PuiseuxMonomial mono(Rational p, int q, int alpha, int beta)
{
  return PuiseuxMonomial{p, q, alpha, beta};
}

} // namespace

TEST_CASE("invariance_check")
{
  CHECK(invariance_check(monomial(1, 0, 0)));
  CHECK_FALSE(invariance_check(monomial(1, 1, 0)));
  auto s = monomial(1, 1, 1);
  s.add(2, 0, 3);
  CHECK(invariance_check(s));
}

TEST_CASE("gamma_pullback examples for m = 1")
{
  PuiseuxDifferential one;
  one.add(mono(-1, 1, 2, 0), make_rational(1, 4));
  one.add(mono(0, 0, 1, 1), make_rational(1, 2));
  CHECK(gamma_pullback(monomial(1, 0, 0)) == one);

  PuiseuxDifferential z1sq;
  z1sq.add(mono(0, 1, 2, 0), make_rational(1, 4));
  z1sq.add(mono(1, 0, 1, 1), make_rational(1, 2));
  CHECK(gamma_pullback(monomial(1, 2, 0)) == z1sq);

  PuiseuxDifferential z1z2;
  z1z2.add(mono(0, 2, 2, 0), make_rational(1, 4));
  z1z2.add(mono(1, 1, 1, 1), make_rational(1, 2));
  CHECK(gamma_pullback(monomial(1, 1, 1)) == z1z2);

  CHECK(is_holomorphic(z1sq));
  CHECK_FALSE(is_holomorphic(one));
  CHECK(is_holomorphic(PuiseuxDifferential{}));
}

TEST_CASE("holomorphic iff i + j >= 2m, and the closed form, for m <= 3, i, j <= 8")
{
  for (int m = 1; m <= 3; ++m)
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        if ((i + j) % 2)
          continue;
        INFO("m=" << m << " i=" << i << " j=" << j);
        const auto d = gamma_pullback(monomial(m, i, j));
        CHECK(is_holomorphic(d) == (i + j >= 2 * m));
        CHECK(d == closed_form(m, i, j));
        CHECK(d.degree() == 2 * m);
        CHECK(*vanishing_order(monomial(m, i, j)) == make_rational(i + j, 2));
      }
}

TEST_CASE("gamma_pullback is linear")
{
  for (int m = 1; m <= 3; ++m) {
    auto s1 = monomial(m, 2, 0, 3);
    s1.add(1, 3, make_rational(-1, 2));
    auto s2 = monomial(m, 0, 4, 5);
    s2.add(2, 0, 7);
    SourceSection sum;
    sum.m = m;
    for (const auto* s : {&s1, &s2})
      for (const auto& [ij, c] : s->terms)
        sum.add(ij.first, ij.second, c);
    CHECK(gamma_pullback(sum) == gamma_pullback(s1) + gamma_pullback(s2));
  }
  // a cancelled term drops out
  auto s = monomial(1, 2, 0);
  s.add(2, 0, -1);
  CHECK(s.terms.empty());
  CHECK(gamma_pullback(s).is_zero());
}

TEST_CASE("only the node chart is supported")
{
  CHECK_THROWS_AS(gamma_pullback(monomial(1, 0, 0), SingularityType::make(3, 1)),
                  UnsupportedError);
}

TEST_CASE("non-invariant input is allowed and gives half-integer exponents")
{
  auto d = gamma_pullback(monomial(1, 1, 0));
  CHECK_FALSE(is_holomorphic(d));
  bool fractional = false;
  for (const auto& [mo, c] : d.terms())
    fractional = fractional || !is_integer(mo.p);
  CHECK(fractional);
}

TEST_CASE("vanishing_conditions")
{
  CHECK(vanishing_conditions(5, 0) == 0);
  CHECK(vanishing_conditions(1, 2) == 3);
  CHECK(vanishing_conditions(3, 2) == 21);
  for (int m = 1; m <= 20; ++m)
    CHECK(vanishing_conditions(m, 2) == 2 * m * m + m);
  // the count dominates the m^2 invariant monomials of degree < 2m at one node,
  // so the certificate stays a lower bound
  for (int m = 1; m <= 20; ++m) {
    long long count = 0;
    for (int i = 0; i < 2 * m; ++i)
      for (int j = 0; i + j < 2 * m; ++j)
        count += (i + j) % 2 == 0;
    CHECK(count == m * m);
    CHECK(Rational(count) <= vanishing_conditions(m, 1));
  }
}

TEST_CASE("bigness certificate")
{
  for (int m = 2; m <= 40; ++m)
    CHECK(bigness_lower_bound(m, 6, 1, 2) == m * m - 4 * m + 1);
  auto c = bigness_certificate(6, 1, 2);
  REQUIRE(c);
  CHECK(c->m == 4);
  CHECK(c->value == 1);

  auto beauville = bigness_certificate(8, 1, 0);
  REQUIRE(beauville);
  CHECK(beauville->m == 2);
  CHECK(beauville->value == 9);

  CHECK_FALSE(bigness_certificate(4, 5, 36));

  // quadratic growth with leading coefficient 1
  const Rational big = bigness_lower_bound(10000, 6, 1, 2) / Rational(10000LL * 10000LL);
  CHECK(big > make_rational(99, 100));
  CHECK(big < 1);
  CHECK_THROWS_AS(bigness_lower_bound(1, 6, 1, 2), ValidationError);
}

TEST_CASE("section parser")
{
  auto s = parse_section("z1*z2 + 3*z1^2 - 1/2*z2^4", 2);
  CHECK(s.m == 2);
  CHECK(s.terms.at({1, 1}) == 1);
  CHECK(s.terms.at({2, 0}) == 3);
  CHECK(s.terms.at({0, 4}) == make_rational(-1, 2));
  CHECK(parse_section("1", 1).terms.at({0, 0}) == 1);
  CHECK_THROWS_AS(parse_section("z3", 1), ParseError);
  CHECK_THROWS_AS(parse_section("z1 +", 1), ParseError);
}
