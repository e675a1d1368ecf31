#include "hitchin/generators.hpp"
#include "hitchin/local_field.hpp"

#include "doctest.h"

using namespace hitchin;

namespace {

FqPoly random_poly(Rng& rng, const Fq& f, int max_deg)
{
  std::vector<int> c(static_cast<std::size_t>(uniform(rng, 0, max_deg + 1)));
  for (auto& x : c)
    x = static_cast<int>(uniform(rng, 0, f.q() - 1));
  return FqPoly(&f, c);
}

RatFunc random_ratfunc(Rng& rng, const Fq& f, int max_deg)
{
  FqPoly den;
  do
    den = random_poly(rng, f, max_deg);
  while (den.is_zero());
  return RatFunc(random_poly(rng, f, max_deg), den);
}

long power(long b, int e)
{
  long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

}  // namespace

TEST_CASE("finite field axioms")
{
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Fq& f = field(q);
    CHECK(f.q() == q);
    long squares = 0;
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a != 0)
        CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; c += 2) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
      squares += f.is_square(a);
    }
    CHECK(squares == (q % 2 ? (q + 1) / 2 : q));
    int x = 0;
    for (int i = 0; i < f.p(); ++i)
      x = f.add(x, 1);
    CHECK(x == 0);
  }
  CHECK_THROWS(Fq(6));
  CHECK_THROWS(Fq(11));
}

TEST_CASE("irreducible counts satisfy q^d = sum of e N_e")
{
  for (int q : {2, 3, 4, 5}) {
    const Fq& f = field(q);
    for (int d = 1; d <= (q <= 3 ? 4 : 2); ++d) {
      long total = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0)
          total += e * static_cast<long>(monic_irreducibles(f, e).size());
      CHECK(total == power(q, d));
      CHECK(static_cast<long>(monic_irreducibles(f, d).size()) == necklace_count(q, d));
      CHECK(static_cast<long>(monic_polys(f, d).size()) == power(q, d));
    }
  }
}

TEST_CASE("polynomial arithmetic and factorization")
{
  Rng rng(89);
  for (int q : {3, 4, 5}) {
    const Fq& f = field(q);
    for (int k = 0; k < 40; ++k) {
      FqPoly a = random_poly(rng, f, 5), b = random_poly(rng, f, 3);
      if (b.is_zero())
        continue;
      auto [quot, rem] = a.divmod(b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
      if (a.is_zero())
        continue;
      FqPoly prod = FqPoly::constant(f, a.lead());
      for (const auto& [p, m] : factor(a)) {
        CHECK(is_irreducible(p));
        CHECK(p.is_monic());
        prod = prod * p.pow(m);
      }
      CHECK(prod == a);
      FqPoly g = gcd(a, b);
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
    }
    FqPoly m = monic_irreducibles(f, 2).front();
    for (int k = 0; k < 20; ++k) {
      FqPoly a = random_poly(rng, f, 4) % m;
      if (a.is_zero())
        continue;
      CHECK(((a * inverse_mod(a, m)) % m) == FqPoly::constant(f, 1));
    }
  }
}

TEST_CASE("rational functions")
{
  Rng rng(97);
  const Fq& f = field(5);
  for (int k = 0; k < 50; ++k) {
    RatFunc a = random_ratfunc(rng, f, 3), b = random_ratfunc(rng, f, 3);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK((a * b) / b == a);
      CHECK(b * b.inverse() == RatFunc::constant(f, 1));
    }
    CHECK(a.at_inverse_variable().at_inverse_variable() == a);
    CHECK(parse_ratfunc(a.to_string("t"), f) == a);
    if (!a.is_zero() && !b.is_zero()) {
      FqPoly t = FqPoly::x(f);
      CHECK((a * b).valuation(t) == a.valuation(t) + b.valuation(t));
      CHECK((a * b).valuation_at_infinity() == a.valuation_at_infinity() + b.valuation_at_infinity());
      CHECK(a.valuation_at_infinity() == a.at_inverse_variable().valuation(t));
    }
  }
  CHECK(parse_ratfunc("(t+1)^2/t^2", f) == parse_ratfunc("1 + 2/t + t^(-2)", f));
  CHECK(parse_ratfunc("7*t", f) == parse_ratfunc("2*t", f));
  CHECK_THROWS(parse_ratfunc("t+", f));
  CHECK_THROWS(parse_ratfunc("1/(t-t)", f));
  CHECK_THROWS(parse_ratfunc("s+1", f));
}

TEST_CASE("places and local expansions")
{
  const Fq& f = field(3);
  auto ps = places(f, 2);
  CHECK(ps.size() == 3 + 3 + 1);
  CHECK(ps.back().infinite);
  CHECK(ps.back().key() == "inf");
  CHECK(ps.front() < ps.back());
  Rng rng(101);
  for (const auto& v : ps)
    for (int k = 0; k < 20; ++k) {
      RatFunc x = localize(random_ratfunc(rng, f, 3), v);
      if (x.is_zero())
        continue;
      int val = local_val(x, v);
      auto digits = expansion(x, v, val, val + 4);
      REQUIRE(digits.size() == 4);
      CHECK(!digits[0].is_zero());
      RatFunc rest = x - from_expansion(digits, v, val);
      CHECK((rest.is_zero() || local_val(rest, v) >= val + 4));
      CHECK(residue_reps(v).size() == static_cast<std::size_t>(power(3, v.degree())));
    }
}

TEST_CASE("Iwasawa factors and Hermite forms")
{
  Rng rng(103);
  const Fq& f = field(3);
  for (const auto& v : places(f, 2))
    for (int k = 0; k < 30; ++k) {
      RatFunc a = localize(random_ratfunc(rng, f, 2), v), b = localize(random_ratfunc(rng, f, 2), v);
      if (a.is_zero())
        continue;
      Mat2 g{a, b, RatFunc::constant(f, 0), a.inverse()};
      // Mix columns by an element of SL_2(O_v).
      RatFunc c = RatFunc::from_poly(random_poly(rng, f, 2));
      Mat2 k1{RatFunc::constant(f, 1), RatFunc::constant(f, 0), c, RatFunc::constant(f, 1)};
      Mat2 gk = g * k1;
      for (const auto& iw : {iwasawa_upper(gk, v), iwasawa_lower(gk, v)}) {
        CHECK(integral(iw.k, v));
        CHECK(iw.k.det() == RatFunc::constant(f, 1));
        CHECK(gk * iw.k == iw.reduced);
        CHECK(iw.reduced.a * iw.reduced.d == RatFunc::constant(f, 1));
      }
      CHECK(iwasawa_upper(gk, v).reduced.c.is_zero());
      CHECK(iwasawa_lower(gk, v).reduced.b.is_zero());
      auto h = hermite_form(gk, v);
      CHECK(h == hermite_form(g, v));
      Mat2 rep = hermite_matrix(v, h.a, h.u);
      CHECK(integral(g.inverse() * rep, v));
      CHECK(integral(rep.inverse() * g, v));
      CHECK(torus_height(iwasawa_upper(gk, v).x, v) == Vec{-Q(v.degree()) * h.a, Q(v.degree()) * h.a});
    }
}
