#include <catch_amalgamated.hpp>

#include <random>

#include "fracinv/families.hpp"

using namespace fracinv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Poly random_poly(std::mt19937& g, int deg) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(q(num(g), den(g)));
  return Poly(c);
}

// explicit sums from the classical literature, written independently of
// the recurrence / Rodrigues / generating-function engines
Poly hermite_explicit(int n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (int m = 0; 2 * m <= n; ++m) {
    Rational v = factorial(n) / (factorial(m) * factorial(n - 2 * m)) * pow_int(Rational(2), n - 2 * m);
    c[n - 2 * m] = m % 2 ? -v : v;
  }
  return Poly(c);
}

Poly laguerre_explicit(int n, const Rational& a) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational v = binom(n + a, n - k) / factorial(k);
    c[k] = k % 2 ? -v : v;
  }
  return Poly(c);
}

// H~_n(x) = i^n H_n(ix)
Poly inv_hermite_explicit(int n) {
  Poly h = hermite_explicit(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    if ((n + k) % 2) continue;
    c[k] = ((n + k) / 2) % 2 ? -h[k] : h[k];
  }
  return Poly(c);
}

// L~_n^a(x) = L_n^{-a}(-x)
Poly inv_laguerre_explicit(int n, const Rational& a) {
  Poly l = laguerre_explicit(n, -a);
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = k % 2 ? -l[k] : l[k];
  return Poly(c);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4")) == "-4/1");
  CHECK(to_string(parse_rational(" +7 ")) == "7/1");
  CHECK_THROWS_AS(parse_rational("7/-1"), ParameterError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParameterError);
  CHECK(binom(q(3, 2), 2) == q(3, 8));
  CHECK(pochhammer(q(1, 2), 3) == q(15, 8));
}

TEST_CASE("polynomial basics") {
  Poly z;
  CHECK(z.degree() == Poly::kZeroDegree);
  CHECK((Poly{q(1), q(2), q(0)}).degree() == 1);
  CHECK((Poly{q(1), q(-1)} - Poly{q(1), q(-1)}).is_zero());
  Poly p{q(1), q(2), q(3)};
  CHECK(p.shifted(q(-1)) == Poly{q(2), q(-4), q(3)});
  CHECK(p(q(2)) == q(17));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 g(7);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(g, i % 6), b = random_poly(g, (i + 2) % 5), c = random_poly(g, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("series exp and binomial powers") {
  // exp(t) truncated: 1/k!
  Series t(6);
  t[1] = Poly::constant(1);
  auto e = series_exp(t);
  for (int k = 0; k <= 6; ++k) CHECK(e[k] == Poly::constant(1 / factorial(k)));
  // (1+t)^{1/2} squared is 1+t
  auto r = series_pow1p(t, q(1, 2));
  auto sq = r * r;
  CHECK(sq[0] == Poly::constant(1));
  CHECK(sq[1] == Poly::constant(1));
  for (int k = 2; k <= 6; ++k) CHECK(sq[k].is_zero());
  Series bad(3);
  bad[0] = Poly::constant(1);
  CHECK_THROWS_AS(series_exp(bad), ConsistencyError);
}

TEST_CASE("recurrence examples") {
  CHECK(family_recurrence(Family::InvHermite, 2)[2] == Poly{q(2), q(0), q(4)});
  Rational a = q(3, 7);
  CHECK(family_recurrence(Family::InvLaguerre, 1, {a})[1] == Poly{1 - a, q(1)});
  Rational b = q(1, 4);
  a = q(1, 3);
  CHECK(family_recurrence(Family::InvJacobi, 1, {a, b})[1] == Poly{(b - a) / 2, (2 - a - b) / 2});
  CHECK(family_recurrence(Family::Hermite, 1)[1] == Poly{q(0), q(2)});
}

TEST_CASE("rodrigues examples") {
  CHECK(family_rodrigues(Family::InvHermite, 3) == Poly{q(0), q(-12), q(0), q(-8)});
  Rational a = q(2, 5);
  CHECK(family_rodrigues(Family::InvLaguerre, 2, {a}) ==
        Poly{(a * a - 3 * a + 2) / 2, (4 - 2 * a) / 2, q(1, 2)});
  for (Family f : {Family::InvHermite, Family::InvLaguerre, Family::InvJacobi, Family::Hermite,
                   Family::Laguerre, Family::Jacobi})
    CHECK(family_rodrigues(f, 0, {q(1, 3), q(1, 5)}) == Poly::constant(1));
}

TEST_CASE("generating function examples") {
  CHECK(family_genfun(Family::InvHermite, 2)[2] == Poly{q(2), q(0), q(4)});
  CHECK(family_genfun(Family::InvLaguerre, 0, {q(1, 2)})[0] == Poly::constant(1));
  CHECK(family_genfun(Family::InvJacobi, 1, {q(0), q(0)})[1] == Poly{q(0), q(1)});
}

TEST_CASE("triple construction agreement and closed-form oracles") {
  const int N = 20;
  struct Case {
    Family f;
    FamilyParams p;
  };
  std::vector<Case> cases{{Family::InvHermite, {}},
                          {Family::Hermite, {}},
                          {Family::InvLaguerre, {q(1, 2)}},
                          {Family::InvLaguerre, {q(3, 7)}},
                          {Family::InvLaguerre, {q(-1, 3)}},
                          {Family::Laguerre, {q(1, 2)}},
                          {Family::InvJacobi, {q(1, 2), q(1, 2)}},
                          {Family::InvJacobi, {q(1, 3), q(1, 4)}},
                          {Family::InvJacobi, {q(0), q(0)}},
                          {Family::Jacobi, {q(1, 2), q(-1, 3)}}};
  for (const auto& c : cases) {
    INFO(family_name(c.f) << " alpha=" << to_string(c.p.alpha) << " beta=" << to_string(c.p.beta));
    auto rec = family_recurrence(c.f, N, c.p);
    auto gen = family_genfun(c.f, N, c.p);
    for (int n = 0; n <= N; ++n) {
      INFO("n = " << n);
      CHECK(rec[n] == family_rodrigues(c.f, n, c.p));
      CHECK(rec[n] == gen[n]);
      if (c.f == Family::InvHermite) CHECK(rec[n] == inv_hermite_explicit(n));
      if (c.f == Family::Hermite) CHECK(rec[n] == hermite_explicit(n));
      if (c.f == Family::InvLaguerre) CHECK(rec[n] == inv_laguerre_explicit(n, c.p.alpha));
      if (c.f == Family::Laguerre) CHECK(rec[n] == laguerre_explicit(n, c.p.alpha));
      if (c.f == Family::InvJacobi) CHECK(rec[n] == jacobi_sum_form(n, c.p.alpha, c.p.beta));
    }
  }
}

TEST_CASE("classical Jacobi matches the textbook explicit sum") {
  Rational a = q(1, 2), b = q(-1, 3);
  auto rec = family_recurrence(Family::Jacobi, 8, {a, b});
  Poly xm{q(-1, 2), q(1, 2)}, xp{q(1, 2), q(1, 2)};
  for (int n = 0; n <= 8; ++n) {
    Poly s;
    for (int k = 0; k <= n; ++k) {
      Poly t = Poly::constant(binom(n + a, n - k) * binom(n + b, k));
      for (int i = 0; i < k; ++i) t = t * xm;
      for (int i = 0; i < n - k; ++i) t = t * xp;
      s += t;
    }
    CHECK(rec[n] == s);
  }
}

TEST_CASE("derivative ladder and leading coefficients") {
  auto H = family_recurrence(Family::InvHermite, 20);
  for (int n = 1; n <= 20; ++n) CHECK(H[n].derivative() == H[n - 1] * Rational(-2 * n));
  for (int n = 0; n <= 20; ++n) CHECK(H[n].leading() == pow_int(q(-2), n));
  Rational a = q(1, 3), b = q(1, 4);
  auto P = family_recurrence(Family::InvJacobi, 20, {a, b});
  for (int n = 0; n <= 20; ++n) CHECK(P[n].leading() == binom(2 * n - a - b, n) / pow_int(q(2), n));
}

TEST_CASE("eigen identities") {
  auto apply = apply_operator(ops::inv_hermite(), Poly{q(2), q(0), q(4)});
  CHECK(apply == Poly{q(8), q(0), q(16)});
  CHECK(apply_operator(ops::inv_laguerre(q(1, 2)), Poly()).is_zero());
  Rational a = q(1, 3), b = q(1, 4);
  Poly P1 = family_recurrence(Family::InvJacobi, 1, {a, b})[1];
  CHECK(apply_operator(ops::inv_jacobi(a, b), P1) == P1 * (a + b - 2));

  auto r = eigencheck(Family::InvHermite, 20);
  CHECK(r.ok());
  CHECK(r.entries[0].lambda == 0);
  CHECK(r.entries[20].lambda == 40);
  auto l = eigencheck(Family::InvLaguerre, 20, {q(3, 7)});
  CHECK(l.ok());
  CHECK(l.entries[0].lambda == 0);
  CHECK(l.entries[7].lambda == 7);
  CHECK(eigencheck(Family::InvJacobi, 20, {q(1, 2), q(1, 2)}).ok());
  CHECK(eigencheck(Family::Hermite, 12).ok());
  CHECK(eigencheck(Family::Laguerre, 12, {q(2, 3)}).ok());
  CHECK(eigencheck(Family::Jacobi, 12, {q(2, 3), q(-1, 5)}).ok());
}

TEST_CASE("hypergeometric form and endpoint values") {
  Rational a = q(2, 5), b = q(1, 5);
  auto P = family_recurrence(Family::InvJacobi, 10, {a, b});
  for (int n = 0; n <= 10; ++n) {
    CHECK(hypergeom_form(n, a, b) == P[n]);
    CHECK(P[n](q(1)) == binom(n - a, n));
    auto e = endpoint_values(n, a, b);
    CHECK(e.at_plus_one == binom(n - a, n));
  }
  // x/2, the closed-form P~_1 at (1/2,1/2)
  CHECK(hypergeom_form(1, q(1, 2), q(1, 2)) == Poly{q(0), q(1, 2)});
  CHECK(hypergeom_form(0, q(3, 4), q(1)) == Poly::constant(1));
  CHECK(endpoint_values(1, q(1, 3), q(0)).at_plus_one == q(2, 3));
  CHECK(endpoint_values(0, q(1, 3), q(1, 7)).at_minus_one == q(1));
  CHECK(endpoint_values(2, q(0), q(1, 2)).at_minus_one == q(3, 8));
  CHECK_THROWS_AS(hypergeom_form(3, q(2), q(0)), ParameterError);
}

TEST_CASE("ODE equivalence for the Jacobi pair") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(jacobi_ode_equivalence(n, q(1, 3), q(1, 4)));
    CHECK(jacobi_ode_equivalence(n, q(-1, 2), q(2, 5)));
  }
}

TEST_CASE("singular recurrence pivots are named") {
  // a + b = 2 makes 2(n+1)(n-a-b+1)(2n-a-b) vanish at n = 1
  try {
    family_recurrence(Family::InvJacobi, 4, {q(1), q(1)});
    FAIL("expected a pivot error");
  } catch (const PivotError& e) {
    CHECK(e.step == 1);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
  // a + b = 0 is fine: the n = 0 step uses the closed form
  CHECK_NOTHROW(family_recurrence(Family::InvJacobi, 20, {q(0), q(0)}));
}

TEST_CASE("power form rejects non-polynomial residue") {
  PowerForm f = ExpLinForm{q(1), q(1, 2), Poly::constant(1)};
  CHECK_THROWS_AS(strip_exp_lin(f, q(1), q(0)), ConsistencyError);
  CHECK_THROWS_AS(strip_exp_quad(f, q(1)), ConsistencyError);
}
