#include <catch_amalgamated.hpp>

#include "fracinv/favard.hpp"

using namespace fracinv;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (auto& r : v) s.push_back(to_string(r));
  return s;
}

// textbook monic Jacobi coefficients for weight (1-x)^a (1+x)^b
void monic_jacobi(const Rational& a, const Rational& b, int k, Rational& ak, Rational& bk) {
  Rational s = a + b, t = 2 * k + s;
  ak = k == 0 ? Rational((b - a) / (s + 2)) : Rational((b * b - a * a) / (t * (t + 2)));
  if (k == 0)
    bk = 0;
  else if (k == 1)
    bk = 4 * (1 + a) * (1 + b) / ((2 + s) * (2 + s) * (3 + s));
  else
    bk = 4 * Rational(k) * (k + a) * (k + b) * (k + s) / (t * t * (t + 1) * (t - 1));
}

}  // namespace

TEST_CASE("inverse Hermite recurrence and moments", "[favard]") {
  auto r = monic_recurrence(Family::InvHermite, {}, 6);
  CHECK(strs(r.lam) == std::vector<std::string>{"2/1", "-1/2", "-1/1", "-3/2", "-2/1", "-5/2"});
  for (auto& c : r.c) CHECK(c == 0);
  MomentFunctional mf(Family::InvHermite, {}, 8);
  CHECK(strs(mf.moments(4)) == std::vector<std::string>{"2/1", "0/1", "-1/1", "0/1", "3/2"});
  auto Q = mf.monic(4);
  CHECK(Q[2] == Poly{q(1, 2), 0, 1});
  CHECK(Q[4] == Poly{q(3, 4), 0, 3, 0, 1});
  CHECK(mf.apply(Q[2] * Q[2]) == 1);
  auto mu = mf.moments(8);
  for (int k = 1; k <= 8; k += 2) CHECK(mu[k] == 0);
}

TEST_CASE("monic recurrences agree with the exact families", "[favard]") {
  std::vector<std::pair<Family, FamilyParams>> cases{
      {Family::InvHermite, {}},
      {Family::InvLaguerre, {q(1, 2), 0}},
      {Family::InvLaguerre, {q(3, 7), 0}},
      {Family::InvLaguerre, {q(-1, 3), 0}},
      {Family::InvJacobi, {q(1, 2), q(1, 2)}},
      {Family::InvJacobi, {q(1, 3), q(1, 4)}},
      {Family::InvJacobi, {q(0), q(0)}},
  };
  for (auto& [fam, p] : cases) {
    INFO(family_name(fam) << " " << to_string(p.alpha) << "," << to_string(p.beta));
    int N = 12;
    auto r = monic_recurrence(fam, p, N);
    auto direct = recurrence_from_monic(monic_family(fam, N, p));
    for (int n = 0; n < N; ++n) {
      CHECK(r.c[n] == direct.c[n]);
      if (n > 0) CHECK(r.lam[n] == direct.lam[n]);
    }
    MomentFunctional mf(fam, p, N);
    auto Q = mf.monic(N);
    auto M = monic_family(fam, N, p);
    for (int n = 0; n <= N; ++n) CHECK(Q[n] == M[n]);
  }
}

TEST_CASE("inverse Jacobi coefficients", "[favard]") {
  // P~^{(a,b)} = P^{(-a,-b)}: monic coefficients are the classical ones at (-a, -b)
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{q(1, 2), q(1, 2)}, {q(1, 3), q(1, 4)}, {q(2, 5), q(-1, 3)}}) {
    auto r = monic_recurrence(Family::InvJacobi, {a, b}, 10);
    CHECK(r.lam[0] == a + b - 2);
    CHECK(r.c[0] == (a - b) / (2 - a - b));
    for (int n = 0; n < 10; ++n) {
      Rational ak, bk;
      monic_jacobi(-a, -b, n, ak, bk);
      CHECK(r.c[n] == ak);
      if (n > 0) CHECK(r.lam[n] == bk);
    }
  }
  // leading coefficient of P~_n is 2^{-n} C(2n - s, n)
  Rational a = q(1, 3), b = q(1, 4), s = a + b;
  auto F = family_recurrence(Family::InvJacobi, 10, {a, b});
  Rational B = 1;
  for (int n = 1; n <= 10; ++n) {
    B *= (2 * n - s) * (2 * n - s - 1) / (2 * n * (n - s));
    CHECK(F[n].leading() == B);
    CHECK(F[n].leading() == binom(2 * n - s, n) / pow_int(Rational(2), n));
  }
}

TEST_CASE("inverse Laguerre singular parameters", "[favard]") {
  for (int a : {1, 2, 3}) CHECK_THROWS_AS(monic_recurrence(Family::InvLaguerre, {q(a), 0}, 6), ParameterError);
  auto r = monic_recurrence(Family::InvLaguerre, {q(1, 2), 0}, 4);
  CHECK(r.lam[1] == q(1, 2));  // 1 * (1 - 1/2)
  CHECK(r.lam[2] == 3);        // 2 * (2 - 1/2)
  CHECK(r.c[0] == q(-1, 2));
  CHECK_THROWS_AS(monic_recurrence(Family::Hermite, {}, 4), ParameterError);
  CHECK_THROWS_AS(monic_recurrence(Family::InvJacobi, {q(1), q(1)}, 4), ParameterError);  // lam_1 = 0
}

TEST_CASE("quasi-orthogonality", "[favard]") {
  auto h = favard_report(Family::InvHermite, {}, 12);
  CHECK(h.ok());
  CHECK(h.diagonal[2] == 1);
  // not positive definite: signs of L[Q_n^2] do not stay positive
  bool neg = false;
  for (auto& d : h.diagonal) neg = neg || d < 0;
  CHECK(neg);
  auto l = favard_report(Family::InvLaguerre, {q(3, 7), 0}, 10);
  CHECK(l.ok());
  auto j = favard_report(Family::InvJacobi, {q(1, 3), q(1, 4)}, 10);
  CHECK(j.ok());
  CHECK(j.moments[0] < 0);  // lam_1 = a + b - 2
  auto z = favard_report(Family::InvHermite, {}, 0);
  CHECK(z.ok());
  CHECK(z.moments.size() == 1);
  CHECK(z.diagonal[0] == 2);
  CHECK(h.moments_unit[0] == 1);
  CHECK(h.moments_unit[2] == q(-1, 2));
}

TEST_CASE("moment routes agree", "[favard]") {
  for (auto p : std::vector<FamilyParams>{{q(1, 2), 0}, {q(-1, 3), 0}}) {
    MomentFunctional mf(Family::InvLaguerre, p, 20);
    CHECK(mf.moments(20) == mf.moments_jacobi_matrix(20));
  }
  MomentFunctional mf(Family::InvJacobi, {q(1, 2), q(1, 2)}, 16);
  CHECK(mf.moments(16) == mf.moments_jacobi_matrix(16));
  CHECK_THROWS_AS(mf.moments(17), ParameterError);
}
