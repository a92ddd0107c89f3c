#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "operator_spec.hpp"
#include "series.hpp"

namespace fracinv {

enum class Family { InvHermite, InvLaguerre, InvJacobi, Hermite, Laguerre, Jacobi };

struct FamilyParams {
  Rational alpha{0};
  Rational beta{0};
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::InvHermite: return "inv-hermite";
    case Family::InvLaguerre: return "inv-laguerre";
    case Family::InvJacobi: return "inv-jacobi";
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::InvHermite, Family::InvLaguerre, Family::InvJacobi, Family::Hermite,
                   Family::Laguerre, Family::Jacobi})
    if (family_name(f) == s) return f;
  throw ParameterError("unknown family '" + std::string(s) + "'");
}

inline bool is_inverse(Family f) {
  return f == Family::InvHermite || f == Family::InvLaguerre || f == Family::InvJacobi;
}

namespace detail {

// classical Jacobi P^{(a,b)} is the inverse family at (-a,-b); everything
// Jacobi-shaped goes through the inverse code path with these parameters
inline FamilyParams jacobi_inverse_params(Family f, const FamilyParams& p) {
  if (f == Family::Jacobi) return {-p.alpha, -p.beta};
  return p;
}

inline std::vector<Poly> inv_jacobi_recurrence(int n, const Rational& a, const Rational& b) {
  std::vector<Poly> F{Poly::constant(1)};
  if (n == 0) return F;
  Rational s = a + b;
  F.push_back(Poly{(b - a) / 2, (2 - s) / 2});
  for (int k = 1; k < n; ++k) {
    Rational pivot = 2 * Rational(k + 1) * (k - s + 1) * (2 * k - s);
    if (pivot == 0)
      throw PivotError(k, "2(n+1)(n-a-b+1)(2n-a-b) = 0 at a+b = " + to_string(s));
    Rational m = 2 * k - s;
    Poly lin{(m + 1) * (a * a - b * b), (m + 1) * (m + 2) * m};
    Rational back = -2 * (k - a) * (k - b) * (m + 2);
    F.push_back((lin * F[k] + F[k - 1] * back) / pivot);
  }
  return F;
}

}  // namespace detail

inline std::vector<Poly> family_recurrence(Family fam, int n, const FamilyParams& params = {}) {
  if (n < 0) throw ParameterError("n must be >= 0");
  const Rational& a = params.alpha;
  std::vector<Poly> F{Poly::constant(1)};
  Poly prev;  // F_{-1}
  switch (fam) {
    case Family::InvHermite:
    case Family::Hermite: {
      Rational sgn = fam == Family::InvHermite ? -1 : 1;
      for (int k = 0; k < n; ++k) {
        Poly next = Poly::x() * F[k] * (2 * sgn) - prev * (2 * k * sgn);
        prev = F[k];
        F.push_back(std::move(next));
      }
      return F;
    }
    case Family::InvLaguerre:
      for (int k = 0; k < n; ++k) {
        Poly next = (Poly{1 + 2 * k - a, 1} * F[k] - prev * (k - a)) / Rational(k + 1);
        prev = F[k];
        F.push_back(std::move(next));
      }
      return F;
    case Family::Laguerre:
      for (int k = 0; k < n; ++k) {
        Poly next = (Poly{2 * k + 1 + a, -1} * F[k] - prev * (k + a)) / Rational(k + 1);
        prev = F[k];
        F.push_back(std::move(next));
      }
      return F;
    case Family::InvJacobi:
    case Family::Jacobi: {
      auto p = detail::jacobi_inverse_params(fam, params);
      return detail::inv_jacobi_recurrence(n, p.alpha, p.beta);
    }
  }
  return F;
}

inline Poly family_rodrigues(Family fam, int n, const FamilyParams& params = {}) {
  if (n < 0) throw ParameterError("n must be >= 0");
  Rational sign = n % 2 ? -1 : 1;
  switch (fam) {
    case Family::InvHermite:
    case Family::Hermite: {
      Rational c = fam == Family::InvHermite ? 1 : -1;
      auto d = derivative(PowerForm{ExpQuadForm{c, Poly::constant(1)}}, n);
      return strip_exp_quad(d, c) * sign;
    }
    case Family::InvLaguerre:
    case Family::Laguerre: {
      // inverse: e^{-x} x^a D^n(e^x x^{n-a}) / n!, classical: e^x x^{-a} D^n(e^{-x} x^{n+a}) / n!
      Rational c = fam == Family::InvLaguerre ? 1 : -1;
      Rational a = fam == Family::InvLaguerre ? -params.alpha : params.alpha;
      auto d = derivative(PowerForm{ExpLinForm{c, n + a, Poly::constant(1)}}, n);
      return strip_exp_lin(d, c, a) / factorial(n);
    }
    case Family::InvJacobi:
    case Family::Jacobi: {
      auto p = detail::jacobi_inverse_params(fam, params);
      TwoFactorForm base{n - p.alpha, n - p.beta, {}};
      base.a[{0, 0}] = 1;
      auto d = derivative(PowerForm{base}, n);
      return strip_two_factor(d, -p.alpha, -p.beta) * (sign / (pow_int(Rational(2), n) * factorial(n)));
    }
  }
  return {};
}

namespace detail {

inline std::vector<Poly> genfun_coeffs(Family fam, int order, const FamilyParams& params) {
  auto x = Poly::x();
  auto one = Poly::constant(1);
  switch (fam) {
    case Family::InvHermite:
    case Family::Hermite: {
      Rational sgn = fam == Family::InvHermite ? -1 : 1;
      Series s(order);
      if (order >= 1) s[1] = x * (2 * sgn);
      if (order >= 2) s[2] = Poly::constant(-sgn);
      auto e = series_exp(s);
      std::vector<Poly> out;
      for (int k = 0; k <= order; ++k) out.push_back(e[k] * factorial(k));
      return out;
    }
    case Family::InvLaguerre:
    case Family::Laguerre: {
      // (1-t)^{r} exp(sgn x t/(1-t)), r = a-1 (inverse) or -a-1 (classical)
      bool inv = fam == Family::InvLaguerre;
      Rational r = inv ? Rational(params.alpha - 1) : Rational(-params.alpha - 1);
      Series geo(order), minus_t(order);
      for (int k = 1; k <= order; ++k) geo[k] = inv ? x : -x;
      if (order >= 1) minus_t[1] = Poly::constant(-1);
      return (series_pow1p(minus_t, r) * series_exp(geo)).coeffs();
    }
    case Family::InvJacobi:
    case Family::Jacobi: {
      auto p = jacobi_inverse_params(fam, params);
      Series v(order), t(order);
      if (order >= 1) {
        v[1] = x * Rational(-2);
        t[1] = one;
      }
      if (order >= 2) v[2] = one;
      Series R = series_pow1p(v, Rational(1, 2));
      Series Rinv = series_pow1p(v, Rational(-1, 2));
      Series Rm1 = R;
      Rm1[0] = Poly();
      Series u = (Rm1 - t) * Rational(1, 2);
      Series w = (Rm1 + t) * Rational(1, 2);
      return (series_pow1p(u, p.alpha) * series_pow1p(w, p.beta) * Rinv).coeffs();
    }
  }
  return {};
}

}  // namespace detail

inline constexpr int kGenfunGuard = 4;

inline std::vector<Poly> family_genfun(Family fam, int n_max, const FamilyParams& params = {}) {
  if (n_max < 0) throw ParameterError("n_max must be >= 0");
  auto lo = detail::genfun_coeffs(fam, n_max + kGenfunGuard, params);
  auto hi = detail::genfun_coeffs(fam, n_max + kGenfunGuard + 2, params);
  for (int k = 0; k <= n_max + kGenfunGuard; ++k)
    if (lo[k] != hi[k])
      throw ConsistencyError("generating function guard terms disagree at t^" + std::to_string(k));
  lo.resize(n_max + 1);
  return lo;
}

// terminating 2F1 form of the inverse Jacobi polynomial
inline Poly hypergeom_form(int n, const Rational& a, const Rational& b) {
  Rational s = a + b;
  Poly z{Rational(1, 2), Rational(-1, 2)};  // (1-x)/2
  Poly acc, zk = Poly::constant(1);
  for (int k = 0; k <= n; ++k) {
    Rational den = pochhammer(1 - a, k);
    if (den == 0) throw ParameterError("Pochhammer (1-alpha)_" + std::to_string(k) + " vanishes");
    Rational term = binom(Rational(n), k) * pochhammer(n - s + 1, k) / den;
    if (k % 2) term = -term;
    acc += zk * term;
    zk = zk * z;
  }
  return acc * binom(n - a, n);
}

// sum_k C(n-a,k) C(n-b,n-k) ((x-1)/2)^{n-k} ((x+1)/2)^k
inline Poly jacobi_sum_form(int n, const Rational& a, const Rational& b) {
  Poly xm{Rational(-1, 2), Rational(1, 2)}, xp{Rational(1, 2), Rational(1, 2)};
  Poly acc;
  for (int k = 0; k <= n; ++k) {
    Poly t = Poly::constant(binom(n - a, k) * binom(n - b, n - k));
    for (int i = 0; i < n - k; ++i) t = t * xm;
    for (int i = 0; i < k; ++i) t = t * xp;
    acc += t;
  }
  return acc;
}

struct EndpointValues {
  Rational at_plus_one, at_minus_one;
};

inline EndpointValues endpoint_values(int n, const Rational& a, const Rational& b) {
  EndpointValues e{binom(n - a, n), binom(n - b, n) * (n % 2 ? -1 : 1)};
  auto P = family_recurrence(Family::InvJacobi, n, {a, b}).back();
  if (P(Rational(1)) != e.at_plus_one || P(Rational(-1)) != e.at_minus_one)
    throw ConsistencyError("endpoint values disagree with the polynomial at n = " + std::to_string(n));
  return e;
}

inline OperatorSpec family_operator(Family fam, const FamilyParams& p) {
  switch (fam) {
    case Family::InvHermite: return ops::inv_hermite();
    case Family::InvLaguerre: return ops::inv_laguerre(p.alpha);
    case Family::InvJacobi: return ops::inv_jacobi(p.alpha, p.beta);
    case Family::Hermite: return ops::hermite();
    case Family::Laguerre: return ops::laguerre(p.alpha);
    case Family::Jacobi: return ops::jacobi(p.alpha, p.beta);
  }
  return {};
}

inline Rational family_eigenvalue(Family fam, int n, const FamilyParams& p) {
  Rational s = p.alpha + p.beta;
  switch (fam) {
    case Family::InvHermite: return 2 * n;
    case Family::InvLaguerre: return n;
    case Family::InvJacobi: return -n * (n - s + 1);
    case Family::Hermite: return 2 * n;
    case Family::Laguerre: return -n;
    case Family::Jacobi: return -n * (n + s + 1);
  }
  return 0;
}

struct EigenEntry {
  int n;
  Rational lambda;
  Poly residual;
};

struct EigenReport {
  std::vector<EigenEntry> entries;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline EigenReport eigencheck(Family fam, int n_max, const FamilyParams& params = {}) {
  auto F = family_recurrence(fam, n_max, params);
  auto op = family_operator(fam, params);
  EigenReport rep;
  for (int n = 0; n <= n_max; ++n) {
    Rational lam = family_eigenvalue(fam, n, params);
    Poly res = apply_operator(op, F[n]) - F[n] * lam;
    if (!res.is_zero())
      rep.failures.push_back("n = " + std::to_string(n) + ": residual " + to_string(res));
    rep.entries.push_back({n, lam, std::move(res)});
  }
  return rep;
}

// y = P~_n solves the inverse Jacobi equation iff Y = (1-x)^{-a}(1+x)^{-b} y solves
// (1-x^2)Y'' + [b - a - (a+b+2)x]Y' + (n+1)(n-a-b)Y = 0
inline bool jacobi_ode_equivalence(int n, const Rational& a, const Rational& b) {
  Rational s = a + b;
  auto y = family_recurrence(Family::InvJacobi, n, {a, b})[n];
  OperatorSpec lhs = ops::inv_jacobi(a, b);
  lhs.p0 = Poly::constant(n * (n - s + 1));
  if (!apply_operator(lhs, y).is_zero()) return false;
  OperatorSpec rhs{Poly{1, 0, -1}, Poly{b - a, -(s + 2)}, Poly::constant((n + 1) * (n - s))};
  PowerForm Y = two_factor_from_poly(-a, -b, y);
  auto r = apply_operator(rhs, Y);
  return strip_two_factor(r, -a - 2, -b - 2).is_zero();
}

}  // namespace fracinv
