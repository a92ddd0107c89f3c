#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "adaptive.hpp"
#include "families.hpp"
#include "operator_spec.hpp"
#include "power_form.hpp"
#include "quadrature.hpp"

namespace fracinv {

// Starred bases: classical polynomial times the classical weight, orthogonal for
// the inverse measure.
//   invgauss     e^{-x^2} H_n              d gamma_{-1} = pi^{1/2} e^{x^2} dx
//   invlaguerre  e^{-x} x^a L_n^a          e^{x} x^{-a} dx on (0, inf)
//   invjacobi    (1-x)^a (1+x)^b P_n^{a,b}  (1-x)^{-a} (1+x)^{-b} dx on (-1, 1)
enum class Basis { InvGauss, InvLaguerre, InvJacobi };

struct BasisSpec {
  Basis kind = Basis::InvGauss;
  Rational alpha = 0, beta = 0;

  double a() const { return alpha.get_d(); }
  double b() const { return beta.get_d(); }
};

inline std::string basis_name(const BasisSpec& b) {
  switch (b.kind) {
    case Basis::InvGauss: return "invgauss";
    case Basis::InvLaguerre: return "invlaguerre:" + to_string(b.alpha);
    case Basis::InvJacobi: return "invjacobi:" + to_string(b.alpha) + "," + to_string(b.beta);
  }
  return "?";
}

inline void check_basis(const BasisSpec& b) {
  if (b.kind == Basis::InvLaguerre && !(b.alpha > -1)) throw ParameterError("invlaguerre needs alpha > -1");
  if (b.kind == Basis::InvJacobi && !(b.alpha > -1 && b.beta > -1))
    throw ParameterError("invjacobi needs alpha, beta > -1");
}

namespace detail {

inline Rational parse_param(const std::string& s) {
  if (s.find_first_of(".eE") != std::string::npos) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw ParameterError("bad basis parameter: " + s);
    return from_double(v);
  }
  return parse_rational(s);
}

}  // namespace detail

inline BasisSpec parse_basis(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  BasisSpec b;
  if (name == "invgauss" || name == "invhermite") {
    if (!rest.empty()) throw ParameterError("invgauss takes no parameters");
    b.kind = Basis::InvGauss;
  } else if (name == "invlaguerre") {
    if (rest.empty()) throw ParameterError("invlaguerre needs a parameter, e.g. invlaguerre:1/2");
    b.kind = Basis::InvLaguerre;
    b.alpha = detail::parse_param(rest);
  } else if (name == "invjacobi") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParameterError("invjacobi needs two parameters, e.g. invjacobi:1/2,1/2");
    b.kind = Basis::InvJacobi;
    b.alpha = detail::parse_param(rest.substr(0, comma));
    b.beta = detail::parse_param(rest.substr(comma + 1));
  } else {
    throw ParameterError("unknown basis: " + text);
  }
  check_basis(b);
  return b;
}

inline Family classical_family(const BasisSpec& b) {
  switch (b.kind) {
    case Basis::InvGauss: return Family::Hermite;
    case Basis::InvLaguerre: return Family::Laguerre;
    case Basis::InvJacobi: return Family::Jacobi;
  }
  return Family::Hermite;
}

inline Family inverse_family(const BasisSpec& b) {
  switch (b.kind) {
    case Basis::InvGauss: return Family::InvHermite;
    case Basis::InvLaguerre: return Family::InvLaguerre;
    case Basis::InvJacobi: return Family::InvJacobi;
  }
  return Family::InvHermite;
}

inline Measure classical_measure(const BasisSpec& b) {
  switch (b.kind) {
    case Basis::InvGauss: return Measure::Hermite;
    case Basis::InvLaguerre: return Measure::Laguerre;
    case Basis::InvJacobi: return Measure::Jacobi;
  }
  return Measure::Hermite;
}

// eigenvalue of the inverse-family operator on the n-th starred function,
// as the operator actually acts (see eigencheck_starred)
inline Rational starred_eigenvalue(const BasisSpec& b, int n) {
  switch (b.kind) {
    case Basis::InvGauss: return Rational(-(2 * n + 2));
    case Basis::InvLaguerre: return Rational(-(n + 1));
    case Basis::InvJacobi: return -n * (n + b.alpha + b.beta + 1) - (b.alpha + b.beta);
  }
  return 0;
}

// the values as usually quoted: -(2n+2), -(n+1/2), -n(n+a+b+1)-2
inline Rational stated_starred_eigenvalue(const BasisSpec& b, int n) {
  switch (b.kind) {
    case Basis::InvGauss: return Rational(-(2 * n + 2));
    case Basis::InvLaguerre: return -(n + Rational(1, 2));
    case Basis::InvJacobi: return -n * (n + b.alpha + b.beta + 1) - 2;
  }
  return 0;
}

// positive semigroup multiplier Lambda_n
inline double multiplier(const BasisSpec& b, int n) { return -starred_eigenvalue(b, n).get_d(); }

inline double measure_constant(const BasisSpec& b) { return b.kind == Basis::InvGauss ? std::sqrt(M_PI) : 1.0; }

// ||phi_n||^2 in the inverse measure = kappa * classical squared norm
inline double squared_norm(const BasisSpec& b, int n) {
  using boost::math::lgamma;
  double a = b.a(), bb = b.b();
  switch (b.kind) {
    case Basis::InvGauss: return std::exp(std::log(M_PI) + n * std::log(2.0) + lgamma(n + 1.0));
    case Basis::InvLaguerre: return std::exp(lgamma(n + a + 1) - lgamma(n + 1.0));
    case Basis::InvJacobi: {
      if (n == 0) return measure_mass(Measure::Jacobi, a, bb);
      double s = a + bb;
      double lg = (s + 1) * std::log(2.0) + lgamma(n + a + 1) + lgamma(n + bb + 1) - lgamma(n + s + 1) - lgamma(n + 1.0);
      return std::exp(lg) / (2 * n + s + 1);
    }
  }
  return 0;
}

inline double weight_factor(const BasisSpec& b, double x) {
  switch (b.kind) {
    case Basis::InvGauss: return std::exp(-x * x);
    case Basis::InvLaguerre:
      if (x <= 0) return x == 0 && b.alpha == 0 ? 1.0 : 0.0;
      return std::exp(-x + b.a() * std::log(x));
    case Basis::InvJacobi:
      if (x < -1 || x > 1) return 0.0;
      return std::pow(1 - x, b.a()) * std::pow(1 + x, b.b());
  }
  return 0;
}

// classical P_0 .. P_{N-1} at x, three-term recurrence in double
inline std::vector<double> classical_values(const BasisSpec& b, int N, double x) {
  std::vector<double> p(std::max(N, 0));
  if (N == 0) return p;
  p[0] = 1;
  if (N == 1) return p;
  double a = b.a(), bb = b.b();
  switch (b.kind) {
    case Basis::InvGauss:
      p[1] = 2 * x;
      for (int n = 1; n + 1 < N; ++n) p[n + 1] = 2 * x * p[n] - 2 * n * p[n - 1];
      break;
    case Basis::InvLaguerre:
      p[1] = 1 + a - x;
      for (int n = 1; n + 1 < N; ++n) p[n + 1] = ((2 * n + 1 + a - x) * p[n] - (n + a) * p[n - 1]) / (n + 1);
      break;
    case Basis::InvJacobi: {
      double s = a + bb;
      p[1] = (a + 1) + (s + 2) * (x - 1) / 2;
      for (int n = 1; n + 1 < N; ++n) {
        double c = 2 * n + s;
        double lhs = 2 * (n + 1) * (n + s + 1) * c;
        double A = (c + 1) * ((c + 2) * c * x + a * a - bb * bb);
        double B = 2 * (n + a) * (n + bb) * (c + 2);
        p[n + 1] = (A * p[n] - B * p[n - 1]) / lhs;
      }
      break;
    }
  }
  return p;
}

class Expansion {
 public:
  Expansion(BasisSpec basis, std::vector<double> coeffs) : basis_(std::move(basis)), c_(std::move(coeffs)) {
    check_basis(basis_);
    for (int n = 0; n < size(); ++n) norms_.push_back(squared_norm(basis_, n));
  }

  static Expansion mode(const BasisSpec& b, int n, double c = 1.0) {
    std::vector<double> v(n + 1, 0.0);
    v[n] = c;
    return Expansion(b, std::move(v));
  }

  const BasisSpec& basis() const { return basis_; }
  const std::vector<double>& coeffs() const { return c_; }
  const std::vector<double>& norms() const { return norms_; }
  int size() const { return int(c_.size()); }

  double norm2() const {
    double s = 0;
    for (int n = 0; n < size(); ++n) s += c_[n] * c_[n] * norms_[n];
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  // sum c_n P_n(x), the polynomial part
  double conj_value(double x) const {
    auto p = classical_values(basis_, size(), x);
    double s = 0;
    for (int n = 0; n < size(); ++n) s += c_[n] * p[n];
    return s;
  }

  double operator()(double x) const { return weight_factor(basis_, x) * conj_value(x); }

 private:
  BasisSpec basis_;
  std::vector<double> c_;
  std::vector<double> norms_;
};

inline Expansion random_expansion(const BasisSpec& b, int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> c(modes);
  for (int n = 0; n < modes; ++n) c[n] = g(rng) / std::sqrt(squared_norm(b, n));
  return Expansion(b, std::move(c));
}

// A function handed over in conjugated coordinates: f = weight(x) F(x).
struct Conjugated {
  BasisSpec basis;
  std::function<double(double)> F;
};

inline Conjugated conjugated(const Expansion& e) {
  return {e.basis(), [e](double x) { return e.conj_value(x); }};
}

inline double inner_product(const Conjugated& f, const Conjugated& g, int nodes = 64) {
  if (f.basis.kind != g.basis.kind || f.basis.alpha != g.basis.alpha || f.basis.beta != g.basis.beta)
    throw ContractError("inner product of functions conjugated by different weights");
  if (!f.F || !g.F) throw ContractError("inner product needs conjugated inputs");
  auto rule = gauss_rule(classical_measure(f.basis), nodes, f.basis.a(), f.basis.b());
  return measure_constant(f.basis) * rule.integrate([&](double x) { return f.F(x) * g.F(x); });
}

// ||f||^2 by direct quadrature, exact for the polynomial part once nodes > degree
inline double direct_norm2(const Expansion& e) {
  if (e.size() == 0) return 0;
  auto c = conjugated(e);
  return inner_product(c, c, e.size() + 2);
}

inline double parseval_error(const Expansion& e) {
  double a = e.norm2(), q = direct_norm2(e);
  if (a == 0) return std::abs(q);
  return std::abs(a - q) / a;
}

inline Expansion heat_semigroup(const Expansion& e, double t) {
  if (!(t >= 0)) throw ParameterError("heat semigroup needs t >= 0");
  std::vector<double> c = e.coeffs();
  for (int n = 0; n < e.size(); ++n) c[n] *= std::exp(-t * multiplier(e.basis(), n));
  return Expansion(e.basis(), std::move(c));
}

inline std::vector<double> default_t_grid(int points = 200, double t_min = 1e-6, double t_max = 1e2) {
  std::vector<double> g{0.0};
  double l0 = std::log(t_min), l1 = std::log(t_max);
  for (int i = 0; i < points; ++i) g.push_back(std::exp(l0 + (l1 - l0) * i / (points - 1)));
  return g;
}

namespace detail {

// sup_t |sum c_n e^{-t L_n} P_n(x)|, weight left out
inline double conj_sup(const Expansion& e, double x, const std::vector<double>& grid) {
  auto p = classical_values(e.basis(), e.size(), x);
  std::vector<double> lam(e.size());
  for (int n = 0; n < e.size(); ++n) lam[n] = multiplier(e.basis(), n);
  double best = 0;
  for (double t : grid) {
    double s = 0;
    for (int n = 0; n < e.size(); ++n) s += e.coeffs()[n] * std::exp(-t * lam[n]) * p[n];
    best = std::max(best, std::abs(s));
  }
  return best;
}

}  // namespace detail

inline double maximal_op(const Expansion& e, double x, const std::vector<double>& grid = default_t_grid()) {
  for (double t : grid)
    if (!(t >= 0)) throw ParameterError("t grid must be nonnegative");
  return weight_factor(e.basis(), x) * detail::conj_sup(e, x, grid);
}

struct MaximalNorm {
  double maximal = 0, norm = 0, ratio = 0;
};

inline MaximalNorm maximal_l2(const Expansion& e, const std::vector<double>& grid = default_t_grid(), int nodes = 200) {
  MaximalNorm r;
  r.norm = e.norm();
  if (r.norm == 0) return r;
  auto rule = gauss_rule(classical_measure(e.basis()), nodes, e.basis().a(), e.basis().b());
  double s = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0) continue;
    double m = detail::conj_sup(e, rule.nodes[i], grid);
    s += rule.weights[i] * m * m;
  }
  r.maximal = std::sqrt(measure_constant(e.basis()) * s);
  r.ratio = r.maximal / r.norm;
  return r;
}

// d/dx O^{-1/2}: coefficient c_n goes to -c_n L_n^{-1/2} on mode n+1
inline Expansion riesz(const Expansion& e) {
  if (e.basis().kind != Basis::InvGauss) throw ContractError("Riesz transform is defined for the invgauss basis only");
  std::vector<double> c(e.size() + 1, 0.0);
  for (int n = 0; n < e.size(); ++n) c[n + 1] = -e.coeffs()[n] / std::sqrt(multiplier(e.basis(), n));
  return Expansion(e.basis(), std::move(c));
}

// (d/dx + 2x) O^{-1/2}: c_n goes to 2n c_n L_n^{-1/2} on mode n-1
inline Expansion riesz_star(const Expansion& e) {
  if (e.basis().kind != Basis::InvGauss) throw ContractError("Riesz transform is defined for the invgauss basis only");
  std::vector<double> c(std::max(e.size() - 1, 0), 0.0);
  for (int n = 1; n < e.size(); ++n) c[n - 1] = 2 * n * e.coeffs()[n] / std::sqrt(multiplier(e.basis(), n));
  return Expansion(e.basis(), std::move(c));
}

// exact per-mode gains ||R phi_n||^2 / ||phi_n||^2 and ||R* phi_n||^2 / ||phi_n||^2,
// using ||H*_{n+1}||^2 / ||H*_n||^2 = 2(n+1)
struct RieszGain {
  Rational riesz, riesz_star;
};

inline RieszGain riesz_gain(int n) {
  BasisSpec g;
  Rational lam = -starred_eigenvalue(g, n);
  RieszGain r;
  r.riesz = Rational(2 * (n + 1)) / lam;
  r.riesz_star = n == 0 ? Rational(0) : Rational(4 * n * n) / (lam * 2 * n);
  return r;
}

struct GFunction {
  double closed_form = 0, quadrature = 0, norm = 0;
};

// |t d/dt e^{-tL} f|^2 dt/t. Closed form is ||f||/2 mode by mode; the check runs
// the x-integral on a Gauss rule and the t-integral adaptively.
inline GFunction g_function_norm(const Expansion& e, double tol = 1e-8) {
  GFunction g;
  g.norm = e.norm();
  g.closed_form = g.norm / 2;
  if (g.norm == 0) return g;
  int N = e.size();
  auto rule = gauss_rule(classical_measure(e.basis()), N + 2, e.basis().a(), e.basis().b());
  std::vector<std::vector<double>> P;
  for (double x : rule.nodes) P.push_back(classical_values(e.basis(), N, x));
  std::vector<double> lam(N);
  double lmin = 1e300;
  for (int n = 0; n < N; ++n) {
    lam[n] = multiplier(e.basis(), n);
    if (e.coeffs()[n] != 0) lmin = std::min(lmin, lam[n]);
  }
  if (!(lmin > 0)) throw ContractError("g-function needs positive multipliers");
  double kappa = measure_constant(e.basis());
  auto integrand = [&](double t) {
    double s = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double v = 0;
      for (int n = 0; n < N; ++n) v += e.coeffs()[n] * lam[n] * std::exp(-t * lam[n]) * P[i][n];
      s += rule.weights[i] * v * v;
    }
    return kappa * t * s;
  };
  double T = 60 / lmin;
  // break at the mode time scales so the adaptive driver sees every bump
  std::vector<double> cuts{0.0};
  for (int n = N - 1; n >= 0; --n) {
    double c = 1 / lam[n];
    if (c > cuts.back() * 1.5 && c < T) cuts.push_back(c);
  }
  cuts.push_back(T);
  double total = 0;
  double abs_tol = 1e-15 * g.norm * g.norm;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    auto r = integrate_adaptive(integrand, cuts[k], cuts[k + 1], abs_tol, 1e-13, 4000);
    total += r.value;
  }
  g.quadrature = std::sqrt(std::max(total, 0.0));
  if (std::abs(g.quadrature - g.closed_form) > tol * std::max(1.0, g.closed_form))
    throw ConsistencyError("g-function quadrature " + std::to_string(g.quadrature) + " disagrees with closed form " +
                           std::to_string(g.closed_form));
  return g;
}

struct SpectralSuiteReport {
  std::string basis;
  double lambda0 = 0;
  int trials = 0;
  double worst_contraction = 0;  // max over trials, t of ||e^{-tL}f|| / (e^{-L_0 t} ||f||)
  double worst_maximal_ratio = 0;
  double worst_gfun_error = 0;
  double worst_parseval = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline SpectralSuiteReport spectral_suite(const BasisSpec& b, int trials = 100, int modes = 10, uint64_t seed = 1,
                                          double maximal_bound = 3.0) {
  check_basis(b);
  SpectralSuiteReport rep;
  rep.basis = basis_name(b);
  rep.lambda0 = multiplier(b, 0);
  for (int n = 0; n < modes; ++n)
    if (!(multiplier(b, n) > 0)) throw ParameterError("semigroup multipliers must be positive for " + rep.basis);
  std::mt19937_64 rng(seed);
  const double ts[] = {0.0, 1e-3, 0.1, 0.5, 1.0, 3.0};
  auto grid = default_t_grid();
  for (int k = 0; k < trials; ++k) {
    auto f = random_expansion(b, modes, rng);
    double nf = f.norm();
    for (double t : ts) {
      double r = heat_semigroup(f, t).norm() / (std::exp(-rep.lambda0 * t) * nf);
      rep.worst_contraction = std::max(rep.worst_contraction, r);
    }
    rep.worst_maximal_ratio = std::max(rep.worst_maximal_ratio, maximal_l2(f, grid).ratio);
    try {
      auto g = g_function_norm(f);
      rep.worst_gfun_error = std::max(rep.worst_gfun_error, std::abs(g.quadrature - g.closed_form) / g.closed_form);
    } catch (const ConsistencyError& e) {
      rep.failures.push_back(std::string("trial ") + std::to_string(k) + ": " + e.what());
    }
    rep.worst_parseval = std::max(rep.worst_parseval, parseval_error(f));
    ++rep.trials;
  }
  if (rep.worst_contraction > 1 + 1e-12)
    rep.failures.push_back("contraction bound exceeded: " + std::to_string(rep.worst_contraction));
  if (rep.worst_maximal_ratio > maximal_bound)
    rep.failures.push_back("maximal L2 ratio " + std::to_string(rep.worst_maximal_ratio));
  if (rep.worst_parseval > 1e-8) rep.failures.push_back("Parseval mismatch " + std::to_string(rep.worst_parseval));
  return rep;
}

// Laguerre/Jacobi variant; boundedness is claimed for a > -1 and a, b > 0 respectively
inline SpectralSuiteReport laguerre_jacobi_suite(const BasisSpec& b, int trials = 100, int modes = 10, uint64_t seed = 1) {
  if (b.kind == Basis::InvGauss) throw ParameterError("laguerre_jacobi_suite takes an invlaguerre or invjacobi basis");
  if (b.kind == Basis::InvJacobi && !(b.alpha > 0 && b.beta > 0))
    throw ParameterError("Jacobi suite needs alpha, beta > 0");
  return spectral_suite(b, trials, modes, seed);
}

struct StarredEntry {
  int n = 0;
  Rational actual, stated;
  bool eigen = false;  // operator output is a multiple of the input
};

struct StarredReport {
  std::string basis;
  std::vector<StarredEntry> entries;
  std::vector<std::string> failures;  // not an eigenfunction at all
  std::vector<std::string> stated_mismatches;
  bool eigen_ok() const { return failures.empty(); }
  bool stated_ok() const { return failures.empty() && stated_mismatches.empty(); }
};

// Apply the inverse-family operator to weight * P_n exactly and read off the eigenvalue.
inline StarredReport eigencheck_starred(const BasisSpec& b, int n_max) {
  check_basis(b);
  FamilyParams fp{b.alpha, b.beta};
  auto P = family_recurrence(classical_family(b), n_max, fp);
  auto op = family_operator(inverse_family(b), fp);
  StarredReport rep;
  rep.basis = basis_name(b);
  for (int n = 0; n <= n_max; ++n) {
    PowerForm f;
    switch (b.kind) {
      case Basis::InvGauss: f = ExpQuadForm{-1, P[n]}; break;
      case Basis::InvLaguerre: f = ExpLinForm{-1, b.alpha, P[n]}; break;
      case Basis::InvJacobi: f = two_factor_from_poly(b.alpha, b.beta, P[n]); break;
    }
    PowerForm g = apply_operator(op, f);
    Poly R;
    switch (b.kind) {
      case Basis::InvGauss: R = strip_exp_quad(g, -1); break;
      case Basis::InvLaguerre: R = strip_exp_lin(g, -1, b.alpha); break;
      case Basis::InvJacobi: R = strip_two_factor(g, b.alpha, b.beta); break;
    }
    StarredEntry e;
    e.n = n;
    e.stated = stated_starred_eigenvalue(b, n);
    e.actual = R.is_zero() ? Rational(0) : Rational(R.leading() / P[n].leading());
    e.eigen = R == P[n] * e.actual;
    if (!e.eigen) rep.failures.push_back("n = " + std::to_string(n) + ": not an eigenfunction");
    else if (e.actual != e.stated)
      rep.stated_mismatches.push_back("n = " + std::to_string(n) + ": eigenvalue " + to_string(e.actual) +
                                      ", expected " + to_string(e.stated));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// Gram matrix of phi_0..phi_{N-1} under the inverse measure; returns the worst
// off-diagonal entry relative to sqrt(G_mm G_nn)
inline double orthogonality_defect(const BasisSpec& b, int N) {
  auto rule = gauss_rule(classical_measure(b), N + 1, b.a(), b.b());
  std::vector<std::vector<double>> P;
  for (double x : rule.nodes) P.push_back(classical_values(b, N, x));
  double kappa = measure_constant(b);
  std::vector<std::vector<double>> G(N, std::vector<double>(N, 0.0));
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      double s = 0;
      for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * P[i][m] * P[i][n];
      G[m][n] = kappa * s;
    }
  double worst = 0;
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n)
      if (m != n) worst = std::max(worst, std::abs(G[m][n]) / std::sqrt(G[m][m] * G[n][n]));
  return worst;
}

// E(f) = f e^{-x^2} from L^2(e^{-x^2} dx) to L^2(e^{x^2} dx). Unnormalized
// densities here; the pi^{1/2} of the inner product above would scale both sides.
struct TransferenceCheck {
  double inverse_norm2 = 0, gauss_norm2 = 0;
};

inline TransferenceCheck transference(const PolyD& f) {
  TransferenceCheck r;
  auto rule = gauss_rule(Measure::Hermite, std::max(f.degree(), 0) + 2);
  r.gauss_norm2 = rule.integrate([&](double x) { return f(x) * f(x); });
  // |x| > 25 is below 1e-270 for any sane f, and e^{x^2} would overflow past 26
  auto direct = integrate_adaptive(
      [&](double x) {
        double Ef = f(x) * std::exp(-x * x);
        return Ef * Ef * std::exp(x * x);
      },
      -25, 25, 1e-300, 1e-13, 4000);
  r.inverse_norm2 = direct.value;
  return r;
}

}  // namespace fracinv
