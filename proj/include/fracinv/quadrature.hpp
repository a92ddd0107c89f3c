#pragma once

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "adaptive.hpp"
#include "rational.hpp"

namespace fracinv {

enum class Measure { Hermite, Laguerre, Jacobi };

inline std::string measure_name(Measure m) {
  switch (m) {
    case Measure::Hermite: return "hermite";
    case Measure::Laguerre: return "laguerre";
    case Measure::Jacobi: return "jacobi";
  }
  return "?";
}

// Hermite: e^{-x^2} on R; Laguerre: x^a e^{-x} on (0,inf); Jacobi: (1-x)^a (1+x)^b on (-1,1)
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Measure measure = Measure::Hermite;
  double alpha = 0, beta = 0;

  template <class F>
  double integrate(F&& f) const {
    double s = 0;
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

inline double measure_mass(Measure m, double a = 0, double b = 0) {
  using boost::math::tgamma;
  switch (m) {
    case Measure::Hermite: return std::sqrt(M_PI);
    case Measure::Laguerre: return tgamma(a + 1);
    case Measure::Jacobi: return std::pow(2.0, a + b + 1) * boost::math::beta(a + 1, b + 1);
  }
  return 0;
}

namespace detail {

// monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
struct MonicCoeffs {
  std::vector<double> a, b;  // b[0] unused
};

inline MonicCoeffs monic_coeffs(Measure m, int N, double alpha, double beta) {
  MonicCoeffs c;
  c.a.resize(N);
  c.b.resize(N);
  switch (m) {
    case Measure::Hermite:
      for (int k = 0; k < N; ++k) {
        c.a[k] = 0;
        c.b[k] = 0.5 * k;
      }
      break;
    case Measure::Laguerre:
      for (int k = 0; k < N; ++k) {
        c.a[k] = 2.0 * k + alpha + 1;
        c.b[k] = k * (k + alpha);
      }
      break;
    case Measure::Jacobi: {
      // exact rational evaluation of the textbook formulas, rounded once
      Rational A = from_double(alpha), B = from_double(beta), S = A + B;
      for (int k = 0; k < N; ++k) {
        Rational ak, bk(0);
        if (k == 0) {
          ak = (B - A) / (S + 2);
        } else {
          Rational t = 2 * k + S;
          ak = (B * B - A * A) / (t * (t + 2));
        }
        if (k == 1) {
          bk = 4 * (1 + A) * (1 + B) / ((2 + S) * (2 + S) * (3 + S));
        } else if (k > 1) {
          Rational t = 2 * k + S;
          bk = 4 * Rational(k) * (k + A) * (k + B) * (k + S) / (t * t * (t + 1) * (t - 1));
        }
        c.a[k] = ak.get_d();
        c.b[k] = bk.get_d();
      }
      break;
    }
  }
  return c;
}

}  // namespace detail

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come from
// the first eigenvector components
inline QuadRule gauss_rule(Measure m, int N, double alpha = 0, double beta = 0) {
  if (N < 1) throw ParameterError("quadrature needs N >= 1");
  if (m == Measure::Laguerre && !(alpha > -1)) throw ParameterError("Laguerre measure needs alpha > -1");
  if (m == Measure::Jacobi && !(alpha > -1 && beta > -1)) throw ParameterError("Jacobi measure needs alpha, beta > -1");
  auto c = detail::monic_coeffs(m, N + 1, alpha, beta);  // b[N] feeds the node polish
  Eigen::VectorXd diag(N), sub(std::max(N - 1, 1));
  for (int k = 0; k < N; ++k) diag[k] = c.a[k];
  for (int k = 1; k < N; ++k) sub[k - 1] = std::sqrt(c.b[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(N - 1), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericError("tridiagonal eigen-solver did not converge");
  double mass = measure_mass(m, alpha, beta);
  QuadRule r;
  r.measure = m;
  r.alpha = alpha;
  r.beta = beta;
  // Eigenvector components only carry absolute accuracy, which ruins the tiny
  // weights far out. Polish each node by Newton on the recurrence and take the
  // weight from the Christoffel sum 1 / sum_k phat_k(x)^2 instead.
  using LD = long double;
  auto eval = [&](LD x, LD& pn, LD& dpn, LD& christoffel) {
    LD p0 = 1 / std::sqrt(LD(mass)), p1 = 0, d0 = 0, d1 = 0;
    christoffel = p0 * p0;
    for (int k = 0; k < N; ++k) {
      LD sb = k > 0 ? std::sqrt(LD(c.b[k])) : 0;
      LD sn = std::sqrt(LD(c.b[k + 1]));
      LD p2 = ((x - c.a[k]) * p0 - sb * p1) / sn;
      LD d2 = (p0 + (x - c.a[k]) * d0 - sb * d1) / sn;
      p1 = p0, p0 = p2, d1 = d0, d0 = d2;
      if (k + 1 < N) christoffel += p0 * p0;
    }
    pn = p0, dpn = d0;
  };
  for (int i = 0; i < N; ++i) {
    LD x = es.eigenvalues()[i];
    LD pn, dpn, chr;
    for (int it = 0; it < 3; ++it) {
      eval(x, pn, dpn, chr);
      if (dpn == 0 || !std::isfinite(double(pn / dpn))) break;
      LD step = pn / dpn;
      if (std::abs(step) > 1e-6 * (1 + std::abs(x))) break;  // not in the basin, keep the eigenvalue
      x -= step;
    }
    eval(x, pn, dpn, chr);
    r.nodes.push_back(double(x));
    double w = double(1 / chr);
    if (!std::isfinite(w)) {
      double v0 = es.eigenvectors()(0, i);
      w = mass * v0 * v0;
    }
    r.weights.push_back(w);
  }
  return r;
}

// rules are immutable; cache the ones the singular integrals reuse
inline std::shared_ptr<const QuadRule> cached_jacobi_rule(int N, double a, double b) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(N, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const QuadRule>(gauss_rule(Measure::Jacobi, N, a, b));
  cache.emplace(key, r);
  return r;
}

// Envelope of a function toward -infinity, relative to its limit L there:
//   exponential: |v(y) - L| <= C exp(rate * y) for every y up to the evaluation point
//   support:     v(y) == L for y <= edge
// A right-sided envelope is stored in reflected orientation (y -> -y).
struct DecayHint {
  enum class Kind { None, Exponential, Support };
  Kind kind = Kind::None;
  double limit = 0;
  double C = 0, rate = 0;
  double edge = 0;

  static DecayHint exponential(double C, double rate, double limit = 0) {
    DecayHint h;
    h.kind = Kind::Exponential;
    h.C = C;
    h.rate = rate;
    h.limit = limit;
    return h;
  }
  static DecayHint support(double edge, double limit = 0) {
    DecayHint h;
    h.kind = Kind::Support;
    h.edge = edge;
    h.limit = limit;
    return h;
  }
  bool valid() const {
    switch (kind) {
      case Kind::None: return false;
      case Kind::Exponential: return C >= 0 && rate > 0 && std::isfinite(C) && std::isfinite(limit);
      case Kind::Support: return std::isfinite(edge) && std::isfinite(limit);
    }
    return false;
  }
};

struct QuadConfig {
  double delta = 1.0;          // end of the Gauss-Jacobi panel
  int gj_order = 64;
  double tail_rel_tol = 1e-12;  // tail bound relative to the result scale
  double adapt_rel_tol = 1e-13;
  double adapt_abs_tol = 1e-15;
  int max_panels = 4000;
  double max_T = 1e6;
};

struct SingularIntegral {
  double value = 0;
  double tail_bound = 0;
  double T = 0;
  int evaluations = 0;
};

namespace detail {

inline double marchaud_tail_bound(const DecayHint& h, double x, double T, double alpha) {
  return h.C * std::exp(h.rate * (x - T)) * std::pow(T, -1 - alpha) / h.rate;
}

inline double weyl_tail_bound(const DecayHint& h, double x, double T, double alpha) {
  return h.C * std::exp(h.rate * x) * std::pow(h.rate, -alpha) * boost::math::tgamma(alpha, h.rate * T);
}

// smallest (to bisection accuracy) T >= T0 with bound(T) <= tol
template <class B>
double find_cutoff(B bound, double T0, double tol, double max_T) {
  if (bound(T0) <= tol) return T0;
  double lo = T0, hi = std::max(2 * T0, 1.0);
  while (bound(hi) > tol) {
    lo = hi;
    hi *= 2;
    if (hi > max_T) throw AccuracyError("decay hint cannot bound the tail below tolerance", bound(max_T));
  }
  for (int i = 0; i < 60 && hi - lo > 1e-6 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (bound(mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

inline double scale_of(const DecayHint& h, double vx, double x) {
  double s = std::max(std::abs(vx - h.limit), std::abs(h.limit));
  if (h.kind == DecayHint::Kind::Exponential) s = std::max(s, h.C * std::exp(h.rate * x));
  return s > 0 ? s : 1.0;
}

// int_0^d g(s) s^{beta} ds with a Gauss-Jacobi rule on [0, d]
template <class G>
double gj_panel(G&& g, double d, double beta, int N) {
  if (d <= 0) return 0;
  auto rule = cached_jacobi_rule(N, 0.0, beta);
  double s = 0;
  for (size_t i = 0; i < rule->nodes.size(); ++i) s += rule->weights[i] * g(0.5 * d * (1 + rule->nodes[i]));
  return s * std::pow(0.5 * d, beta + 1);
}

}  // namespace detail

inline double marchaud_constant(double alpha) { return 1.0 / std::abs(boost::math::tgamma(-alpha)); }

// c_alpha int_eps^inf (v(x) - v(x-s)) s^{-1-alpha} ds, eps = 0 for the full operator
template <class V>
SingularIntegral marchaud_integral(V&& v, double x, double alpha, const DecayHint& hint,
                                   const QuadConfig& cfg = {}, double eps = 0) {
  if (!(alpha > 0 && alpha < 1)) throw ParameterError("Marchaud order must lie in (0,1)");
  if (!(eps >= 0)) throw ParameterError("truncation eps must be >= 0");
  if (!hint.valid()) throw PreconditionError("Marchaud integral needs a valid decay hint toward -infinity");
  SingularIntegral out;
  const double vx = v(x);
  const double L = hint.limit;
  const double d = cfg.delta;
  auto g = [&](double s) { return (vx - v(x - s)) / s; };

  double near = 0;
  if (eps < d) {
    near = detail::gj_panel(g, d, -alpha, cfg.gj_order) - detail::gj_panel(g, eps, -alpha, cfg.gj_order);
    out.evaluations += eps > 0 ? 2 * cfg.gj_order : cfg.gj_order;
  }
  const double start = std::max(d, eps);
  // int_start^inf (vx - v(x-s)) s^{-1-alpha} = (vx - L) start^{-alpha}/alpha - int_start^inf (v(x-s) - L) s^{-1-alpha}
  double far = (vx - L) * std::pow(start, -alpha) / alpha;
  double T = start;
  double scale = detail::scale_of(hint, vx, x);
  double tol = cfg.tail_rel_tol * scale;
  if (hint.kind == DecayHint::Kind::Support) {
    T = std::max(start, x - hint.edge);
  } else {
    T = detail::find_cutoff([&](double t) { return detail::marchaud_tail_bound(hint, x, t, alpha); }, start,
                            tol, cfg.max_T);
    out.tail_bound = detail::marchaud_tail_bound(hint, x, T, alpha);
  }
  if (T > start) {
    auto r = integrate_adaptive([&](double s) { return (v(x - s) - L) * std::pow(s, -1 - alpha); }, start, T,
                                cfg.adapt_abs_tol * scale, cfg.adapt_rel_tol, cfg.max_panels);
    out.evaluations += r.evaluations;
    if (!r.converged) throw AccuracyError("Marchaud middle integral did not converge", r.error);
    far -= r.value;
  }
  out.T = T;
  out.value = marchaud_constant(alpha) * (near + far);
  return out;
}

// (1/Gamma(alpha)) int_0^inf v(x-t) t^{alpha-1} dt
template <class V>
SingularIntegral weyl_integral(V&& v, double x, double alpha, const DecayHint& hint, const QuadConfig& cfg = {}) {
  if (!(alpha > 0)) throw ParameterError("Weyl order must be positive");
  if (!hint.valid()) throw PreconditionError("Weyl integral needs a valid decay hint toward -infinity");
  if (hint.limit != 0) throw PreconditionError("Weyl integral diverges: function does not vanish at -infinity");
  SingularIntegral out;
  const double d = cfg.delta;
  double acc = detail::gj_panel([&](double t) { return v(x - t); }, d, alpha - 1, cfg.gj_order);
  out.evaluations += cfg.gj_order;
  double scale = detail::scale_of(hint, v(x), x);
  double T = d;
  if (hint.kind == DecayHint::Kind::Support) {
    T = std::max(d, x - hint.edge);
  } else {
    double tol = cfg.tail_rel_tol * scale;
    T = detail::find_cutoff([&](double t) { return detail::weyl_tail_bound(hint, x, t, alpha); }, d, tol,
                            cfg.max_T);
    out.tail_bound = detail::weyl_tail_bound(hint, x, T, alpha);
  }
  if (T > d) {
    auto r = integrate_adaptive([&](double t) { return v(x - t) * std::pow(t, alpha - 1); }, d, T,
                                cfg.adapt_abs_tol * scale, cfg.adapt_rel_tol, cfg.max_panels);
    out.evaluations += r.evaluations;
    if (!r.converged) throw AccuracyError("Weyl middle integral did not converge", r.error);
    acc += r.value;
  }
  out.T = T;
  out.value = acc / boost::math::tgamma(alpha);
  return out;
}

}  // namespace fracinv
