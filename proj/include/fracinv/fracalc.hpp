#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extrapolation.hpp"
#include "families.hpp"
#include "quadrature.hpp"
#include "weights.hpp"

namespace fracinv {

// A callback with envelopes toward -infinity (left) and +infinity (right).
// When handed to a weighted operator the envelopes describe the conjugated
// function: E^{-1}u for left-sided operators, E u for right-sided ones.
struct Func {
  ScalarFn f;
  DecayHint left;
  DecayHint right;  // stated in reflected orientation, see reflect()

  double operator()(double x) const { return f(x); }

  static Func exponential(double lambda, double scale = 1) {
    Func g{[lambda, scale](double y) { return scale * std::exp(lambda * y); }, {}, {}};
    if (lambda > 0) g.left = DecayHint::exponential(std::abs(scale), lambda);
    if (lambda < 0) g.right = DecayHint::exponential(std::abs(scale), -lambda);
    if (lambda == 0) g.left = g.right = DecayHint::support(0, scale);
    return g;
  }

  // exp(-1/(1-z^2)) on |z| < 1, z = (y - c)/w
  static double bump_value(double y, double c, double w) {
    double z = (y - c) / w;
    if (std::abs(z) >= 1) return 0;
    return std::exp(-1 / (1 - z * z));
  }
  static Func bump(double c, double w, double height = 1) {
    return {[=](double y) { return height * bump_value(y, c, w); }, DecayHint::support(c - w),
            DecayHint::support(-(c + w))};
  }
  static Func constant(double v) {
    return {[v](double) { return v; }, DecayHint::support(0, v), DecayHint::support(0, v)};
  }

  // y -> f(-y); left and right envelopes swap
  Func reflect() const {
    auto g = f;
    return {[g](double y) { return g(-y); }, right, left};
  }
};

struct FracParams {
  double alpha = 0.5;
  double eps = 0;
  QuadConfig quad{};
};

// e^{-t D_left,a} u(x) = E(x) E(x-t)^{-1} u(x-t)
inline double semigroup_left(const WeightSpec& w, const ScalarFn& u, double t, double x) {
  if (!(t >= 0)) throw ParameterError("semigroup time must be >= 0");
  if (t == 0) return u(x);
  return std::exp(w.antiderivative(x - t) - w.antiderivative(x)) * u(x - t);
}

// e^{-t D_right,a} v(x) = E(x)^{-1} E(x+t) v(x+t)
inline double semigroup_right(const WeightSpec& w, const ScalarFn& v, double t, double x) {
  if (!(t >= 0)) throw ParameterError("semigroup time must be >= 0");
  if (t == 0) return v(x);
  return std::exp(w.antiderivative(x) - w.antiderivative(x + t)) * v(x + t);
}

// D_left,a u = u' + a u, via a central difference of E^{-1}u
inline double first_order_left(const WeightSpec& w, const ScalarFn& u, double x, double h = 1e-4) {
  auto c = [&](double y) { return w.E_inv(y) * u(y); };
  return w.E(x) * (c(x + h) - c(x - h)) / (2 * h);
}

// Conjugated-input forms: the caller hands over w = E^{-1}u directly. This is
// the only usable form for the bounded-domain presets, whose E does not exist
// on all of (-inf, x].
inline double frac_deriv_left_conj(const WeightSpec& spec, const FracParams& p, const Func& w, double x) {
  return spec.E(x) * marchaud_integral(w.f, x, p.alpha, w.left, p.quad, p.eps).value;
}

inline double frac_deriv_left(const WeightSpec& spec, const FracParams& p, const Func& u, double x) {
  const auto& f = u.f;
  Func w{[&spec, &f](double y) {
           double v = f(y);
           return v == 0 ? 0.0 : spec.E_inv(y) * v;
         },
         u.left, u.right};
  return frac_deriv_left_conj(spec, p, w, x);
}

inline double frac_int_left_conj(const WeightSpec& spec, double alpha, const Func& w, double x,
                                 const QuadConfig& cfg = {}) {
  return spec.E(x) * weyl_integral(w.f, x, alpha, w.left, cfg).value;
}

inline double frac_int_left(const WeightSpec& spec, double alpha, const Func& f, double x, const QuadConfig& cfg = {}) {
  const auto& g = f.f;
  Func w{[&spec, &g](double y) {
           double v = g(y);
           return v == 0 ? 0.0 : spec.E_inv(y) * v;
         },
         f.left, f.right};
  return frac_int_left_conj(spec, alpha, w, x, cfg);
}

// Right-sided operators: (D_right,a)^alpha v = E^{-1} (D_right)^alpha (E v); v is
// handed over through g = E v (right envelope on g)
inline double frac_deriv_right_conj(const WeightSpec& spec, const FracParams& p, const Func& g, double x) {
  Func r = g.reflect();
  return spec.E_inv(x) * marchaud_integral(r.f, -x, p.alpha, r.left, p.quad, p.eps).value;
}

inline double frac_deriv_right(const WeightSpec& spec, const FracParams& p, const Func& v, double x) {
  const auto& f = v.f;
  Func g{[&spec, &f](double y) {
           double t = f(y);
           return t == 0 ? 0.0 : spec.E(y) * t;
         },
         v.left, v.right};
  return frac_deriv_right_conj(spec, p, g, x);
}

inline double frac_int_right_conj(const WeightSpec& spec, double alpha, const Func& g, double x,
                                  const QuadConfig& cfg = {}) {
  Func r = g.reflect();
  return spec.E_inv(x) * weyl_integral(r.f, -x, alpha, r.left, cfg).value;
}

// --- fundamental theorem: truncated derivative of the fractional integral ---

struct FtcReport {
  std::vector<double> eps;
  std::vector<double> values;
  double limit = 0;
  double target = 0;
  double error = 0;
  double extrapolation_change = 0;
  bool monotone = true;
  std::vector<std::string> warnings;
};

// envelope of the Weyl integral of a function with envelope h
inline DecayHint weyl_hint(const DecayHint& h, double alpha) {
  if (h.kind == DecayHint::Kind::Exponential) return DecayHint::exponential(h.C * std::pow(h.rate, -alpha), h.rate);
  return h;
}

// f handed over in conjugated form (w = E^{-1} f); the report compares against f(x) = E(x) w(x)
inline FtcReport ftc_check(const WeightSpec& spec, double alpha, const Func& w, double x,
                           std::vector<double> eps_sequence = {0.1, 0.05, 0.025, 0.0125},
                           const QuadConfig& cfg = {}) {
  if (eps_sequence.size() < 2) throw ParameterError("ftc_check needs at least two eps values");
  FtcReport rep;
  rep.eps = eps_sequence;
  const auto& wf = w.f;
  ScalarFn g = [&wf, &w, alpha, cfg](double y) { return weyl_integral(wf, y, alpha, w.left, cfg).value; };
  DecayHint gh = weyl_hint(w.left, alpha);
  for (double e : eps_sequence) {
    rep.values.push_back(spec.E(x) * marchaud_integral(g, x, alpha, gh, cfg, e).value);
  }
  std::vector<double> expo;
  for (size_t k = 1; k < eps_sequence.size(); ++k) expo.push_back(double(k) - alpha);
  auto ex = richardson(eps_sequence, rep.values, expo);
  rep.limit = ex.value;
  rep.extrapolation_change = ex.error;
  rep.target = spec.E(x) * w(x);
  rep.error = std::abs(rep.limit - rep.target);
  for (size_t k = 2; k < rep.values.size(); ++k) {
    double d0 = rep.values[k - 1] - rep.values[k - 2], d1 = rep.values[k] - rep.values[k - 1];
    if (d0 * d1 < 0) rep.monotone = false;
  }
  if (!rep.monotone) rep.warnings.push_back("non-monotone convergence in eps");
  return rep;
}

// --- alpha -> 0 and alpha -> 1 limits ---

struct BbmReport {
  std::vector<double> alphas;
  std::vector<double> values;
  double limit_at_0 = 0, target_at_0 = 0, dev_at_0 = 0;
  double limit_at_1 = 0, target_at_1 = 0, dev_at_1 = 0;
};

inline std::vector<double> default_alpha_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 19; ++k) g.push_back(0.05 * k);
  return g;
}

// u handed over in conjugated form w = E^{-1}u; the first-order operator is
// E w', with w' from a five-point difference
inline BbmReport bbm_sweep(const WeightSpec& spec, const Func& w, double x,
                           std::vector<double> alpha_grid = default_alpha_grid(), int points = 6,
                           const QuadConfig& cfg = {}) {
  if (alpha_grid.size() < 2) throw ParameterError("bbm_sweep needs at least two orders");
  BbmReport rep;
  rep.alphas = alpha_grid;
  for (double a : alpha_grid) rep.values.push_back(frac_deriv_left_conj(spec, {a, 0, cfg}, w, x));
  size_t m = std::min<size_t>(points, alpha_grid.size());
  std::vector<size_t> idx(alpha_grid.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto nearest = [&](double target) {
    auto s = idx;
    std::sort(s.begin(), s.end(), [&](size_t i, size_t j) {
      return std::abs(alpha_grid[i] - target) < std::abs(alpha_grid[j] - target);
    });
    std::vector<double> xs, ys;
    for (size_t i = 0; i < m; ++i) {
      xs.push_back(alpha_grid[s[i]]);
      ys.push_back(rep.values[s[i]]);
    }
    return neville(xs, ys, target);
  };
  double E = spec.E(x);
  double h = 1e-3;
  double dw = (-w(x + 2 * h) + 8 * w(x + h) - 8 * w(x - h) + w(x - 2 * h)) / (12 * h);
  rep.limit_at_0 = nearest(0.0);
  rep.target_at_0 = E * w(x);
  rep.dev_at_0 = std::abs(rep.limit_at_0 - rep.target_at_0);
  rep.limit_at_1 = nearest(1.0);
  rep.target_at_1 = E * dw;
  rep.dev_at_1 = std::abs(rep.limit_at_1 - rep.target_at_1);
  return rep;
}

// --- maximum principle ---

struct MaxPrincipleReport {
  int trials = 0;
  int violations = 0;
  double max_value = -INFINITY;  // largest value seen, should stay <= 0
  double equality_value = 0;
  std::vector<std::string> offending;
};

namespace detail {

struct ProbeSample {
  std::string preset;
  double alpha, x0;
  std::vector<double> height, center, width;
  std::string str() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"preset\":\"" << preset << "\",\"alpha\":" << alpha << ",\"x0\":" << x0 << ",\"bumps\":[";
    for (size_t i = 0; i < height.size(); ++i)
      os << (i ? "," : "") << "[" << height[i] << "," << center[i] << "," << width[i] << "]";
    os << "]}";
    return os.str();
  }
};

}  // namespace detail

// random u = E w with w >= 0 on (-inf, x0] and w(x0) = 0; the derivative at x0 must be <= 0
inline MaxPrincipleReport max_principle_probe(const std::vector<WeightSpec>& specs, const std::vector<double>& alphas,
                                              int trials, unsigned long seed, const QuadConfig& cfg = {}) {
  MaxPrincipleReport rep;
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> U(0, 1);
  for (int t = 0; t < trials; ++t) {
    const WeightSpec& spec = specs[t % specs.size()];
    detail::ProbeSample s;
    s.preset = spec.name();
    s.alpha = alphas[(t / specs.size()) % alphas.size()];
    auto win = sample_window(spec);
    s.x0 = win.lo + (win.hi - win.lo) * U(g);
    int nb = 1 + int(3 * U(g));
    double edge = s.x0;
    for (int k = 0; k < nb; ++k) {
      s.height.push_back(U(g));
      s.center.push_back(s.x0 - 3 + 3.5 * U(g));
      s.width.push_back(0.2 + 1.3 * U(g));
      edge = std::min(edge, s.center.back() - s.width.back());
    }
    auto w = [&s](double y) {
      double d = s.x0 - y, sum = 0;
      for (size_t k = 0; k < s.height.size(); ++k) sum += s.height[k] * Func::bump_value(y, s.center[k], s.width[k]);
      return sum * d * d / (1 + d * d);
    };
    Func f{w, DecayHint::support(edge), {}};
    double v = frac_deriv_left_conj(spec, {s.alpha, 0, cfg}, f, s.x0);
    rep.trials++;
    rep.max_value = std::max(rep.max_value, v);
    if (v > 1e-12) {
      rep.violations++;
      if (rep.offending.size() < 10) rep.offending.push_back(s.str());
    }
  }
  // equality case: u vanishes on (-inf, x0]
  Func zero_left{[](double y) { return y > 0 ? Func::bump_value(y, 1, 0.9) : 0.0; }, DecayHint::support(0), {}};
  rep.equality_value = frac_deriv_left_conj(specs.front(), {alphas.front(), 0, cfg}, zero_left, 0.0);
  return rep;
}

// --- Hermite functions of real degree ---

// nu < 0: (D_right,2x)^{nu} 1, 0 < nu < 1: (D_right,2x)^{nu} 1, integer nu: H_nu
inline double hermite_function_degree(double nu, double x, const QuadConfig& cfg = {}) {
  if (nu == 0) return 1;
  if (nu > 0 && nu == std::floor(nu)) {
    auto H = family_recurrence(Family::Hermite, int(nu));
    return to_double(H.back())(x);
  }
  if (nu >= 1) throw ParameterError("Hermite function of non-integer degree >= 1 is not supported");
  auto spec = presets::ou();
  // E 1 = e^{-y^2} <= e^{1/4} e^{-y} toward +infinity
  Func g{[](double y) { return std::exp(-y * y); }, {}, DecayHint::exponential(std::exp(0.25), 1)};
  if (nu < 0) return frac_int_right_conj(spec, -nu, g, x, cfg);
  return frac_deriv_right_conj(spec, {nu, 0, cfg}, g, x);
}

}  // namespace fracinv
