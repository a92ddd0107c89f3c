#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adaptive.hpp"
#include "rational.hpp"

namespace fracinv {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x > lo && x < hi; }
};

using ScalarFn = std::function<double(double)>;

// a(x), basepoint x0 and E(x) = exp(-int_{x0}^x a)
class WeightSpec {
 public:
  WeightSpec(std::string name, ScalarFn a, double x0, Interval domain = {},
             std::optional<ScalarFn> antideriv = std::nullopt)
      : name_(std::move(name)), a_(std::move(a)), x0_(x0), domain_(domain), A_(std::move(antideriv)) {
    if (!domain_.contains(x0_)) throw DomainError("basepoint outside the domain of " + name_);
  }

  const std::string& name() const { return name_; }
  double x0() const { return x0_; }
  const Interval& domain() const { return domain_; }
  bool has_closed_form() const { return A_.has_value(); }
  // a is identically zero: E == 1 and the operators are the plain one-sided ones
  bool is_trivial() const { return trivial_; }

  double a(double x) const {
    check(x);
    return a_(x);
  }

  double antiderivative(double x) const {
    check(x);
    if (x == x0_) return 0;
    if (A_) return (*A_)(x);
    return numeric_antiderivative(x);
  }

  double numeric_antiderivative(double x) const {
    check(x);
    auto r = integrate_adaptive(a_, x0_, x, 1e-12, 1e-14);
    if (!r.converged) throw AccuracyError("cumulative integral of a did not converge in " + name_, r.error);
    return r.value;
  }

  double E(double x) const { return std::exp(-antiderivative(x)); }
  double E_inv(double x) const { return std::exp(antiderivative(x)); }

  // weight for -a at the same basepoint, i.e. 1/E
  WeightSpec negated() const {
    auto a = a_;
    std::optional<ScalarFn> A;
    if (A_) A = [f = *A_](double x) { return -f(x); };
    WeightSpec w("-" + name_, [a](double x) { return -a(x); }, x0_, domain_, A);
    w.trivial_ = trivial_;
    return w;
  }

  // a~(y) = a(-y) with basepoint -x0; turns right-sided operators into left-sided ones
  WeightSpec reflected() const {
    auto a = a_;
    std::optional<ScalarFn> A;
    if (A_) A = [f = *A_](double y) { return -f(-y); };
    WeightSpec w(name_ + "~", [a](double y) { return a(-y); }, -x0_, Interval{-domain_.hi, -domain_.lo}, A);
    w.trivial_ = trivial_;
    return w;
  }

  WeightSpec rebased(double x1) const {
    auto A = A_;
    double shift = A ? (*A)(x1) : numeric_antiderivative(x1);
    std::optional<ScalarFn> B;
    if (A) B = [f = *A, shift](double x) { return f(x) - shift; };
    WeightSpec w(name_ + "@" + std::to_string(x1), a_, x1, domain_, B);
    w.trivial_ = trivial_;
    return w;
  }

  static WeightSpec zero() {
    WeightSpec w("zero", [](double) { return 0.0; }, 0.0, {}, ScalarFn([](double) { return 0.0; }));
    w.trivial_ = true;
    return w;
  }

 private:
  void check(double x) const {
    if (!domain_.contains(x))
      throw DomainError("x = " + std::to_string(x) + " outside the domain of " + name_);
  }

  std::string name_;
  ScalarFn a_;
  double x0_;
  Interval domain_;
  std::optional<ScalarFn> A_;
  bool trivial_ = false;
};

namespace presets {

inline WeightSpec ou() {
  return WeightSpec("ou", [](double x) { return 2 * x; }, 0.0, {}, ScalarFn([](double x) { return x * x; }));
}

inline WeightSpec hermite() {
  return WeightSpec("hermite", [](double x) { return x; }, 0.0, {},
                    ScalarFn([](double x) { return 0.5 * x * x; }));
}

inline WeightSpec laguerre(double alpha) {
  return WeightSpec(
      "laguerre:" + std::to_string(alpha), [alpha](double x) { return alpha / x - 1; }, 1.0,
      Interval{0.0, std::numeric_limits<double>::infinity()},
      ScalarFn([alpha](double x) { return alpha * std::log(x) - (x - 1); }));
}

inline WeightSpec jacobi(double alpha, double beta) {
  return WeightSpec(
      "jacobi:" + std::to_string(alpha) + "," + std::to_string(beta),
      [alpha, beta](double x) { return -alpha / (1 - x) + beta / (1 + x); }, 0.0, Interval{-1.0, 1.0},
      ScalarFn([alpha, beta](double x) { return alpha * std::log1p(-x) + beta * std::log1p(x); }));
}

}  // namespace presets

inline double parse_scalar(const std::string& s) {
  try {
    return to_double(parse_rational(s));
  } catch (const ParameterError&) {
  }
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (...) {
    throw ParameterError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParameterError("not a number: '" + s + "'");
  return v;
}

// "ou", "hermite", "laguerre:<a>", "jacobi:<a>,<b>", "zero"
inline WeightSpec parse_preset(const std::string& s) {
  if (s == "ou") return presets::ou();
  if (s == "hermite") return presets::hermite();
  if (s == "zero") return WeightSpec::zero();
  auto colon = s.find(':');
  std::string head = s.substr(0, colon), tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "laguerre" && !tail.empty()) {
    double a = parse_scalar(tail);
    if (!(a > -1)) throw ParameterError("laguerre preset needs alpha > -1");
    return presets::laguerre(a);
  }
  if (head == "jacobi") {
    auto comma = tail.find(',');
    if (comma == std::string::npos) throw ParameterError("jacobi preset needs alpha,beta");
    double a = parse_scalar(tail.substr(0, comma)), b = parse_scalar(tail.substr(comma + 1));
    if (!(a > -1 && b > -1)) throw ParameterError("jacobi preset needs alpha, beta > -1");
    return presets::jacobi(a, b);
  }
  throw ParameterError("unknown preset '" + s + "'");
}

struct WeightValidation {
  double max_antideriv_rel_error = 0;
  bool continuous = true;
  bool basepoint_exact = true;
  bool ok() const { return continuous && basepoint_exact && max_antideriv_rel_error <= 1e-10; }
};

// sample window inside the domain used for property checks
inline Interval sample_window(const WeightSpec& w) {
  double lo = std::max(w.domain().lo, w.x0() - 4.0), hi = std::min(w.domain().hi, w.x0() + 4.0);
  double pad = 0.05 * (hi - lo);
  return {lo + pad, hi - pad};
}

inline WeightValidation validate(const WeightSpec& w, unsigned seed = 20240611) {
  WeightValidation v;
  Interval win = sample_window(w);
  for (int i = 0; i < 100; ++i) {
    double x = win.lo + (win.hi - win.lo) * i / 99.0;
    if (!std::isfinite(w.a(x))) v.continuous = false;
  }
  v.basepoint_exact = w.antiderivative(w.x0()) == 0;
  if (w.has_closed_form()) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> d(win.lo, win.hi);
    for (int i = 0; i < 50; ++i) {
      double x = d(g);
      double A = w.antiderivative(x), N = w.numeric_antiderivative(x);
      double rel = std::abs(A - N) / std::max(std::abs(A), 1e-300);
      if (std::abs(A - N) > 1e-14) v.max_antideriv_rel_error = std::max(v.max_antideriv_rel_error, rel);
    }
  }
  return v;
}

inline double eval_E(const WeightSpec& w, double x) { return w.E(x); }
inline double eval_E_inv(const WeightSpec& w, double x) { return w.E_inv(x); }

}  // namespace fracinv
