#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "extrapolation.hpp"
#include "fracalc.hpp"

namespace fracinv {

// 4^{alpha-1/2} Gamma(alpha) / Gamma(1-alpha)
inline double extension_constant(double alpha) {
  return std::pow(4.0, alpha - 0.5) * boost::math::tgamma(alpha) / boost::math::tgamma(1 - alpha);
}

struct TraceReport {
  std::vector<double> ys;
  std::vector<double> values;  // -c_alpha y^{1-2alpha} U_y
  double limit = 0;
  double observed_order = 0;
  double assumed_order = 0;
  bool fallback = false;
  std::vector<std::string> warnings;
};

struct ResidualRow {
  double h;
  double residual;
};

// U(x,y) = E(x) / Gamma(alpha) int_0^inf r^{alpha-1} e^{-r} w(x - y^2/(4r)) dr, the
// t = y^2/(4r) form of the Poisson-type formula; w = E^{-1}u is the conjugated input
class ExtensionField {
 public:
  ExtensionField(WeightSpec spec, double alpha, Func w, QuadConfig cfg = {})
      : spec_(std::move(spec)), alpha_(alpha), w_(std::move(w)), cfg_(cfg) {
    if (!(alpha_ > 0 && alpha_ < 1)) throw ParameterError("extension order must lie in (0,1)");
    if (!w_.left.valid()) throw PreconditionError("extension needs a decay hint toward -infinity");
  }

  const WeightSpec& spec() const { return spec_; }
  double alpha() const { return alpha_; }

  double value(double x, double y) const {
    if (!(y > 0)) throw DomainError("extension is evaluated for y > 0 only");
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find({x, y});
      if (it != cache_.end()) return it->second;
    }
    double L = w_.left.limit;
    double v = spec_.E(x) * (L + kernel_integral(x, y, [&](double r, double wr) {
                                 (void)r;
                                 return wr - L;
                               }));
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::make_pair(x, y), v);
    return v;
  }

  // U_y = 2E(x)/(y Gamma(alpha)) int r^{alpha-1} e^{-r} (alpha - r) (w(x - y^2/4r) - w(x)) dr
  double y_derivative(double x, double y) const {
    if (!(y > 0)) throw DomainError("extension is evaluated for y > 0 only");
    double wx = w_(x);
    return spec_.E(x) * 2 / y * kernel_integral(x, y, [&](double r, double wr) { return (alpha_ - r) * (wr - wx); });
  }

  // -D_left,a U + (1-2alpha)/y U_y + U_yy with central differences in x and y
  double residual(double x, double y, double h) const {
    if (!(y > 2 * h)) throw DomainError("residual needs y > 2h");
    auto W = [&](double xx, double yy) { return value(xx, yy) / spec_.E(xx); };
    double c = W(x, y);
    double wx = (W(x + h, y) - W(x - h, y)) / (2 * h);
    double yp = W(x, y + h), ym = W(x, y - h);
    double wy = (yp - ym) / (2 * h);
    double wyy = (yp - 2 * c + ym) / (h * h);
    return spec_.E(x) * (-wx + (1 - 2 * alpha_) / y * wy + wyy);
  }

  std::vector<ResidualRow> residual_table(double x, double y, double h0, int levels = 3) const {
    std::vector<ResidualRow> rows;
    for (int k = 0; k < levels; ++k) {
      double h = h0 / std::pow(2.0, k);
      rows.push_back({h, residual(x, y, h)});
    }
    return rows;
  }

  // weighted Neumann trace, extrapolated toward y = 0
  TraceReport trace(double x, const std::vector<double>& ys) const {
    if (ys.size() < 3) throw ParameterError("trace needs at least three y values");
    for (size_t i = 1; i < ys.size(); ++i)
      if (!(ys[i] < ys[i - 1] && ys[i] > 0)) throw ParameterError("y sequence must be positive and decreasing");
    TraceReport rep;
    rep.ys = ys;
    double c = extension_constant(alpha_);
    for (double y : ys) rep.values.push_back(-c * std::pow(y, 1 - 2 * alpha_) * y_derivative(x, y));
    size_t n = ys.size();
    rep.assumed_order = 2 - 2 * alpha_;
    double dv0 = rep.values[n - 2] - rep.values[n - 3], dv1 = rep.values[n - 1] - rep.values[n - 2];
    if (dv0 == 0 || dv1 == 0) {
      rep.limit = rep.values.back();
      return rep;
    }
    rep.observed_order = observed_order(rep.values[n - 3], rep.values[n - 2], rep.values[n - 1], ys[n - 2] / ys[n - 1]);
    if (std::abs(rep.observed_order - rep.assumed_order) <= 0.1 * rep.assumed_order) {
      // correction terms y^{2-2a}, y^2, y^{4-2a}, y^4, ...
      std::vector<double> expo;
      for (int k = 1; expo.size() + 1 < n; ++k) {
        expo.push_back(2.0 * k - 2 * alpha_);
        if (expo.size() + 1 < n) expo.push_back(2.0 * k);
      }
      std::sort(expo.begin(), expo.end());
      expo.erase(std::unique(expo.begin(), expo.end()), expo.end());
      rep.limit = richardson(ys, rep.values, expo).value;
    } else {
      rep.fallback = true;
      rep.warnings.push_back("assumed order " + std::to_string(rep.assumed_order) + " misfits observed " +
                             std::to_string(rep.observed_order) + "; Aitken extrapolation used");
      double denom = dv1 - dv0;
      rep.limit = denom == 0 ? rep.values.back() : rep.values.back() - dv1 * dv1 / denom;
    }
    return rep;
  }

  // U(x, y) -> u(x) as y -> 0, with corrections y^{2a}, y^2, ...
  Extrapolated boundary_limit(double x, const std::vector<double>& ys) const {
    std::vector<double> vals, expo{2 * alpha_, 2.0, 2 + 2 * alpha_, 4.0};
    for (double y : ys) vals.push_back(value(x, y));
    return richardson(ys, vals, expo);
  }

 private:
  // (1/Gamma(alpha)) int_0^inf r^{alpha-1} e^{-r} g(r, w(x - y^2/(4r))) dr, with r = rho^{1/alpha}
  template <class G>
  double kernel_integral(double x, double y, G&& g) const {
    const double a = alpha_;
    const double R = 60.0;
    const auto& wf = w_.f;
    auto integrand = [&](double rho) {
      double r = std::pow(rho, 1 / a);
      if (r <= 0) return 0.0;
      double arg = x - y * y / (4 * r);
      return std::exp(-r) * g(r, std::isfinite(arg) ? wf(arg) : w_.left.limit) / a;
    };
    // panel breaks where the kernel has structure
    std::vector<double> cuts{0.0};
    for (double r : {y * y / 64, y * y / 4, y * y, 1.0, 8.0})
      if (r < R) cuts.push_back(std::pow(r, a));
    cuts.push_back(std::pow(R, a));
    std::sort(cuts.begin(), cuts.end());
    double sum = 0;
    double scale = std::max({std::abs(w_(x)), std::abs(w_.left.limit), 1e-300});
    if (w_.left.kind == DecayHint::Kind::Exponential) scale = std::max(scale, w_.left.C * std::exp(w_.left.rate * x));
    for (size_t i = 1; i < cuts.size(); ++i) {
      if (cuts[i] <= cuts[i - 1]) continue;
      auto r = integrate_adaptive(integrand, cuts[i - 1], cuts[i], 1e-16 * scale, 1e-14, cfg_.max_panels);
      if (!r.converged && r.error > 1e-12 * scale) throw AccuracyError("extension kernel integral did not converge", r.error);
      sum += r.value;
    }
    // r > R adds at most Gamma(alpha, R) (1 + R) sup|w|, about 1e-24 relative
    return sum / boost::math::tgamma(a);
  }

  WeightSpec spec_;
  double alpha_;
  Func w_;
  QuadConfig cfg_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<double, double>, double> cache_;
};

inline double extension_eval(const WeightSpec& spec, double alpha, const Func& w, double x, double y) {
  return ExtensionField(spec, alpha, w).value(x, y);
}

inline double pde_residual(const ExtensionField& f, double x, double y, double h) { return f.residual(x, y, h); }

inline TraceReport neumann_trace(const ExtensionField& f, double x, const std::vector<double>& ys) {
  return f.trace(x, ys);
}

}  // namespace fracinv
