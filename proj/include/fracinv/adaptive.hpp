#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace fracinv {

struct IntegrationResult {
  double value = 0;
  double error = 0;
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// 15-point Kronrod with embedded 7-point Gauss on [a, b]; node tables from Boost
template <class F>
Panel gk15(F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double f0 = f(c);
  double k = f0 * wk[0], g = f0 * wg[0];
  for (unsigned i = 1; i < x.size(); ++i) {
    double s = f(c + h * x[i]) + f(c - h * x[i]);
    k += s * wk[i];
    if (i % 2 == 0) g += s * wg[i / 2];
  }
  return {a, b, k * h, std::abs(k - g) * h};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod on a finite interval: bisect the panel with
// the largest error estimate until the summed estimate meets the tolerance.
template <class F>
IntegrationResult integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol = 0,
                                     int max_panels = 4000) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw PreconditionError("adaptive integration needs finite limits");
  IntegrationResult r;
  if (a == b) return r;
  double sign = 1;
  if (b < a) {
    std::swap(a, b);
    sign = -1;
  }
  std::priority_queue<detail::Panel> q;
  auto p = detail::gk15(f, a, b);
  r.evaluations = 15;
  double value = p.value, error = p.error;
  q.push(p);
  int panels = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (panels >= max_panels) {
      r.converged = false;
      break;
    }
    auto worst = q.top();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      r.converged = false;
      break;
    }
    q.pop();
    auto l = detail::gk15(f, worst.a, mid), rr = detail::gk15(f, mid, worst.b);
    r.evaluations += 30;
    value += l.value + rr.value - worst.value;
    error += l.error + rr.error - worst.error;
    q.push(l);
    q.push(rr);
    ++panels;
  }
  value = 0;
  error = 0;
  while (!q.empty()) {
    value += q.top().value;
    error += q.top().error;
    q.pop();
  }
  r.value = sign * value;
  r.error = error;
  return r;
}

}  // namespace fracinv
