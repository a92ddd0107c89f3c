#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace fracinv {

struct Extrapolated {
  double value = 0;
  double error = 0;  // change against the estimate that uses one point fewer
};

namespace detail {

inline double richardson_solve(const std::vector<double>& h, const std::vector<double>& T,
                               const std::vector<double>& p, size_t m) {
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd b(m);
  for (size_t i = 0; i < m; ++i) {
    A(i, 0) = 1;
    for (size_t k = 1; k < m; ++k) A(i, k) = std::pow(h[i], p[k - 1]);
    b[i] = T[i];
  }
  return A.colPivHouseholderQr().solve(b)[0];
}

}  // namespace detail

// T(h) = T0 + sum_k c_k h^{p_k}: fit T0 and the first m-1 corrections
// through the m samples closest to h = 0
inline Extrapolated richardson(const std::vector<double>& h, const std::vector<double>& T,
                               const std::vector<double>& exponents) {
  if (h.size() != T.size() || h.empty()) throw ParameterError("richardson: sample size mismatch");
  size_t m = std::min(h.size(), exponents.size() + 1);
  std::vector<double> hh(h.end() - m, h.end()), TT(T.end() - m, T.end());
  Extrapolated r;
  r.value = detail::richardson_solve(hh, TT, exponents, m);
  if (m > 1) {
    std::vector<double> h2(hh.begin() + 1, hh.end()), T2(TT.begin() + 1, TT.end());
    r.error = std::abs(r.value - detail::richardson_solve(h2, T2, exponents, m - 1));
  }
  return r;
}

// interpolating polynomial through (x_i, y_i) evaluated at x0
inline double neville(std::vector<double> xs, std::vector<double> ys, double x0) {
  size_t n = xs.size();
  if (n == 0 || ys.size() != n) throw ParameterError("neville: sample size mismatch");
  for (size_t k = 1; k < n; ++k)
    for (size_t i = 0; i + k < n; ++i)
      ys[i] = ((x0 - xs[i + k]) * ys[i] + (xs[i] - x0) * ys[i + 1]) / (xs[i] - xs[i + k]);
  return ys[0];
}

// convergence order from three samples at geometric steps h, h/r, h/r^2
inline double observed_order(double T0, double T1, double T2, double r) {
  return std::log(std::abs((T1 - T0) / (T2 - T1))) / std::log(r);
}

}  // namespace fracinv
