#pragma once

// Reference values computed by routes that share no code with the library
// paths they check.

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace fracinv::oracle {

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, trapezoid rule (the
// integrand is analytic in a strip, so the error decays like exp(-pi^2/h))
inline double bessel_k(double nu, double z, double h = 0.05) {
  double sum = 0.5 * std::exp(-z);
  for (int k = 1;; ++k) {
    double t = k * h;
    double term = std::exp(-z * std::cosh(t) + nu * t) * 0.5 * (1 + std::exp(-2 * nu * t));
    sum += term;
    if (term < 1e-20 * sum) break;
  }
  return sum * h;
}

// extension of e^{lambda x} with a = 0
inline double extension_exponential(double alpha, double lambda, double x, double y) {
  double z = y * std::sqrt(lambda);
  return std::exp(lambda * x) * std::pow(2.0, 1 - alpha) / boost::math::tgamma(alpha) * std::pow(z, alpha) *
         bessel_k(alpha, z);
}

// D^alpha e^{lambda x} = lambda^alpha e^{lambda x}, I^alpha e^{lambda x} = lambda^{-alpha} e^{lambda x}
inline double exponential_power(double lambda, double s, double x) { return std::pow(lambda, s) * std::exp(lambda * x); }

}  // namespace fracinv::oracle
