#pragma once

#include "power_form.hpp"

namespace fracinv {

// p2 D^2 + p1 D + p0
struct OperatorSpec {
  Poly p2, p1, p0;
};

inline Poly apply_operator(const OperatorSpec& op, const Poly& p) {
  Poly d1 = p.derivative();
  return op.p2 * d1.derivative() + op.p1 * d1 + op.p0 * p;
}

inline PowerForm apply_operator(const OperatorSpec& op, const PowerForm& f) {
  PowerForm d1 = derivative(f);
  PowerForm d2 = derivative(d1);
  return add(add(multiply(op.p2, d2), multiply(op.p1, d1)), multiply(op.p0, f));
}

namespace ops {

inline Poly P(std::initializer_list<Rational> c) { return Poly(c); }

// D^2 + 2x D
inline OperatorSpec inv_hermite() { return {P({1}), P({0, 2}), {}}; }

// x D^2 + (1 - alpha + x) D
inline OperatorSpec inv_laguerre(const Rational& a) { return {P({0, 1}), P({1 - a, 1}), {}}; }

// (1 - x^2) D^2 + ((alpha - beta) + (alpha + beta - 2) x) D
inline OperatorSpec inv_jacobi(const Rational& a, const Rational& b) {
  return {P({1, 0, -1}), P({a - b, a + b - 2}), {}};
}

// -D^2 + 2x D, so that H_n has eigenvalue 2n
inline OperatorSpec hermite() { return {P({-1}), P({0, 2}), {}}; }

// x D^2 + (alpha + 1 - x) D
inline OperatorSpec laguerre(const Rational& a) { return {P({0, 1}), P({a + 1, -1}), {}}; }

// (1 - x^2) D^2 + ((beta - alpha) - (alpha + beta + 2) x) D
inline OperatorSpec jacobi(const Rational& a, const Rational& b) {
  return {P({1, 0, -1}), P({b - a, -(a + b + 2)}), {}};
}

}  // namespace ops
}  // namespace fracinv
