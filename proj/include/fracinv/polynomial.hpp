#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "rational.hpp"

namespace fracinv {

// Dense polynomial, coefficient i multiplies x^i. Works for Rational (exact)
// and double (plotting engine).
template <class T>
class Polynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  static Polynomial monomial(int k, const T& v = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }

  int degree() const { return c_.empty() ? kZeroDegree : int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(long(i));
    return Polynomial(std::move(d));
  }

  // q(y) = p(y + s)
  Polynomial shifted(const T& s) const {
    std::vector<T> a = c_;
    int n = int(a.size());
    for (int i = 0; i < n - 1; ++i)
      for (int j = n - 2; j >= i; --j) a[j] += s * a[j + 1];
    return Polynomial(std::move(a));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Polynomial& operator/=(const T& s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const T& s) { return a /= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using Poly = Polynomial<Rational>;
using PolyD = Polynomial<double>;

inline PolyD to_double(const Poly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_d());
  return PolyD(std::move(c));
}

// coefficients "c0 c1 ... cn" as p/q, the zero polynomial prints "0/1"
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0/1";
  std::string s;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += to_string(p.coeffs()[i]);
  }
  return s;
}

}  // namespace fracinv
