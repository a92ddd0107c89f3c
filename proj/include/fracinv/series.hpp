#pragma once

#include <vector>

#include "polynomial.hpp"

namespace fracinv {

// Power series in t truncated after t^order, coefficients are polynomials in x.
class Series {
 public:
  explicit Series(int order) : c_(order + 1) {}
  Series(int order, std::vector<Poly> c) : c_(order + 1) {
    for (size_t i = 0; i < c.size() && i < c_.size(); ++i) c_[i] = std::move(c[i]);
  }

  int order() const { return int(c_.size()) - 1; }
  const Poly& operator[](int k) const { return c_.at(k); }
  Poly& operator[](int k) { return c_.at(k); }
  const std::vector<Poly>& coeffs() const { return c_; }

  friend Series operator+(Series a, const Series& b) {
    check(a, b);
    for (int k = 0; k <= a.order(); ++k) a.c_[k] += b.c_[k];
    return a;
  }
  friend Series operator-(Series a, const Series& b) {
    check(a, b);
    for (int k = 0; k <= a.order(); ++k) a.c_[k] -= b.c_[k];
    return a;
  }
  friend Series operator*(Series a, const Rational& s) {
    for (auto& p : a.c_) p *= s;
    return a;
  }
  friend Series operator*(const Series& a, const Series& b) {
    check(a, b);
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

 private:
  static void check(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw ConsistencyError("series order mismatch");
  }
  std::vector<Poly> c_;
};

// exp(s) for s with vanishing constant term: y' = s'y gives k y_k = sum j s_j y_{k-j}
inline Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw ConsistencyError("series_exp needs s(0) = 0");
  int n = s.order();
  Series y(n);
  y[0] = Poly::constant(1);
  for (int k = 1; k <= n; ++k) {
    Poly acc;
    for (int j = 1; j <= k; ++j)
      if (!s[j].is_zero()) acc += (s[j] * y[k - j]) * Rational(j);
    y[k] = acc / Rational(k);
  }
  return y;
}

// (1 + v)^r for v with vanishing constant term, via
// k y_k = sum_{j=1..k} ((r+1) j - k) v_j y_{k-j}
inline Series series_pow1p(const Series& v, const Rational& r) {
  if (!v[0].is_zero()) throw ConsistencyError("series_pow1p needs v(0) = 0");
  int n = v.order();
  Series y(n);
  y[0] = Poly::constant(1);
  for (int k = 1; k <= n; ++k) {
    Poly acc;
    for (int j = 1; j <= k; ++j) {
      if (v[j].is_zero()) continue;
      Rational f = (r + 1) * j - k;
      if (f != 0) acc += (v[j] * y[k - j]) * f;
    }
    y[k] = acc / Rational(k);
  }
  return y;
}

}  // namespace fracinv
