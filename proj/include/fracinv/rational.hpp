#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace fracinv {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// accepts "p/q" or "p", optional sign
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) throw ParameterError("empty rational");
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool sign_ok) {
    if (!d.empty() && sign_ok && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParameterError("not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(num.begin());
  BigInt n(num), d(den);
  if (d == 0) throw ParameterError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// exact value of a binary double
inline Rational from_double(double x) {
  Rational r(x);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// generalized binomial C(r, k)
inline Rational binom(const Rational& r, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) {
    out *= (r - i);
    out /= (i + 1);
  }
  return out;
}

// rising factorial (q)_k
inline Rational pochhammer(const Rational& q, long k) {
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= (q + i);
  return out;
}

inline Rational factorial(long n) {
  BigInt f(1);
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

inline Rational pow_int(Rational base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("0 to a negative power");
    base = 1 / base;
    e = -e;
  }
  Rational out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace fracinv
