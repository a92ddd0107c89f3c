#pragma once

#include <map>
#include <utility>
#include <variant>

#include "polynomial.hpp"

namespace fracinv {

// e^{c x^2} p(x)
struct ExpQuadForm {
  Rational c;
  Poly p;
};

// e^{c x} x^mu sum_j a_j x^j
struct ExpLinForm {
  Rational c;
  Rational mu;
  Poly a;
};

// sum_{j,k} a_{jk} (1-x)^{p+j} (1+x)^{q+k}
struct TwoFactorForm {
  Rational p, q;
  std::map<std::pair<int, int>, Rational> a;
};

using PowerForm = std::variant<ExpQuadForm, ExpLinForm, TwoFactorForm>;

namespace detail {

inline void add_term(TwoFactorForm& f, int j, int k, const Rational& v) {
  if (v == 0) return;
  auto [it, fresh] = f.a.try_emplace({j, k}, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) f.a.erase(it);
  }
}

inline int integer_offset(const Rational& d, const char* what) {
  if (!is_integer(d)) throw ConsistencyError(std::string("non-integer exponent offset in ") + what);
  return int(d.get_num().get_si());
}

inline ExpLinForm lower_mu(const ExpLinForm& f, const Rational& mu) {
  int s = integer_offset(f.mu - mu, "ExpLin alignment");
  if (s < 0) throw ConsistencyError("ExpLin alignment would raise exponent");
  return {f.c, mu, f.a * Poly::monomial(s)};
}

inline TwoFactorForm lower_base(const TwoFactorForm& f, const Rational& p, const Rational& q) {
  int sj = integer_offset(f.p - p, "two-factor alignment");
  int sk = integer_offset(f.q - q, "two-factor alignment");
  if (sj < 0 || sk < 0) throw ConsistencyError("two-factor alignment would raise exponent");
  TwoFactorForm r{p, q, {}};
  for (const auto& [jk, v] : f.a) add_term(r, jk.first + sj, jk.second + sk, v);
  return r;
}

}  // namespace detail

inline PowerForm derivative(const PowerForm& f) {
  return std::visit(
      [](const auto& g) -> PowerForm {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ExpQuadForm>) {
          return ExpQuadForm{g.c, g.p.derivative() + Poly::x() * g.p * (2 * g.c)};
        } else if constexpr (std::is_same_v<G, ExpLinForm>) {
          // d/dx e^{cx} x^{mu+j} = e^{cx} x^{mu-1} (c x^{j+1} + (mu+j) x^j)
          std::vector<Rational> b(g.a.coeffs().size() + 1, Rational(0));
          for (size_t j = 0; j < g.a.coeffs().size(); ++j) {
            b[j] += (g.mu + long(j)) * g.a.coeffs()[j];
            b[j + 1] += g.c * g.a.coeffs()[j];
          }
          return ExpLinForm{g.c, g.mu - 1, Poly(std::move(b))};
        } else {
          TwoFactorForm r{g.p - 1, g.q - 1, {}};
          for (const auto& [jk, v] : g.a) {
            auto [j, k] = jk;
            detail::add_term(r, j, k + 1, -(g.p + j) * v);
            detail::add_term(r, j + 1, k, (g.q + k) * v);
          }
          return r;
        }
      },
      f);
}

inline PowerForm derivative(PowerForm f, int n) {
  for (int i = 0; i < n; ++i) f = derivative(f);
  return f;
}

inline PowerForm multiply(const Poly& m, const PowerForm& f) {
  return std::visit(
      [&](const auto& g) -> PowerForm {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ExpQuadForm>) {
          return ExpQuadForm{g.c, m * g.p};
        } else if constexpr (std::is_same_v<G, ExpLinForm>) {
          return ExpLinForm{g.c, g.mu, m * g.a};
        } else {
          // write m in powers of (1+x)
          Poly b = m.shifted(Rational(-1));
          TwoFactorForm r{g.p, g.q, {}};
          for (const auto& [jk, v] : g.a)
            for (size_t i = 0; i < b.coeffs().size(); ++i)
              detail::add_term(r, jk.first, jk.second + int(i), v * b.coeffs()[i]);
          return r;
        }
      },
      f);
}

inline PowerForm add(const PowerForm& f, const PowerForm& g) {
  if (f.index() != g.index()) throw ConsistencyError("adding power forms of different kinds");
  if (auto* a = std::get_if<ExpQuadForm>(&f)) {
    const auto& b = std::get<ExpQuadForm>(g);
    if (a->c != b.c) throw ConsistencyError("ExpQuad bases differ");
    return ExpQuadForm{a->c, a->p + b.p};
  }
  if (auto* a = std::get_if<ExpLinForm>(&f)) {
    const auto& b = std::get<ExpLinForm>(g);
    if (a->c != b.c) throw ConsistencyError("ExpLin bases differ");
    Rational mu = a->mu < b.mu ? a->mu : b.mu;
    auto x = detail::lower_mu(*a, mu), y = detail::lower_mu(b, mu);
    return ExpLinForm{a->c, mu, x.a + y.a};
  }
  const auto& a = std::get<TwoFactorForm>(f);
  const auto& b = std::get<TwoFactorForm>(g);
  Rational p = a.p < b.p ? a.p : b.p;
  Rational q = a.q < b.q ? a.q : b.q;
  auto r = detail::lower_base(a, p, q);
  for (const auto& [jk, v] : detail::lower_base(b, p, q).a) detail::add_term(r, jk.first, jk.second, v);
  return r;
}

inline PowerForm scale(const Rational& s, const PowerForm& f) { return multiply(Poly::constant(s), f); }

// Divide out the given base factor and return the polynomial left over.
// Any fractional or negative residual exponent is an engine error.
inline Poly strip_exp_quad(const PowerForm& f, const Rational& c) {
  const auto* g = std::get_if<ExpQuadForm>(&f);
  if (!g || g->c != c) throw ConsistencyError("expected e^{c x^2} form");
  return g->p;
}

inline Poly strip_exp_lin(const PowerForm& f, const Rational& c, const Rational& mu) {
  const auto* g = std::get_if<ExpLinForm>(&f);
  if (!g || g->c != c) throw ConsistencyError("expected e^{c x} x^mu form");
  if (g->a.is_zero()) return {};
  int s = detail::integer_offset(g->mu - mu, "ExpLin strip");
  std::vector<Rational> out;
  for (size_t j = 0; j < g->a.coeffs().size(); ++j) {
    if (g->a.coeffs()[j] == 0) continue;
    int e = s + int(j);
    if (e < 0) throw ConsistencyError("negative power of x left after strip");
    if (int(out.size()) <= e) out.resize(e + 1, Rational(0));
    out[e] += g->a.coeffs()[j];
  }
  return Poly(std::move(out));
}

namespace detail {

// exact division by (x - root), remainder must vanish
inline Poly divide_linear(const Poly& p, const Rational& root, const char* what) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  int n = int(c.size()) - 1;
  std::vector<Rational> q(std::max(n, 0), Rational(0));
  Rational carry = 0;
  for (int i = n; i >= 1; --i) {
    carry = c[i] + carry * root;
    q[i - 1] = carry;
  }
  if (c[0] + carry * root != 0) throw ConsistencyError(std::string("non-polynomial residue after strip: ") + what);
  return Poly(std::move(q));
}

}  // namespace detail

// Divide out (1-x)^p (1+x)^q. Terms are first collected at the form's own base,
// so negative powers that cancel in the sum are accepted; anything left over is an error.
inline Poly strip_two_factor(const PowerForm& f, const Rational& p, const Rational& q) {
  const auto* g = std::get_if<TwoFactorForm>(&f);
  if (!g) throw ConsistencyError("expected two-factor form");
  if (g->a.empty()) return {};
  int sj = detail::integer_offset(g->p - p, "two-factor strip");
  int sk = detail::integer_offset(g->q - q, "two-factor strip");
  const Poly one_minus{Rational(1), Rational(-1)}, one_plus{Rational(1), Rational(1)};
  Poly out;
  for (const auto& [jk, v] : g->a) {
    Poly t = Poly::constant(v);
    for (int i = 0; i < jk.first; ++i) t = t * one_minus;
    for (int i = 0; i < jk.second; ++i) t = t * one_plus;
    out += t;
  }
  for (int i = 0; i < sj; ++i) out = out * one_minus;
  for (int i = 0; i < sk; ++i) out = out * one_plus;
  // (1-x) = -(x-1)
  for (int i = 0; i < -sj; ++i) out = -detail::divide_linear(out, Rational(1), "(1-x)");
  for (int i = 0; i < -sk; ++i) out = detail::divide_linear(out, Rational(-1), "(1+x)");
  return out;
}

// (1-x)^p (1+x)^q P(x), with P rewritten in powers of (1+x)
inline TwoFactorForm two_factor_from_poly(const Rational& p, const Rational& q, const Poly& P) {
  TwoFactorForm r{p, q, {}};
  Poly b = P.shifted(Rational(-1));
  for (size_t k = 0; k < b.coeffs().size(); ++k) detail::add_term(r, 0, int(k), b.coeffs()[k]);
  return r;
}

}  // namespace fracinv
