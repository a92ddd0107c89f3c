#pragma once

#include <string>
#include <vector>

#include "families.hpp"

namespace fracinv {

// Monic three-term recurrence Q_{n+1} = (x - c_{n+1}) Q_n - lam_{n+1} Q_{n-1},
// Q_0 = 1, Q_{-1} = 0. Index 0 of c and lam holds c_1 and lam_1.
struct MonicRecurrence {
  std::vector<Rational> c, lam;
};

inline Rational first_eigenvalue(Family fam, const FamilyParams& p) {
  switch (fam) {
    case Family::InvHermite: return 2;
    case Family::InvLaguerre: return 1;
    case Family::InvJacobi: return p.alpha + p.beta - 2;
    default: throw ParameterError("moment functional is built for the inverse families only");
  }
}

// monic versions Q_0..Q_N of the inverse family
inline std::vector<Poly> monic_family(Family fam, int N, const FamilyParams& p) {
  auto F = family_recurrence(fam, N, p);
  for (int n = 0; n <= N; ++n) {
    if (F[n].degree() != n) throw ParameterError("degree drops at n = " + std::to_string(n) + "; no monic family");
    F[n] = F[n] * Rational(1 / F[n].leading());
  }
  return F;
}

// c_{n+1}, lam_{n+1} read off exactly from Q_{n+1} - x Q_n = -c_{n+1} Q_n - lam_{n+1} Q_{n-1}
inline MonicRecurrence recurrence_from_monic(const std::vector<Poly>& Q) {
  MonicRecurrence r;
  for (size_t n = 0; n + 1 < Q.size(); ++n) {
    Poly d = Q[n + 1] - Poly::x() * Q[n];
    Rational cn = -(d.degree() >= int(n) ? d.coeffs()[n] : Rational(0));
    Poly rest = d + Q[n] * cn;
    Rational ln = 0;
    if (n > 0) {
      ln = -(rest.degree() >= int(n) - 1 ? rest.coeffs()[n - 1] : Rational(0));
      rest = rest + Q[n - 1] * ln;
    }
    if (!rest.is_zero()) throw ConsistencyError("monic family is not three-term at n = " + std::to_string(n));
    r.c.push_back(cn);
    r.lam.push_back(ln);
  }
  return r;
}

// c_1..c_N and lam_1..lam_N; lam_1 is the first eigenvalue
inline MonicRecurrence monic_recurrence(Family fam, const FamilyParams& p, int N) {
  if (N < 1) throw ParameterError("need N >= 1");
  MonicRecurrence r;
  const Rational& a = p.alpha;
  switch (fam) {
    case Family::InvHermite:
      for (int n = 0; n < N; ++n) {
        r.c.push_back(0);
        r.lam.push_back(make_rational(-n, 2));
      }
      break;
    case Family::InvLaguerre:
      // lam_{n+1} = n(n - a) vanishes at n = a
      if (is_integer(a) && a > 0)
        throw ParameterError("lambda_" + Rational(a + 1).get_num().get_str() +
                             " vanishes for inv-laguerre with alpha = " + to_string(a));
      for (int n = 0; n < N; ++n) {
        r.c.push_back(a - 1 - 2 * n);
        r.lam.push_back(n * (n - a));
      }
      break;
    case Family::InvJacobi:
      // dividing the three-term recurrence by the leading-coefficient ratios,
      // done exactly on the monic polynomials
      r = recurrence_from_monic(monic_family(fam, N, p));
      break;
    default:
      throw ParameterError("moment functional is built for the inverse families only");
  }
  r.lam[0] = first_eigenvalue(fam, p);
  for (int n = 0; n < N; ++n)
    if (r.lam[n] == 0)
      throw ParameterError("lambda_" + std::to_string(n + 1) + " vanishes for " + family_name(fam) + " with alpha = " +
                           to_string(p.alpha) + (fam == Family::InvJacobi ? ", beta = " + to_string(p.beta) : ""));
  return r;
}

class MomentFunctional {
 public:
  MomentFunctional(Family fam, FamilyParams p, int N) : fam_(fam), p_(std::move(p)), rec_(monic_recurrence(fam_, p_, N)) {}

  Family family() const { return fam_; }
  const FamilyParams& params() const { return p_; }
  const MonicRecurrence& recurrence() const { return rec_; }
  int depth() const { return int(rec_.lam.size()); }

  // Q_0..Q_n from the stored recurrence
  std::vector<Poly> monic(int n) const {
    need(n);
    std::vector<Poly> Q{Poly::constant(1)};
    Poly prev;
    for (int k = 0; k < n; ++k) {
      Poly next = (Poly::x() - Poly::constant(rec_.c[k])) * Q[k] - prev * (k > 0 ? rec_.lam[k] : Rational(0));
      prev = Q[k];
      Q.push_back(std::move(next));
    }
    return Q;
  }

  // mu_0 = lam_1, then L[Q_k] = 0 forces mu_k = -sum_{j<k} [x^j]Q_k mu_j
  std::vector<Rational> moments(int K) const {
    auto Q = monic(K);
    std::vector<Rational> mu{rec_.lam[0]};
    for (int k = 1; k <= K; ++k) {
      Rational s = 0;
      for (int j = 0; j < k; ++j) s += Q[k].coeffs()[j] * mu[j];
      mu.push_back(-s);
    }
    return mu;
  }

  // Second route: expand x^k in the Q basis with the Jacobi matrix alone,
  // x Q_j = Q_{j+1} + c_{j+1} Q_j + lam_{j+1} Q_{j-1}; then L[x^k] = lam_1 [Q_0]x^k.
  std::vector<Rational> moments_jacobi_matrix(int K) const {
    need(K);
    std::vector<Rational> v{Rational(1)};
    std::vector<Rational> mu{rec_.lam[0]};
    for (int k = 1; k <= K; ++k) {
      std::vector<Rational> w(v.size() + 1, Rational(0));
      for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        w[j + 1] += v[j];
        w[j] += rec_.c[j] * v[j];
        if (j > 0) w[j - 1] += rec_.lam[j] * v[j];
      }
      v = std::move(w);
      mu.push_back(rec_.lam[0] * v[0]);
    }
    return mu;
  }

  Rational apply(const Poly& q, const std::vector<Rational>& mu) const {
    if (q.is_zero()) return 0;
    if (q.degree() >= int(mu.size())) throw ParameterError("not enough moments for degree " + std::to_string(q.degree()));
    Rational s = 0;
    for (size_t j = 0; j < q.coeffs().size(); ++j) s += q.coeffs()[j] * mu[j];
    return s;
  }

  Rational apply(const Poly& q) const { return apply(q, moments(std::max(q.degree(), 0))); }

 private:
  // monic(n) uses c_1..c_n and lam_2..lam_n
  void need(int n) const {
    if (n > depth()) throw ParameterError("functional built to depth " + std::to_string(depth()) + ", asked for " + std::to_string(n));
  }

  Family fam_;
  FamilyParams p_;
  MonicRecurrence rec_;
};

struct OrthogonalityReport {
  int N = 0;
  std::vector<Rational> moments, moments_unit;  // as built, and with L[1] = 1
  std::vector<Rational> diagonal;                // L[Q_n^2]
  std::vector<Rational> expected_diagonal;       // lam_1 ... lam_{n+1}
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// L[Q_m Q_n] = 0 for m != n <= N and L[Q_n^2] = lam_1 ... lam_{n+1}; needs a functional of depth N+1
inline OrthogonalityReport orthogonality_check(const MomentFunctional& mf, int N) {
  if (N < 0) throw ParameterError("N must be >= 0");
  OrthogonalityReport rep;
  rep.N = N;
  rep.moments = mf.moments(2 * N);
  auto other = mf.moments_jacobi_matrix(2 * N);
  for (int k = 0; k <= 2 * N; ++k)
    if (other[k] != rep.moments[k]) rep.failures.push_back("moment " + std::to_string(k) + " differs between routes");
  for (auto& m : rep.moments) rep.moments_unit.push_back(m / rep.moments[0]);
  auto Q = mf.monic(N);
  Rational prod = 1;
  for (int n = 0; n <= N; ++n) {
    prod *= mf.recurrence().lam[n];
    rep.expected_diagonal.push_back(prod);
    for (int m = 0; m <= n; ++m) {
      Rational v = mf.apply(Q[m] * Q[n], rep.moments);
      if (m == n) {
        rep.diagonal.push_back(v);
        if (v != prod || v == 0)
          rep.failures.push_back("L[Q_" + std::to_string(n) + "^2] = " + to_string(v) + ", expected " + to_string(prod));
      } else if (v != 0) {
        rep.failures.push_back("L[Q_" + std::to_string(m) + " Q_" + std::to_string(n) + "] = " + to_string(v));
      }
    }
  }
  return rep;
}

inline OrthogonalityReport favard_report(Family fam, const FamilyParams& p, int N) {
  // L[Q_N^2] needs lam_{N+1}
  MomentFunctional mf(fam, p, std::max(2 * N, N + 1));
  return orthogonality_check(mf, N);
}

}  // namespace fracinv
