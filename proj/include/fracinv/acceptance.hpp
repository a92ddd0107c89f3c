#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extension.hpp"
#include "families.hpp"
#include "favard.hpp"
#include "fracalc.hpp"
#include "spectral.hpp"
#include "verify/oracles.hpp"

namespace fracinv::acceptance {

struct Options {
  bool fast = false;
  uint64_t seed = 20240611;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

// collects failed checks; the first few go into the detail line
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (notes_.size() < 4) notes_.push_back(what);
    }
  }
  void note(const std::string& s) { info_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << count_ << " checks";
    } else {
      os << failed_ << " of " << count_ << " checks failed";
      for (auto& n : notes_) os << "; " << n;
    }
    for (auto& i : info_) os << "; " << i;
    return os.str();
  }

 private:
  int count_ = 0, failed_ = 0;
  std::vector<std::string> notes_, info_;
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

inline std::vector<std::pair<Family, FamilyParams>> inverse_cases() {
  return {{Family::InvHermite, {}},
          {Family::InvLaguerre, {q(1, 2), 0}},
          {Family::InvLaguerre, {q(3, 7), 0}},
          {Family::InvLaguerre, {q(-1, 3), 0}},
          {Family::InvJacobi, {q(1, 2), q(1, 2)}},
          {Family::InvJacobi, {q(1, 3), q(1, 4)}},
          {Family::InvJacobi, {q(0), q(0)}}};
}

inline std::string label(Family f, const FamilyParams& p) {
  std::string s = family_name(f);
  if (f == Family::InvLaguerre || f == Family::Laguerre) s += "(" + to_string(p.alpha) + ")";
  if (f == Family::InvJacobi || f == Family::Jacobi) s += "(" + to_string(p.alpha) + "," + to_string(p.beta) + ")";
  return s;
}

inline std::vector<WeightSpec> all_presets() {
  return {presets::ou(), presets::hermite(), presets::laguerre(0.5), presets::jacobi(0.5, 0.5), WeightSpec::zero()};
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace detail

inline Result criterion_1(const Options&) {
  detail::Checker c;
  for (auto& [fam, p] : detail::inverse_cases()) {
    auto R = family_recurrence(fam, 20, p);
    auto G = family_genfun(fam, 20, p);
    for (int n = 0; n <= 20; ++n) {
      auto D = family_rodrigues(fam, n, p);
      c.expect(R[n] == D && R[n] == G[n], detail::label(fam, p) + " n=" + std::to_string(n));
    }
  }
  return {1, "triple construction", c.ok(), c.detail()};
}

inline Result criterion_2(const Options&) {
  detail::Checker c;
  for (auto& [fam, p] : detail::inverse_cases()) {
    auto r = eigencheck(fam, 20, p);
    c.expect(r.ok(), detail::label(fam, p) + ": " + (r.failures.empty() ? "" : r.failures.front()));
  }
  std::vector<BasisSpec> bases{{}};
  for (auto& [fam, p] : detail::inverse_cases()) {
    if (fam == Family::InvLaguerre) bases.push_back({Basis::InvLaguerre, p.alpha, 0});
    if (fam == Family::InvJacobi) bases.push_back({Basis::InvJacobi, p.alpha, p.beta});
  }
  for (auto& b : bases) {
    auto r = eigencheck_starred(b, 15);
    c.expect(r.eigen_ok(), basis_name(b) + ": not an eigenfunction");
    if (!r.stated_mismatches.empty())
      c.expect(false, basis_name(b) + " starred " + r.stated_mismatches.front());
    else
      c.expect(true, "");
  }
  return {2, "eigen-identities", c.ok(), c.detail()};
}

inline Result criterion_3(const Options&) {
  detail::Checker c;
  BasisSpec g;
  double d = orthogonality_defect(g, 21);
  c.expect(d <= 1e-10, "invgauss Gram off-diagonal " + detail::fmt(d));
  for (int n = 0; n <= 20; ++n) {
    auto h = conjugated(Expansion::mode(g, n));
    double direct = inner_product(h, h, 32);
    double closed = M_PI * std::pow(2.0, n) * std::tgamma(n + 1.0);
    c.expect(detail::rel(direct, closed) <= 1e-10, "||H*_" + std::to_string(n) + "||^2");
  }
  for (auto b : {BasisSpec{Basis::InvLaguerre, detail::q(1, 2), 0}, BasisSpec{Basis::InvLaguerre, detail::q(-1, 3), 0},
                 BasisSpec{Basis::InvJacobi, detail::q(1, 3), detail::q(1, 4)}, BasisSpec{Basis::InvJacobi, 0, 0}}) {
    double dd = orthogonality_defect(b, 21);
    c.expect(dd <= 1e-10, basis_name(b) + " Gram off-diagonal " + detail::fmt(dd));
    for (int n = 0; n <= 20; ++n) {
      auto h = conjugated(Expansion::mode(b, n));
      c.expect(detail::rel(inner_product(h, h, 32), squared_norm(b, n)) <= 1e-10,
               basis_name(b) + " norm n=" + std::to_string(n));
    }
  }
  return {3, "orthogonality", c.ok(), c.detail()};
}

inline Result criterion_4(const Options&) {
  detail::Checker c;
  for (auto& [fam, p] : detail::inverse_cases()) {
    if (fam != Family::InvJacobi) continue;
    auto R = family_recurrence(fam, 10, p);
    for (int n = 0; n <= 10; ++n) {
      std::string tag = detail::label(fam, p) + " n=" + std::to_string(n);
      c.expect(R[n](Rational(1)) == binom(n - p.alpha, n), tag + " at +1");
      Rational m = binom(n - p.beta, n);
      if (n % 2) m = -m;
      c.expect(R[n](Rational(-1)) == m, tag + " at -1");
      c.expect(hypergeom_form(n, p.alpha, p.beta) == R[n], tag + " hypergeometric");
    }
  }
  return {4, "endpoint and hypergeometric identities", c.ok(), c.detail()};
}

inline Result criterion_5(const Options&) {
  detail::Checker c;
  double worst = 0;
  for (auto& w : detail::all_presets())
    for (double a : {0.1, 0.25, 0.5, 0.75, 0.9})
      for (double lam : {0.5, 1.0, 2.0}) {
        double x = w.x0();
        auto e = Func::exponential(lam);
        double base = w.E(x) * std::exp(lam * x);
        double d = detail::rel(frac_deriv_left_conj(w, {a}, e, x), std::pow(lam, a) * base);
        double i = detail::rel(frac_int_left_conj(w, a, e, x), std::pow(lam, -a) * base);
        worst = std::max({worst, d, i});
        std::string tag = w.name() + " alpha=" + detail::fmt(a) + " lambda=" + detail::fmt(lam);
        c.expect(d <= 1e-6, tag + " derivative rel err " + detail::fmt(d));
        c.expect(i <= 1e-6, tag + " integral rel err " + detail::fmt(i));
      }
  c.note("worst rel err " + detail::fmt(worst));
  return {5, "fractional oracle", c.ok(), c.detail()};
}

inline Result criterion_6(const Options&) {
  detail::Checker c;
  struct Case {
    WeightSpec w;
    double alpha;
    Func f;
    double x;
    std::string name;
  };
  std::vector<Case> cases{{WeightSpec::zero(), 0.5, Func::bump(0, 1), 0.0, "zero/bump/0.5"},
                          {presets::ou(), 0.5, Func::exponential(1.0), 0.0, "ou/exp/0.5"},
                          {WeightSpec::zero(), 0.9, Func::bump(0, 1), 0.0, "zero/bump/0.9"},
                          {presets::hermite(), 0.3, Func::exponential(2.0), 0.2, "hermite/exp/0.3"}};
  double worst = 0;
  for (auto& k : cases) {
    auto r = ftc_check(k.w, k.alpha, k.f, k.x);
    worst = std::max(worst, r.error);
    c.expect(r.error <= 1e-4, k.name + " error " + detail::fmt(r.error));
  }
  c.note("worst error " + detail::fmt(worst));
  return {6, "FTC reconstruction", c.ok(), c.detail()};
}

inline Result criterion_7(const Options&) {
  detail::Checker c;
  auto e = bbm_sweep(presets::hermite(), Func::exponential(2.0), 0.3);
  c.expect(e.dev_at_0 <= 1e-3, "hermite/exp alpha->0 dev " + detail::fmt(e.dev_at_0));
  c.expect(e.dev_at_1 <= 1e-3, "hermite/exp alpha->1 dev " + detail::fmt(e.dev_at_1));
  auto b = bbm_sweep(presets::ou(), Func::bump(0, 1.5), -0.4);
  c.expect(b.dev_at_0 <= 1e-3, "ou/bump alpha->0 dev " + detail::fmt(b.dev_at_0));
  c.expect(b.dev_at_1 <= 1e-3, "ou/bump alpha->1 dev " + detail::fmt(b.dev_at_1));
  auto z = bbm_sweep(WeightSpec::zero(), Func::bump(0.2, 1.0), 0.1);
  c.expect(z.dev_at_0 <= 1e-3, "zero/bump alpha->0 dev " + detail::fmt(z.dev_at_0));
  c.expect(z.dev_at_1 <= 1e-3, "zero/bump alpha->1 dev " + detail::fmt(z.dev_at_1));
  c.note("worst dev " + detail::fmt(std::max({e.dev_at_0, e.dev_at_1, b.dev_at_0, b.dev_at_1, z.dev_at_0, z.dev_at_1})));
  return {7, "BBM endpoints", c.ok(), c.detail()};
}

inline Result criterion_8(const Options& o) {
  detail::Checker c;
  int trials = o.fast ? 1000 : 10000;
  auto rep = max_principle_probe(detail::all_presets(), {0.1, 0.25, 0.5, 0.75, 0.9}, trials, o.seed);
  c.expect(rep.trials == trials, "trial count");
  c.expect(rep.violations == 0, std::to_string(rep.violations) + " violations, first " +
                                    (rep.offending.empty() ? std::string() : rep.offending.front()));
  c.expect(std::abs(rep.equality_value) <= 1e-12, "equality case " + detail::fmt(rep.equality_value));
  c.note(std::to_string(trials) + " trials, max value " + detail::fmt(rep.max_value));
  return {8, "maximum principle", c.ok(), c.detail()};
}

inline Result criterion_9(const Options&) {
  detail::Checker c;
  auto zero = WeightSpec::zero();
  for (double a : {0.25, 0.5, 0.75})
    for (double lam : {0.5, 1.0, 2.0}) {
      ExtensionField f(zero, a, Func::exponential(lam));
      for (double y : {0.05, 0.3, 1.0, 2.5}) {
        double r = detail::rel(f.value(0.2, y), oracle::extension_exponential(a, lam, 0.2, y));
        c.expect(r <= 1e-8, "Bessel alpha=" + detail::fmt(a) + " lambda=" + detail::fmt(lam) + " y=" + detail::fmt(y));
      }
    }
  auto h = presets::hermite();
  ExtensionField fl(h, 0.5, Func::exponential(1.0));
  double bl = std::abs(fl.boundary_limit(0.3, {0.1, 0.05, 0.025}).value - h.E(0.3) * std::exp(0.3));
  c.expect(bl <= 1e-4, "boundary limit hermite " + detail::fmt(bl));
  ExtensionField gl(zero, 0.3, Func::bump(0, 1));
  double bl2 = std::abs(gl.boundary_limit(0.2, {0.1, 0.05, 0.025}).value - Func::bump_value(0.2, 0, 1));
  c.expect(bl2 <= 1e-4, "boundary limit bump " + detail::fmt(bl2));

  auto ou = presets::ou();
  ExtensionField t1(zero, 0.5, Func::exponential(1.0));
  double n1 = std::abs(t1.trace(0.0, {0.2, 0.1, 0.05, 0.025}).limit - frac_deriv_left_conj(zero, {0.5}, Func::exponential(1.0), 0.0));
  c.expect(n1 <= 1e-4, "trace zero " + detail::fmt(n1));
  ExtensionField t2(ou, 0.25, Func::exponential(1.0));
  double n2 = std::abs(t2.trace(0.0, {0.2, 0.1, 0.05, 0.025}).limit - frac_deriv_left_conj(ou, {0.25}, Func::exponential(1.0), 0.0));
  c.expect(n2 <= 1e-4, "trace ou " + detail::fmt(n2));
  ExtensionField t3(h, 0.6, Func::bump(0, 1.5));
  auto tr3 = t3.trace(0.2, {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625});
  double n3 = std::abs(tr3.limit - frac_deriv_left_conj(h, {0.6}, Func::bump(0, 1.5), 0.2));
  c.expect(n3 <= 1e-4, "trace hermite bump " + detail::fmt(n3));

  double worst_order = 1e300;
  for (auto& [w, a] : std::vector<std::pair<WeightSpec, double>>{{zero, 0.5}, {ou, 0.25}, {h, 0.7}}) {
    ExtensionField f(w, a, Func::exponential(1.0));
    auto rows = f.residual_table(0.2, 0.8, 0.05, 3);
    for (size_t k = 1; k < rows.size(); ++k) {
      double order = std::log2(std::abs(rows[k - 1].residual / rows[k].residual));
      worst_order = std::min(worst_order, order);
      c.expect(order >= 1.8, w.name() + " residual order " + detail::fmt(order));
    }
  }
  c.note("trace errs " + detail::fmt(n1) + ", " + detail::fmt(n2) + ", " + detail::fmt(n3) + "; min residual order " +
         detail::fmt(worst_order));
  return {9, "extension problem", c.ok(), c.detail()};
}

inline Result criterion_10(const Options& o) {
  detail::Checker c;
  BasisSpec g;
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < 20; ++k) {
    auto f = random_expansion(g, 12, rng);
    for (double t : {0.0, 0.1, 1.0, 2.5}) {
      auto h = heat_semigroup(f, t);
      bool exact = true;
      for (int n = 0; n < f.size(); ++n)
        exact = exact && h.coeffs()[n] == f.coeffs()[n] * std::exp(-t * (2.0 * n + 2));
      c.expect(exact, "semigroup coefficients");
      c.expect(h.norm() <= std::exp(-2 * t) * f.norm() * (1 + 1e-14), "contraction t=" + detail::fmt(t));
    }
  }
  for (int n = 0; n <= 20; ++n) {
    auto r = riesz_gain(n);
    c.expect(r.riesz == 1, "Riesz isometry n=" + std::to_string(n));
    c.expect(r.riesz_star == make_rational(n, n + 1), "R* contraction n=" + std::to_string(n));
  }
  int trials = o.fast ? 20 : 100;
  auto sg = spectral_suite(g, trials, 10, o.seed);
  c.expect(sg.ok(), "invgauss suite: " + (sg.failures.empty() ? std::string() : sg.failures.front()));
  for (int k = 0; k < 5; ++k) {
    auto f = random_expansion(g, 20, rng);
    auto gf = g_function_norm(f);
    c.expect(std::abs(gf.quadrature - gf.closed_form) <= 1e-8 * std::max(1.0, gf.closed_form), "g-function 20 modes");
  }
  double worst_ratio = sg.worst_maximal_ratio;
  for (auto b : {BasisSpec{Basis::InvLaguerre, detail::q(1, 2), 0}, BasisSpec{Basis::InvJacobi, 1, 1},
                 BasisSpec{Basis::InvJacobi, detail::q(1, 2), detail::q(1, 3)}}) {
    auto s = laguerre_jacobi_suite(b, o.fast ? 10 : 30, 10, o.seed);
    worst_ratio = std::max(worst_ratio, s.worst_maximal_ratio);
    c.expect(s.ok(), basis_name(b) + ": " + (s.failures.empty() ? std::string() : s.failures.front()));
  }
  c.note(std::to_string(trials) + " invgauss trials, worst maximal ratio " + detail::fmt(worst_ratio));
  return {10, "spectral suite", c.ok(), c.detail()};
}

inline Result criterion_11(const Options&) {
  detail::Checker c;
  for (auto& [fam, p] : detail::inverse_cases()) {
    auto r = favard_report(fam, p, 12);
    c.expect(r.ok(), detail::label(fam, p) + ": " + (r.failures.empty() ? std::string() : r.failures.front()));
    for (auto& d : r.diagonal) c.expect(d != 0, detail::label(fam, p) + " vanishing L[Q_n^2]");
  }
  MomentFunctional mf(Family::InvHermite, {}, 4);
  auto mu = mf.moments(4);
  std::vector<Rational> want{2, 0, -1, 0, detail::q(3, 2)};
  c.expect(mu == want, "Hermite moments");
  return {11, "Favard functional", c.ok(), c.detail()};
}

inline Result criterion_12(const Options&) {
  detail::Checker c;
  auto bu = Func::bump(0.2, 1.1);
  ScalarFn s = [](double y) { return std::sin(y) + 2; };
  for (auto& w : {presets::ou(), presets::hermite(), WeightSpec::zero()}) {
    for (double x : {-1.0, 0.0, 0.8}) {
      c.expect(semigroup_left(w, s, 0.0, x) == s(x) && semigroup_right(w, s, 0.0, x) == s(x), w.name() + " identity");
      ScalarFn inner = [&](double y) { return semigroup_left(w, s, 0.7, y); };
      c.expect(detail::rel(semigroup_left(w, inner, 0.3, x), semigroup_left(w, s, 1.0, x)) <= 1e-12, w.name() + " composition");
      ScalarFn inner_r = [&](double y) { return semigroup_right(w, s, 0.7, y); };
      c.expect(detail::rel(semigroup_right(w, inner_r, 0.3, x), semigroup_right(w, s, 1.0, x)) <= 1e-12,
               w.name() + " right composition");
    }
    ScalarFn u = [&](double y) { return w.E(y) * bu(y); };
    for (double t : {0.1, 1.0, 5.0})
      for (int p : {1, 2}) {
        auto n0 = integrate_adaptive([&](double x) { return std::pow(std::abs(u(x) * w.E_inv(x)), p); }, -0.9, 1.3, 1e-14, 1e-13);
        auto nt = integrate_adaptive([&](double x) { return std::pow(std::abs(semigroup_left(w, u, t, x) * w.E_inv(x)), p); },
                                     -0.9 + t, 1.3 + t, 1e-14, 1e-13);
        c.expect(detail::rel(nt.value, n0.value) <= 1e-8, w.name() + " weighted L" + std::to_string(p) + " t=" + detail::fmt(t));
      }
  }
  return {12, "semigroup axioms", c.ok(), c.detail()};
}

inline const std::vector<std::function<Result(const Options&)>>& criteria() {
  static const std::vector<std::function<Result(const Options&)>> all{
      criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};
  return all;
}

inline Result run_one(int id, const Options& o) {
  if (id < 1 || id > int(criteria().size())) throw ParameterError("no criterion " + std::to_string(id));
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = criteria()[id - 1](o);
  } catch (const std::exception& e) {
    r.id = id;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<Result> run_all(const Options& o, const std::function<void(const Result&)>& on_result = {}) {
  std::vector<Result> out;
  for (int id = 1; id <= int(criteria().size()); ++id) {
    out.push_back(run_one(id, o));
    if (on_result) on_result(out.back());
  }
  return out;
}

inline std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace fracinv::acceptance
