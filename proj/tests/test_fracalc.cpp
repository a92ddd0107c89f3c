#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "fracinv/fracalc.hpp"

using namespace fracinv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<WeightSpec> line_presets() { return {presets::ou(), presets::hermite(), WeightSpec::zero()}; }

std::vector<WeightSpec> all_presets() {
  return {presets::ou(), presets::hermite(), presets::laguerre(0.5), presets::jacobi(0.5, 0.5), WeightSpec::zero()};
}

}  // namespace

TEST_CASE("semigroup examples and axioms") {
  auto ou = presets::ou();
  ScalarFn one = [](double) { return 1.0; };
  CHECK_THAT(semigroup_left(ou, one, 1.0, 0.0), WithinRel(std::exp(1.0), 1e-15));
  ScalarFn u = [](double y) { return std::sin(y) + 2; };
  CHECK(semigroup_left(ou, u, 0.0, 0.7) == u(0.7));
  CHECK(semigroup_right(ou, u, 0.0, 0.7) == u(0.7));
  for (double x : {-1.0, 0.0, 0.8}) {
    ScalarFn inner = [&](double y) { return semigroup_left(ou, u, 0.7, y); };
    CHECK_THAT(semigroup_left(ou, inner, 0.3, x), WithinRel(semigroup_left(ou, u, 1.0, x), 1e-12));
    ScalarFn inner_r = [&](double y) { return semigroup_right(ou, u, 0.7, y); };
    CHECK_THAT(semigroup_right(ou, inner_r, 0.3, x), WithinRel(semigroup_right(ou, u, 1.0, x), 1e-12));
  }
  CHECK_THROWS_AS(semigroup_left(ou, u, -1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(semigroup_left(presets::laguerre(0.5), u, 2.0, 1.0), DomainError);
}

TEST_CASE("semigroup duality and weighted isometry") {
  auto bu = Func::bump(0.2, 1.1), bv = Func::bump(-0.5, 0.8, 2.0);
  for (auto& w : line_presets()) {
    INFO(w.name());
    for (double t : {0.1, 1.0, 5.0}) {
      auto lhs = integrate_adaptive([&](double x) { return semigroup_left(w, bu.f, t, x) * bv(x); }, -1.3 + t, 0.3 + t, 1e-14, 1e-13);
      auto rhs = integrate_adaptive([&](double x) { return bu(x) * semigroup_right(w, bv.f, t, x); }, -0.9, 1.3, 1e-14, 1e-13);
      CHECK_THAT(lhs.value, WithinAbs(rhs.value, 1e-8));
      // u = E * bump, norm of E^{-1} T_t u in L^p
      ScalarFn u = [&](double y) { return w.E(y) * bu(y); };
      for (int p : {1, 2}) {
        auto n0 = integrate_adaptive([&](double x) { return std::pow(std::abs(u(x) * w.E_inv(x)), p); }, -0.9, 1.3, 1e-14, 1e-13);
        auto nt = integrate_adaptive([&](double x) { return std::pow(std::abs(semigroup_left(w, u, t, x) * w.E_inv(x)), p); },
                                     -0.9 + t, 1.3 + t, 1e-14, 1e-13);
        CHECK_THAT(nt.value, WithinRel(n0.value, 1e-8));
      }
    }
  }
}

TEST_CASE("semigroup generator is first order in t") {
  auto w = presets::hermite();
  ScalarFn u = [](double y) { return std::cos(y) * std::exp(-0.1 * y * y); };
  double x = 0.4;
  double gen = first_order_left(w, u, x, 1e-5);
  double exact = -std::sin(x) * std::exp(-0.1 * x * x) + std::cos(x) * (-0.2 * x) * std::exp(-0.1 * x * x) + x * u(x);
  CHECK_THAT(gen, WithinAbs(exact, 1e-8));
  double prev = 0;
  for (double t : {1e-2, 5e-3, 2.5e-3}) {
    double err = std::abs((semigroup_left(w, u, t, x) - u(x)) / t + exact);
    if (prev > 0) CHECK_THAT(prev / err, WithinAbs(2.0, 0.05));
    prev = err;
  }
}

TEST_CASE("fractional derivative examples") {
  for (auto& w : all_presets()) {
    INFO(w.name());
    double x = w.x0();
    auto e2 = Func::exponential(2.0);
    CHECK_THAT(frac_deriv_left_conj(w, {0.5}, e2, x), WithinRel(std::sqrt(2.0) * w.E(x) * std::exp(2 * x), 1e-6));
    CHECK(frac_deriv_left_conj(w, {0.5}, Func::constant(1.0), x) == 0.0);
  }
  // raw (unconjugated) input on the real-line presets
  auto ou = presets::ou();
  Func u{[&](double y) { return ou.E(y) * std::exp(2 * y); }, DecayHint::exponential(1, 2), {}};
  CHECK_THAT(frac_deriv_left(ou, {0.5}, u, 0.0), WithinRel(std::sqrt(2.0), 1e-6));
  CHECK_THAT(frac_deriv_left(WeightSpec::zero(), {0.25}, Func::exponential(1.0), 0.0), WithinRel(1.0, 1e-6));
}

TEST_CASE("fractional integral examples") {
  for (auto& w : all_presets()) {
    INFO(w.name());
    double x = w.x0();
    CHECK_THAT(frac_int_left_conj(w, 0.5, Func::exponential(1.0), x), WithinRel(w.E(x) * std::exp(x), 1e-8));
  }
  CHECK_THAT(frac_int_left(WeightSpec::zero(), 1.0, Func::exponential(1.0), 0.6), WithinRel(std::exp(0.6), 1e-10));
  auto ou = presets::ou();
  CHECK_THAT(frac_int_left_conj(ou, 0.75, Func::exponential(2.0), 1.0),
             WithinRel(ou.E(1.0) * std::exp(2.0) * std::pow(2.0, -0.75), 1e-8));
  Func grows{[](double y) { return 1.0 + y * 0; }, DecayHint::support(0, 1.0), {}};
  CHECK_THROWS_AS(frac_int_left(ou, 0.5, grows, 0.0), PreconditionError);
}

TEST_CASE("right-sided operators and reflection") {
  auto w = presets::ou();
  FracParams p{0.4};
  // v = E^{-1} e^{-y}: E v = e^{-y}, right Marchaud gives 1^alpha
  Func g = Func::exponential(-1.0);
  for (double x : {-0.5, 0.0, 0.9}) CHECK_THAT(frac_deriv_right_conj(w, p, g, x), WithinRel(w.E_inv(x) * std::exp(-x), 1e-9));
  // (D_right,a,x0)^alpha v(x) = [(D_left,a~,-x0)^alpha v~](-x), v~(y) = v(-y)
  auto r = w.reflected();
  Func v{[&](double y) { return w.E_inv(y) * Func::bump_value(y, 0.3, 1.0); }, {}, DecayHint::support(-1.3)};
  Func vt{[&](double y) { return v(-y); }, DecayHint::support(-1.3), {}};
  for (double x : {-0.4, 0.1, 0.6}) {
    double lhs = frac_deriv_right(w, p, v, x);
    double rhs = frac_deriv_left(r, p, vt, -x);
    CHECK_THAT(lhs, WithinAbs(rhs, 1e-10 * std::max(1.0, std::abs(lhs))));
  }
}

TEST_CASE("fundamental theorem of fractional calculus") {
  auto zero = WeightSpec::zero();
  auto r1 = ftc_check(zero, 0.5, Func::bump(0, 1), 0.0);
  CHECK(r1.error <= 1e-4);
  auto ou = presets::ou();
  auto r2 = ftc_check(ou, 0.5, Func::exponential(1.0), 0.0);
  CHECK(r2.error <= 1e-5);
  auto r3 = ftc_check(zero, 0.9, Func::bump(0, 1), 0.0);
  CHECK(r3.error <= 1e-4);
  // the truncated values approach the limit monotonically on smooth data
  CHECK(r2.monotone);
}

TEST_CASE("alpha -> 0 and alpha -> 1 limits") {
  auto w = presets::hermite();
  auto e = bbm_sweep(w, Func::exponential(2.0), 0.3);
  for (size_t i = 0; i < e.alphas.size(); ++i)
    CHECK_THAT(e.values[i], WithinRel(std::pow(2.0, e.alphas[i]) * w.E(0.3) * std::exp(0.6), 1e-9));
  CHECK(e.dev_at_0 <= 1e-3);
  CHECK(e.dev_at_1 <= 1e-3);
  auto b = bbm_sweep(presets::ou(), Func::bump(0, 1.5), -0.4);
  CHECK(b.dev_at_0 <= 1e-3);
  CHECK(b.dev_at_1 <= 1e-3);
  // constants are annihilated for every order
  auto c = bbm_sweep(w, Func::constant(1.0), 0.0, {0.25, 0.5, 0.75});
  for (double v : c.values) CHECK(v == 0.0);
}

TEST_CASE("maximum principle probe") {
  auto rep = max_principle_probe({presets::ou(), presets::hermite(), WeightSpec::zero(), presets::laguerre(0.5),
                                  presets::jacobi(0.5, 0.25)},
                                 {0.25, 0.5, 0.75}, 600, 99);
  CHECK(rep.trials == 600);
  CHECK(rep.violations == 0);
  CHECK(rep.max_value <= 0);
  CHECK(std::abs(rep.equality_value) <= 1e-12);
  // (x0 - y)_+^2 smoothed by a bump: strictly negative
  auto w = WeightSpec::zero();
  Func f{[](double y) { return y < 0 ? y * y * Func::bump_value(y, -1, 1.2) : 0.0; }, DecayHint::support(-2.2), {}};
  CHECK(frac_deriv_left_conj(w, {0.5}, f, 0.0) < -1e-3);
  CHECK(frac_deriv_left_conj(w, {0.5}, Func{[](double) { return 0.0; }, DecayHint::support(0), {}}, 0.0) == 0.0);
}

TEST_CASE("Hermite functions of real degree") {
  using boost::math::tgamma;
  CHECK_THAT(hermite_function_degree(-1, 0), WithinRel(std::sqrt(M_PI) / 2, 1e-10));
  for (double a : {0.3, 0.5, 1.7})
    CHECK_THAT(hermite_function_degree(-a, 0), WithinRel(tgamma(a / 2) / (2 * tgamma(a)), 1e-10));
  // H_nu(0) = 2^nu sqrt(pi) / Gamma((1 - nu)/2) for the analytic continuation
  for (double nu : {0.25, 0.5, 0.8})
    CHECK_THAT(hermite_function_degree(nu, 0), WithinRel(std::pow(2, nu) * std::sqrt(M_PI) / tgamma((1 - nu) / 2), 1e-9));
  CHECK(hermite_function_degree(0, 3.3) == 1);
  CHECK_THAT(hermite_function_degree(2, 1.5), WithinRel(4 * 2.25 - 2, 1e-15));
  CHECK_THROWS_AS(hermite_function_degree(1.5, 0), ParameterError);
  // y'' - 2x y' + 2 nu y = 0, central differences extrapolated in h
  for (double nu : {0.5, -0.5}) {
    double x = 1;
    auto res = [&](double h) {
      double y0 = hermite_function_degree(nu, x), yp = hermite_function_degree(nu, x + h),
             ym = hermite_function_degree(nu, x - h);
      return (yp - 2 * y0 + ym) / (h * h) - 2 * x * (yp - ym) / (2 * h) + 2 * nu * y0;
    };
    double r1 = res(0.02), r2 = res(0.01);
    CHECK(std::abs((4 * r2 - r1) / 3) <= 1e-5);
  }
}
