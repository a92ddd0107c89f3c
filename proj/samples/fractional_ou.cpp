// Fractional derivative for the Ornstein-Uhlenbeck weight, seen three ways:
// the Marchaud integral, the Neumann trace of the extension, and the
// alpha -> 1 limit.
#include <cstdio>

#include "fracinv/fracinv.hpp"

using namespace fracinv;

int main() {
  auto w = presets::ou();
  Func f = Func::exponential(2.0);  // conjugated input e^{2x}
  double x = 0.25;

  std::printf("%6s %14s %14s\n", "alpha", "marchaud", "trace");
  for (double a : {0.25, 0.5, 0.75}) {
    double m = frac_deriv_left_conj(w, {a}, f, x);
    ExtensionField field(w, a, f);
    auto tr = field.trace(x, {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625});
    std::printf("%6.2f %14.10f %14.10f\n", a, m, tr.limit);
  }

  auto b = bbm_sweep(w, f, x);
  std::printf("alpha->0: %.8f (target %.8f)\n", b.limit_at_0, b.target_at_0);
  std::printf("alpha->1: %.8f (target %.8f)\n", b.limit_at_1, b.target_at_1);
}
