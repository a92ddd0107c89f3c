// Inverse Hermite / Laguerre polynomials, their three-term recurrence and the
// (non-positive) moment functional that makes them orthogonal.
#include <iostream>

#include "fracinv/fracinv.hpp"

using namespace fracinv;

int main() {
  auto H = family_recurrence(Family::InvHermite, 5);
  std::cout << "inverse Hermite, coefficients low to high\n";
  for (size_t n = 0; n < H.size(); ++n) std::cout << "  n=" << n << ": " << to_string(H[n]) << "\n";

  auto r = monic_recurrence(Family::InvHermite, {}, 6);
  std::cout << "monic recurrence lambda_k:";
  for (auto& l : r.lam) std::cout << " " << to_string(l);
  std::cout << "\n";

  // Laguerre at alpha = 5/2: lambda_{n+1} = n (n - alpha) is negative for n = 1, 2
  FamilyParams p{make_rational(5, 2), 0};
  auto rep = favard_report(Family::InvLaguerre, p, 6);
  std::cout << "inverse Laguerre(5/2) L[Q_n^2]:";
  for (auto& d : rep.diagonal) std::cout << " " << to_string(d);
  std::cout << "\nquasi-orthogonal: " << (rep.ok() ? "yes" : "no") << "\n";

  // starred eigenfunctions of the inverse Gauss operator
  auto s = eigencheck_starred({Basis::InvGauss}, 4);
  for (auto& e : s.entries) std::cout << "  starred n=" << e.n << " eigenvalue " << to_string(e.actual) << "\n";
  return rep.ok() ? 0 : 1;
}
