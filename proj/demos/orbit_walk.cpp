// Walks both Coxeter orbits of a simple root and prints the coefficient
// vectors three ways: repeated reflection, matrix power, closed form.

#include <cstdio>

#include "rootcal/rootcal.hpp"

using namespace rootcal;

int main() {
  const RootVector start = unit_root(1);

  std::printf("affine orbit of alpha_1 (q,r,l,m,n):\n");
  std::printf("%6s  %-16s %-16s %-16s\n", "k", "reflections", "matrix", "closed");
  RootVector walked = start;
  const auto& word = coxeter_word(CoxeterKind::affine);
  for (int k = 0; k <= 8; ++k) {
    const RootVector via_matrix = matrix_power(coxeter_matrix(CoxeterKind::affine), k).apply(start);
    const RootVector via_closed = eval_affine_closed_form(k, start);
    std::printf("%6d  %-16s %-16s %-16s\n", k, walked.str().c_str(), via_matrix.str().c_str(),
                via_closed.str().c_str());
    walked = apply_word(word, walked);
  }

  std::printf("\nhyperbolic orbit of alpha_1:\n");
  std::printf("%6s  %-24s %-24s\n", "k", "matrix", "spectral");
  for (int k = -4; k <= 6; ++k) {
    const RootVector via_matrix =
        matrix_power(coxeter_matrix(CoxeterKind::hyperbolic), k).apply(start);
    const RootVector via_spectral = eval_hyperbolic_closed_form(k, start);
    std::printf("%6d  %-24s %-24s\n", k, via_matrix.str().c_str(), via_spectral.str().c_str());
  }

  std::printf("\nevery member has unit norm form: ");
  bool all_real = true;
  for (int k = -6; k <= 6; ++k) {
    all_real = all_real &&
               is_real_root(matrix_power(coxeter_matrix(CoxeterKind::hyperbolic), k).apply(start));
  }
  std::printf("%s\n", all_real ? "yes" : "NO");
  return 0;
}
