// Walks through the minimum-support story at n = 4: build an elementary
// eigenfunction, pass to its matrix, count nonzero diagonals, and compare
// against the 2(n-1)! bound and the exhaustive search at n = 3.

#include <cstdio>
#include <string>

#include "stareig/eigenfunction.hpp"
#include "stareig/extremal.hpp"
#include "stareig/matrix_forms.hpp"
#include "stareig/special_matrix.hpp"

using namespace stareig;

int main() {
  const int n = 4;
  CoefficientVector c = elementary_coefficients(1, 2, 3, n);
  VertexFunction f = from_coefficients(c);

  std::printf("f = f_1^{2,3} on the star graph S_%d (%llu vertices)\n", n,
              static_cast<unsigned long long>(factorial(n)));
  std::printf("eigenfunction check at lambda = n-2: %s\n",
              is_eigenfunction(f, Rational(n - 2)) ? "yes" : "no");

  SquareMatrix M = matrix_of(c);
  std::printf("\nM(f) =\n");
  for (int i = 1; i <= n; ++i) {
    std::printf(" ");
    for (int j = 1; j <= n; ++j) std::printf(" %4s", to_string(M.at(i, j)).c_str());
    std::printf("\n");
  }

  SupportResult s = support(f);
  std::printf("\n|Supp(f)| = %llu, g_M(M(f)) = %llu, bound 2(n-1)! = %llu\n",
              static_cast<unsigned long long>(s.count),
              static_cast<unsigned long long>(g_M(M)),
              static_cast<unsigned long long>(2 * factorial(n - 1)));

  MatrixClass cls = classify_matrix(M);
  switch (cls.kind) {
    case MatrixClass::Kind::UniformPair:
      std::printf("matrix class: uniform-pair (x = %s, p1 = %d, p2 = %d)\n",
                  to_string(cls.x).c_str(), cls.c1, cls.c2);
      break;
    case MatrixClass::Kind::SingleRow:
      std::printf("matrix class: single-row (x = %s, q1 = %d, q2 = %d, tau = %d)\n",
                  to_string(cls.x).c_str(), cls.c1, cls.c2, cls.tau);
      break;
    case MatrixClass::Kind::Other:
      std::printf("matrix class: other\n");
      break;
  }

  std::printf("\nexhaustive minimum over the n = 3 eigenspace:\n");
  SearchResult exact = min_support_exact_dim2();
  std::printf("  best support %llu (%s), %zu optimal directions\n",
              static_cast<unsigned long long>(exact.best_support),
              exact.is_proven_optimal ? "proven" : "heuristic",
              exact.optimal_witnesses.size());
  for (const CoefficientVector& w : exact.optimal_witnesses) {
    auto d = characterize_optimum(w);
    if (d)
      std::printf("  direction (%s, %s) = %s * f_%d^{%d,%d}\n",
                  to_string(w.at(2, 3)).c_str(), to_string(w.at(3, 3)).c_str(),
                  to_string(d->scale).c_str(), d->u, d->v, d->w);
  }
  return 0;
}
