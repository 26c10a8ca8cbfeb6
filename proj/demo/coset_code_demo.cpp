// Shows the coset S_1^2 of S_4 as a completely regular code: distance
// layers, quotient matrix, and the decomposition of an extremal
// eigenfunction's support into two such cosets.

#include <cstdio>
#include <string>

#include "stareig/codes.hpp"
#include "stareig/eigenfunction.hpp"
#include "stareig/extremal.hpp"

using namespace stareig;

int main() {
  const int n = 4;
  VertexSet code = coset(1, 2, n);
  std::printf("code C = S_1^2 = { pi in Sym_%d : pi(2) = 1 }, |C| = %zu\n", n,
              code.size());

  DistancePartition dp = distance_partition(code);
  std::printf("covering radius rho = %d, layer sizes:", dp.rho);
  for (const VertexSet& layer : dp.layers) std::printf(" %zu", layer.size());
  std::printf("\n");

  bool first_layer_is_s11 = dp.layers[1] == coset(1, 1, n);
  std::printf("layer 1 equals S_1^1 (everything mapping position 1 to 1): %s\n",
              first_layer_is_s11 ? "yes" : "no");

  auto crc = is_completely_regular(code);
  if (crc) {
    std::printf("completely regular, quotient matrix:\n");
    for (const auto& row : crc->quotient) {
      std::printf(" ");
      for (int v : row) std::printf(" %2d", v);
      std::printf("\n");
    }
  } else {
    std::printf("not completely regular\n");
  }

  std::printf("\nextremal eigenfunctions are differences of two such codes:\n");
  CoefficientVector c = elementary_coefficients(2, 3, 4, n);
  c *= Rational(7);
  auto d = decompose_as_code_difference(c);
  if (d) {
    std::printf("  7 * f_2^{3,4} = %s * (chi_{S_%d^%d} - chi_{S_%d^%d})\n",
                to_string(d->scale).c_str(), d->u, d->v, d->u, d->w);
    std::printf("  both cosets completely regular with rho = 2: %s\n",
                (is_completely_regular(coset(d->u, d->v, n)) &&
                 is_completely_regular(coset(d->u, d->w, n)))
                    ? "yes"
                    : "no");
    std::printf("  support size %zu + %zu = 2(n-1)! = %llu\n",
                coset(d->u, d->v, n).size(), coset(d->u, d->w, n).size(),
                static_cast<unsigned long long>(2 * factorial(n - 1)));
  }
  return 0;
}
