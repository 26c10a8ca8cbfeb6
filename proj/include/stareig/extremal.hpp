#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stareig/eigenfunction.hpp"
#include "stareig/matrix_forms.hpp"
#include "stareig/special_matrix.hpp"

namespace stareig {

// Partition of an integer into non-increasing positive parts.
struct IntPartition {
  std::vector<int> parts;

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
};

struct DichotomyResult {
  bool holds = false;
  // Partitions with at least three parts whose pairwise-product sum fails to
  // exceed 2(n-1).
  std::vector<IntPartition> exceptions;
};

namespace detail {

template <typename Fn>
void enumerate_partitions(int remaining, int max_part, std::vector<int>& acc, Fn&& fn) {
  if (remaining == 0) {
    fn(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_partitions(remaining - p, p, acc, fn);
    acc.pop_back();
  }
}

inline std::int64_t pairwise_product_sum(const std::vector<int>& parts) {
  std::int64_t total = 0, sq = 0;
  for (int p : parts) {
    total += p;
    sq += static_cast<std::int64_t>(p) * p;
  }
  return (total * total - sq) / 2;
}

}  // namespace detail

// For n >= 7, every partition of n into t >= 3 parts has pairwise-product
// sum exceeding 2(n-1), except (n-2, 1, 1). The result lists all partitions
// failing the inequality; holds is true when that list is exactly the known
// exceptional shape.
inline DichotomyResult partition_dichotomy_check(int n) {
  if (n < 7)
    throw std::invalid_argument("partition_dichotomy_check: n must be >= 7, got " +
                                std::to_string(n));
  DichotomyResult out;
  std::vector<int> acc;
  detail::enumerate_partitions(n, n, acc, [&](const std::vector<int>& parts) {
    if (parts.size() < 3) return;
    if (detail::pairwise_product_sum(parts) <= 2 * (n - 1))
      out.exceptions.push_back(IntPartition{parts});
  });
  IntPartition expected{{n - 2, 1, 1}};
  out.holds = out.exceptions.size() == 1 && out.exceptions[0] == expected;
  return out;
}

struct SearchResult {
  enum class Method { ExactDim2, Grid };
  Method method = Method::ExactDim2;
  std::uint64_t best_support = 0;
  CoefficientVector witness;
  bool is_proven_optimal = false;
  std::optional<int> grid_radius;
  // All optimizing directions up to scaling; populated by the exact search.
  std::vector<CoefficientVector> optimal_witnesses;
};

// Exact minimum-support search over the full (n-2)-eigenspace at n = 3,
// where the space is a plane. A direction has support below 6 exactly when
// some vertex form vanishes on it, so scanning the (finitely many) kernel
// directions of the vertex forms plus one generic direction covers every
// achievable support value.
inline SearchResult min_support_exact_dim2() {
  const int n = 3;
  // Form of the function value at each vertex in the two coordinates
  // (mu_2^3, mu_3^3).
  std::vector<std::pair<int, int>> forms;
  for (PermutationEnumerator e(n); !e.done(); e.advance()) {
    const std::vector<int>& w = e.word();
    int a = (w[1] == 2 ? 1 : 0) - (w[2] == 2 ? 1 : 0);
    int b = (w[1] == 3 ? 1 : 0) - (w[2] == 3 ? 1 : 0);
    forms.emplace_back(a, b);
  }

  auto normalize = [](std::pair<int, int> d) {
    auto [x, y] = d;
    int g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    if (g > 1) {
      x /= g;
      y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
      x = -x;
      y = -y;
    }
    return std::pair<int, int>{x, y};
  };

  std::vector<std::pair<int, int>> candidates;
  auto push_unique = [&](std::pair<int, int> d) {
    for (const auto& c : candidates)
      if (c == d) return;
    candidates.push_back(d);
  };
  for (const auto& [a, b] : forms)
    if (a != 0 || b != 0) push_unique(normalize({-b, a}));

  for (int k = 0;; ++k) {
    bool vanishes = false;
    for (const auto& [a, b] : forms)
      if (a + static_cast<std::int64_t>(k) * b == 0) {
        vanishes = true;
        break;
      }
    if (!vanishes) {
      push_unique(normalize({1, k}));
      break;
    }
  }

  auto support_of = [&](std::pair<int, int> d) {
    std::uint64_t cnt = 0;
    for (const auto& [a, b] : forms)
      if (a * d.first + b * d.second != 0) ++cnt;
    return cnt;
  };

  std::uint64_t best = factorial(n) + 1;
  for (const auto& d : candidates) best = std::min(best, support_of(d));

  SearchResult out{SearchResult::Method::ExactDim2, best, CoefficientVector(n), true,
                   std::nullopt, {}};
  for (const auto& d : candidates)
    if (support_of(d) == best) {
      CoefficientVector c(n);
      c.set(2, 3, Rational(d.first));
      c.set(3, 3, Rational(d.second));
      out.optimal_witnesses.push_back(c);
    }
  out.witness = out.optimal_witnesses.front();
  return out;
}

struct GridOptions {
  std::uint64_t max_candidates = 1'000'000'000;
};

// Heuristic minimum-support search for 4 <= n <= 6: enumerates coefficient
// vectors with integer entries in [-radius, radius], first nonzero entry
// positive, and returns the best support seen. The result is an upper bound
// on the true minimum, not a certificate.
inline SearchResult min_support_grid(int n, int radius, const GridOptions& opts = {}) {
  if (n < 4 || n > 6)
    throw std::out_of_range("min_support_grid: n out of [4, 6]: " + std::to_string(n));
  if (radius < 1) throw std::invalid_argument("min_support_grid: radius must be >= 1");

  int d = (n - 1) * (n - 2);
  std::uint64_t span = 2 * static_cast<std::uint64_t>(radius) + 1;
  std::uint64_t candidates = 1;
  bool overflow = false;
  for (int k = 0; k < d; ++k) {
    if (candidates > opts.max_candidates / span + 1) {
      overflow = true;
      break;
    }
    candidates *= span;
  }
  if (overflow || candidates > opts.max_candidates)
    throw std::runtime_error(
        "min_support_grid: (2*radius+1)^" + std::to_string(d) +
        " candidate vectors exceed the cap of " + std::to_string(opts.max_candidates) +
        "; lower the radius or raise GridOptions::max_candidates");

  std::uint64_t total = factorial(n);
  // Value columns of the basis functions over all vertices; entries are -1,
  // 0 or 1, stored as their nonzero positions.
  struct Column {
    std::vector<std::uint32_t> plus, minus;
  };
  std::vector<Column> cols;
  cols.reserve(static_cast<std::size_t>(d));
  for (int u = 2; u <= n; ++u)
    for (int w = 3; w <= n; ++w) {
      Column col;
      for (PermutationEnumerator e(n); !e.done(); e.advance()) {
        const std::vector<int>& word = e.word();
        int val = (word[1] == u ? 1 : 0) - (word[static_cast<std::size_t>(w - 1)] == u ? 1 : 0);
        if (val > 0) col.plus.push_back(static_cast<std::uint32_t>(e.current_rank()));
        if (val < 0) col.minus.push_back(static_cast<std::uint32_t>(e.current_rank()));
      }
      cols.push_back(std::move(col));
    }

  std::vector<std::int32_t> sum(total, 0);
  std::uint64_t nonzero = 0;
  auto shift = [&](std::size_t k, std::int32_t delta) {
    for (std::uint32_t m : cols[k].plus) {
      std::int32_t& s = sum[m];
      if (s == 0) ++nonzero;
      s += delta;
      if (s == 0) --nonzero;
    }
    for (std::uint32_t m : cols[k].minus) {
      std::int32_t& s = sum[m];
      if (s == 0) ++nonzero;
      s -= delta;
      if (s == 0) --nonzero;
    }
  };

  std::uint64_t best = total + 1;
  std::vector<int> coords(static_cast<std::size_t>(d), 0), best_coords;

  auto dfs = [&](auto&& self, int k, bool leading_zero) -> void {
    if (k == d) {
      if (!leading_zero && nonzero < best) {
        best = nonzero;
        best_coords = coords;
      }
      return;
    }
    int lo = leading_zero ? 0 : -radius;
    shift(static_cast<std::size_t>(k), lo);
    for (int t = lo; t <= radius; ++t) {
      if (t > lo) shift(static_cast<std::size_t>(k), 1);
      coords[static_cast<std::size_t>(k)] = t;
      self(self, k + 1, leading_zero && t == 0);
    }
    shift(static_cast<std::size_t>(k), -radius);
    coords[static_cast<std::size_t>(k)] = 0;
  };
  dfs(dfs, 0, true);

  SearchResult out{SearchResult::Method::Grid, best, CoefficientVector(n), false, radius, {}};
  int k = 0;
  for (int u = 2; u <= n; ++u)
    for (int w = 3; w <= n; ++w, ++k)
      out.witness.set(u, w, Rational(best_coords[static_cast<std::size_t>(k)]));
  return out;
}

// Deterministic pseudo-random special matrix: entries mu-style in rows 2..n,
// columns 3..n drawn from {-5..5} \ {0} with the given density, and column 2
// set to make every row sum to zero. Redraws until nonzero.
inline SquareMatrix random_special_matrix(int n, std::uint64_t seed, double sparsity = 0.4) {
  if (n < 3) throw std::invalid_argument("random_special_matrix: n must be >= 3");
  if (!(sparsity > 0.0) || sparsity > 1.0)
    throw std::invalid_argument("random_special_matrix: sparsity must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::uint64_t threshold = static_cast<std::uint64_t>(sparsity * 1000000.0);
  if (threshold == 0) threshold = 1;

  SquareMatrix M(n);
  bool nonzero = false;
  while (!nonzero) {
    for (int i = 2; i <= n; ++i) {
      Rational row_sum = 0;
      for (int j = 3; j <= n; ++j) {
        int value = 0;
        if (rng() % 1000000 < threshold) {
          std::uint64_t u = rng() % 10;
          value = u < 5 ? static_cast<int>(u) - 5 : static_cast<int>(u) - 4;
        }
        M.set(i, j, Rational(value));
        row_sum += value;
        if (value != 0) nonzero = true;
      }
      M.set(i, 2, -row_sum);
    }
  }
  return M;
}

struct TheoremCheck {
  std::uint64_t g = 0;
  std::uint64_t bound = 0;
  bool bound_holds = false;
  bool equality = false;
  MatrixClass matrix_class;
  // Whether g and the classification agree with the extremal
  // characterization; outside its range of validity only the unconditional
  // direction (family membership forces equality) is enforced.
  bool consistent = false;
  bool iff_applicable = false;
};

inline TheoremCheck check_theorem1(const SquareMatrix& M, bool force_large = false) {
  int n = M.n();
  SpecialCheck sc = is_special(M);
  if (!sc.ok)
    throw std::invalid_argument("check_theorem1: matrix is not special (" +
                                (sc.violations.empty() ? std::string("?") : sc.violations[0]) +
                                ")");
  TheoremCheck out;
  out.g = g_M(M, force_large);
  out.bound = 2 * factorial(n - 1);
  out.bound_holds = out.g >= out.bound;
  out.equality = out.g == out.bound;
  out.matrix_class = classify_matrix(M);
  out.iff_applicable = n == 3 || n >= 8;
  bool in_family = out.matrix_class.kind != MatrixClass::Kind::Other;
  out.consistent = out.iff_applicable ? (out.equality == in_family)
                                      : (in_family ? out.equality : true);
  return out;
}

// A scalar multiple of an elementary function: scale * f_u^{v,w}.
struct Decomposition {
  Rational scale;
  int u = 0;
  int v = 0;
  int w = 0;
};

// Detects whether the function with coefficients c is a scalar multiple of
// an elementary function, by the shape of its matrix. The indices come
// straight from the matrix template: a uniform-pair matrix (x, p1, p2)
// yields x * f_1^{p2,p1}, a single-row matrix (x, q1, q2, tau) yields
// x * f_tau^{q1,q2}.
inline std::optional<Decomposition> characterize_optimum(const CoefficientVector& c) {
  if (c.is_zero())
    throw std::invalid_argument("characterize_optimum: zero coefficient vector");
  int n = c.n();
  MatrixClass cls = classify_matrix(matrix_of(c));
  if (cls.kind == MatrixClass::Kind::Other) return std::nullopt;

  Decomposition d;
  d.scale = cls.x;
  if (cls.kind == MatrixClass::Kind::UniformPair) {
    d.u = 1;
    d.v = cls.c2;
    d.w = cls.c1;
  } else {
    d.u = cls.tau;
    d.v = cls.c1;
    d.w = cls.c2;
  }

  if (n <= 7) {
    VertexFunction f = from_coefficients(c);
    VertexFunction e = elementary(d.u, d.v, d.w, n);
    for (PermutationEnumerator en(n); !en.done(); en.advance()) {
      Permutation p = en.current();
      if (f(p) != d.scale * e(p))
        throw std::logic_error("characterize_optimum: decomposition failed to verify");
    }
  }
  return d;
}

}  // namespace stareig
