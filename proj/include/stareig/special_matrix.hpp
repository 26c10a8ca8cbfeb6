#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stareig/eigenfunction.hpp"
#include "stareig/parallel.hpp"
#include "stareig/permutation.hpp"
#include "stareig/rational.hpp"

namespace stareig {

// Square rational matrix with 1-indexed entries.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SquareMatrix: n must be positive");
    m_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  }

  int n() const noexcept { return n_; }

  const Rational& at(int i, int j) const { return m_[flat(i, j)]; }
  void set(int i, int j, Rational value) { m_[flat(i, j)] = std::move(value); }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t flat(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("SquareMatrix: index (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") out of range for n=" +
                              std::to_string(n_));
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<Rational> m_;
};

struct SpecialCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

// A matrix is special when its first row and first column vanish, every row
// sums to zero, and it is not the zero matrix.
inline SpecialCheck is_special(const SquareMatrix& M) {
  SpecialCheck out;
  int n = M.n();
  bool any_nonzero = false;
  for (int j = 1; j <= n; ++j)
    if (M.at(1, j) != 0) {
      out.violations.push_back("first-row: entry (1, " + std::to_string(j) + ") is " +
                               to_string(M.at(1, j)));
      break;
    }
  for (int i = 1; i <= n; ++i)
    if (M.at(i, 1) != 0) {
      out.violations.push_back("first-column: entry (" + std::to_string(i) + ", 1) is " +
                               to_string(M.at(i, 1)));
      break;
    }
  for (int i = 1; i <= n; ++i) {
    Rational sum = 0;
    for (int j = 1; j <= n; ++j) {
      sum += M.at(i, j);
      if (M.at(i, j) != 0) any_nonzero = true;
    }
    if (sum != 0) {
      out.violations.push_back("row-sum: row " + std::to_string(i) + " sums to " +
                               to_string(sum));
      break;
    }
  }
  if (!any_nonzero) out.violations.push_back("all-zero: matrix is the zero matrix");
  out.ok = out.violations.empty();
  return out;
}

inline Rational diagonal_sum(const SquareMatrix& M, const Permutation& p) {
  if (p.size() != M.n())
    throw std::invalid_argument("diagonal_sum: permutation size " + std::to_string(p.size()) +
                                " does not match n=" + std::to_string(M.n()));
  Rational sum = 0;
  for (int i = 1; i <= M.n(); ++i) sum += M.at(i, p(i));
  return sum;
}

namespace detail {

// Clears denominators so the diagonal-sum scan can run in machine or big
// integers: scaled(i,j) = M(i,j) * lcm of all denominators.
inline std::vector<BigInt> scaled_entries(const SquareMatrix& M) {
  int n = M.n();
  BigInt l = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      BigInt d = denominator(M.at(i, j));
      BigInt g = gcd(l, d);
      l = (l / g) * d;
    }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      BigInt e = numerator(M.at(i, j)) * (l / denominator(M.at(i, j)));
      out.push_back(std::move(e));
    }
  return out;
}

template <typename Int>
std::uint64_t count_nonzero_diagonals(const std::vector<Int>& a, int n, std::uint64_t begin,
                                      std::uint64_t end) {
  std::uint64_t cnt = 0;
  PermutationEnumerator e(n, begin);
  const Int* base = a.data();
  for (std::uint64_t r = begin; r < end; ++r, e.advance()) {
    const std::vector<int>& w = e.word();
    Int sum = 0;
    for (int i = 0; i < n; ++i) sum += base[static_cast<std::size_t>(i) * n +
                                             static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)];
    if (sum != 0) ++cnt;
  }
  return cnt;
}

}  // namespace detail

inline constexpr int kMaxDefaultGmN = 8;

// g_M(n) = #{π in Sym_n : sum_i m_{i, π(i)} != 0}, by full enumeration.
// n > 8 costs n! work and must be requested explicitly.
inline std::uint64_t g_M(const SquareMatrix& M, bool force_large = false) {
  int n = M.n();
  if (n < 3) throw std::invalid_argument("g_M: n must be >= 3");
  if (!force_large && n > kMaxDefaultGmN)
    throw std::out_of_range("g_M: n=" + std::to_string(n) +
                            " exceeds the default cap of 8; pass force_large to override");
  if (n > kMaxEnumerationN)
    throw std::out_of_range("g_M: n exceeds the enumeration limit of " +
                            std::to_string(kMaxEnumerationN));

  std::vector<BigInt> scaled = detail::scaled_entries(M);
  std::uint64_t total = factorial(n);

  // With entries bounded by B, diagonal sums are bounded by n*B; stay in
  // int64 whenever that cannot overflow.
  BigInt bound = 0;
  for (const BigInt& e : scaled) {
    BigInt a = abs(e);
    if (a > bound) bound = a;
  }
  bound *= n;
  bool fits = bound < BigInt(std::numeric_limits<std::int64_t>::max() / 2);

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(thread_count()), 0);
  if (fits) {
    std::vector<std::int64_t> a;
    a.reserve(scaled.size());
    for (const BigInt& e : scaled) a.push_back(static_cast<std::int64_t>(e));
    for_each_chunk(total, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
      counts[chunk] = detail::count_nonzero_diagonals(a, n, b, e);
    });
  } else {
    for_each_chunk(total, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
      counts[chunk] = detail::count_nonzero_diagonals(scaled, n, b, e);
    });
  }
  std::uint64_t cnt = 0;
  for (std::uint64_t c : counts) cnt += c;
  return cnt;
}

inline std::uint64_t g_M_subset(const SquareMatrix& M, std::span<const Permutation> subset) {
  std::uint64_t cnt = 0;
  for (const Permutation& p : subset)
    if (diagonal_sum(M, p) != 0) ++cnt;
  return cnt;
}

// The matrix M(f) of the eigenfunction with coefficients c:
//   m_{i,j} = -mu_i^j            (i > 1, j > 2)
//   m_{i,2} = sum_s mu_i^s       (i > 1)
//   m_{1,j} = m_{i,1} = 0.
// Then f(π) = sum_i m_{i, π^{-1}(i)} for every π.
inline SquareMatrix matrix_of(const CoefficientVector& c) {
  int n = c.n();
  SquareMatrix M(n);
  for (int i = 2; i <= n; ++i) {
    Rational row_sum = 0;
    for (int j = 3; j <= n; ++j) {
      M.set(i, j, -c.at(i, j));
      row_sum += c.at(i, j);
    }
    M.set(i, 2, row_sum);
  }
  return M;
}

// Evaluates the function with coefficients c through its matrix; agrees with
// from_coefficients(c) on every vertex.
inline Rational eval_via_matrix(const CoefficientVector& c, const Permutation& p) {
  if (p.size() != c.n())
    throw std::invalid_argument("eval_via_matrix: permutation size mismatch");
  return diagonal_sum(matrix_of(c), inverse(p));
}

}  // namespace stareig
