#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stareig/rational.hpp"
#include "stareig/special_matrix.hpp"

namespace stareig {

// Normal forms of rows of special matrices. A Pair row carries x at col1 and
// -x at col2 and zeros elsewhere (col1 < col2, both >= 2; value = x). A
// Spread row is zero at column 1, (n-2)*y at col1 = s and -y elsewhere
// (value = y). At n = 3 the two shapes coincide and such rows are reported
// as Pair.
struct RowClass {
  enum class Kind { Zero, Pair, Spread, Irregular };
  Kind kind = Kind::Irregular;
  Rational value;
  int col1 = 0;
  int col2 = 0;
};

inline RowClass classify_row(const SquareMatrix& M, int alpha) {
  int n = M.n();
  if (alpha < 1 || alpha > n)
    throw std::out_of_range("classify_row: row " + std::to_string(alpha) +
                            " out of range for n=" + std::to_string(n));

  std::vector<int> nonzero;
  for (int j = 1; j <= n; ++j)
    if (M.at(alpha, j) != 0) nonzero.push_back(j);

  if (nonzero.empty()) return RowClass{RowClass::Kind::Zero, Rational(0), 0, 0};

  if (nonzero.size() == 2) {
    int c1 = nonzero[0], c2 = nonzero[1];
    if (c1 >= 2 && M.at(alpha, c1) == -M.at(alpha, c2))
      return RowClass{RowClass::Kind::Pair, M.at(alpha, c1), c1, c2};
  }

  if (static_cast<int>(nonzero.size()) == n - 1 && M.at(alpha, 1) == 0) {
    for (int s = 2; s <= n; ++s) {
      Rational common;
      bool first = true, uniform = true;
      for (int j = 2; j <= n; ++j) {
        if (j == s) continue;
        if (first) {
          common = M.at(alpha, j);
          first = false;
        } else if (M.at(alpha, j) != common) {
          uniform = false;
          break;
        }
      }
      if (!uniform) continue;
      Rational y = -common;
      Rational spike = y * (n - 2);
      if (M.at(alpha, s) == spike)
        return RowClass{RowClass::Kind::Spread, y, s, 0};
    }
  }

  return RowClass{RowClass::Kind::Irregular, Rational(0), 0, 0};
}

// Ordered partition of the column set {1..n}.
struct ColumnPartition {
  std::vector<std::vector<int>> blocks;
};

inline void validate_partition(const ColumnPartition& P, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& block : P.blocks) {
    if (block.empty()) throw std::invalid_argument("column partition: empty block");
    for (int c : block) {
      if (c < 1 || c > n)
        throw std::invalid_argument("column partition: column " + std::to_string(c) +
                                    " out of range for n=" + std::to_string(n));
      if (seen[static_cast<std::size_t>(c - 1)]++)
        throw std::invalid_argument("column partition: column " + std::to_string(c) +
                                    " repeated");
      ++covered;
    }
  }
  if (covered != n)
    throw std::invalid_argument("column partition: covers " + std::to_string(covered) +
                                " of " + std::to_string(n) + " columns");
}

// Rows α, β have the (A_1,...,A_t)-property when columns from different
// blocks always have different values of D_j = m_{α,j} - m_{β,j}.
inline bool has_partition_property(const SquareMatrix& M, int alpha, int beta,
                                   const ColumnPartition& P) {
  int n = M.n();
  if (alpha < 1 || alpha > n || beta < 1 || beta > n)
    throw std::out_of_range("has_partition_property: row index out of range");
  if (alpha == beta)
    throw std::invalid_argument("has_partition_property: rows must be distinct");
  validate_partition(P, n);
  if (P.blocks.size() < 2) return false;

  std::vector<Rational> diff(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    diff[static_cast<std::size_t>(j - 1)] = M.at(alpha, j) - M.at(beta, j);

  for (std::size_t b1 = 0; b1 < P.blocks.size(); ++b1)
    for (std::size_t b2 = b1 + 1; b2 < P.blocks.size(); ++b2)
      for (int a : P.blocks[b1])
        for (int b : P.blocks[b2])
          if (diff[static_cast<std::size_t>(a - 1)] == diff[static_cast<std::size_t>(b - 1)])
            return false;
  return true;
}

// The finest partition with the property: group columns by the value of D_j.
// Blocks are ordered by their smallest column. Returns nothing when the rows
// differ by a constant (a single class cannot satisfy the property).
inline std::optional<ColumnPartition> row_difference_partition(const SquareMatrix& M,
                                                               int alpha, int beta) {
  int n = M.n();
  if (alpha < 1 || alpha > n || beta < 1 || beta > n)
    throw std::out_of_range("row_difference_partition: row index out of range");
  if (alpha == beta)
    throw std::invalid_argument("row_difference_partition: rows must be distinct");
  std::map<Rational, std::vector<int>> classes;
  std::vector<Rational> order;
  for (int j = 1; j <= n; ++j) {
    Rational d = M.at(alpha, j) - M.at(beta, j);
    auto [it, inserted] = classes.try_emplace(d);
    if (inserted) order.push_back(d);
    it->second.push_back(j);
  }
  if (classes.size() < 2) return std::nullopt;
  ColumnPartition P;
  for (const Rational& d : order) P.blocks.push_back(classes[d]);
  return P;
}

// Search for a two-block partition certifying the property for a given pair
// of normal-form rows, following a fixed case order on the row shapes. When
// only a larger first block is available the witness has |A| of 3 or 4.
struct ABSearch {
  enum class Status { Found, RowsEqual, LargerOnly };
  Status status = Status::RowsEqual;
  std::optional<ColumnPartition> partition;  // blocks = {A, B}
};

namespace detail {

inline ColumnPartition two_block_partition(std::vector<int> a, int n) {
  std::sort(a.begin(), a.end());
  ColumnPartition P;
  P.blocks.push_back(a);
  std::vector<int> b;
  for (int c = 1; c <= n; ++c)
    if (!std::binary_search(a.begin(), a.end(), c)) b.push_back(c);
  P.blocks.push_back(std::move(b));
  return P;
}

}  // namespace detail

inline ABSearch find_AB_property(const SquareMatrix& M, int alpha, int beta) {
  int n = M.n();
  RowClass ra = classify_row(M, alpha);
  RowClass rb = classify_row(M, beta);
  if (ra.kind == RowClass::Kind::Irregular || rb.kind == RowClass::Kind::Irregular)
    throw std::invalid_argument("find_AB_property: row " +
                                std::to_string(ra.kind == RowClass::Kind::Irregular ? alpha
                                                                                    : beta) +
                                " has no normal form");

  bool equal = true;
  for (int j = 1; j <= n && equal; ++j) equal = M.at(alpha, j) == M.at(beta, j);
  if (equal) return ABSearch{ABSearch::Status::RowsEqual, std::nullopt};

  using K = RowClass::Kind;
  std::vector<int> A;
  bool small = true;  // |A| == 2

  if (ra.kind == K::Zero || rb.kind == K::Zero) {
    // Case 1: against a zero row, the nonzero row supplies the split.
    const RowClass& r = ra.kind == K::Zero ? rb : ra;
    if (r.kind == K::Pair) {
      A = {r.col1, r.col2};
    } else {
      A = {1, r.col1};
    }
  } else if (ra.kind == K::Pair && rb.kind == K::Pair) {
    // Case 2, by the overlap of the supports.
    std::vector<int> shared;
    for (int c : {rb.col1, rb.col2})
      if (c == ra.col1 || c == ra.col2) shared.push_back(c);
    if (shared.empty()) {
      A = {ra.col1, ra.col2, rb.col1, rb.col2};
      small = false;
    } else if (shared.size() == 1) {
      int c = shared[0];
      int other_a = ra.col1 == c ? ra.col2 : ra.col1;
      int other_b = rb.col1 == c ? rb.col2 : rb.col1;
      if (M.at(alpha, c) == M.at(beta, c)) {
        A = {other_a, other_b};
      } else {
        A = {c, other_a, other_b};
        small = false;
      }
    } else {
      // Same support, different values.
      A = {ra.col1, ra.col2};
    }
  } else if (ra.kind == K::Spread && rb.kind == K::Spread) {
    // Case 3.
    if (ra.col1 != rb.col1) {
      if (ra.value != rb.value) {
        A = {1, ra.col1, rb.col1};
        small = false;
      } else {
        A = {ra.col1, rb.col1};
      }
    } else {
      A = {1, ra.col1};
    }
  } else {
    // Case 4: one Pair row, one Spread row.
    int pair_row = ra.kind == K::Pair ? alpha : beta;
    const RowClass& pair = ra.kind == K::Pair ? ra : rb;
    const RowClass& spread = ra.kind == K::Pair ? rb : ra;
    int s = spread.col1;
    if (s != pair.col1 && s != pair.col2) {
      A = {1, pair.col1, pair.col2, s};
      small = false;
    } else {
      int other = pair.col1 == s ? pair.col2 : pair.col1;
      Rational x_at_s = M.at(pair_row, s);
      if (x_at_s != spread.value * (n - 1)) {
        A = {1, s, other};
        small = false;
      } else {
        A = {1, other};
      }
    }
  }

  ABSearch out;
  out.status = small ? ABSearch::Status::Found : ABSearch::Status::LargerOnly;
  out.partition = detail::two_block_partition(std::move(A), n);
  if (!has_partition_property(M, alpha, beta, *out.partition))
    throw std::logic_error("find_AB_property: constructed partition fails the property");
  return out;
}

// Smallest θ for which all rows other than R_θ coincide.
inline std::optional<int> theta_uniform(const SquareMatrix& M) {
  int n = M.n();
  for (int theta = 1; theta <= n; ++theta) {
    int ref = theta == 1 ? 2 : 1;
    bool uniform = true;
    for (int i = 1; i <= n && uniform; ++i) {
      if (i == theta || i == ref) continue;
      for (int j = 1; j <= n; ++j)
        if (M.at(i, j) != M.at(ref, j)) {
          uniform = false;
          break;
        }
    }
    if (uniform) return theta;
  }
  return std::nullopt;
}

// The two extremal families. A UniformPair matrix has every row below the
// first equal to the same Pair row (x at c1, -x at c2); a SingleRow matrix
// has exactly one nonzero row, R_tau, which is a Pair row.
struct MatrixClass {
  enum class Kind { UniformPair, SingleRow, Other };
  Kind kind = Kind::Other;
  Rational x;
  int c1 = 0;
  int c2 = 0;
  int tau = 0;  // SingleRow only
};

inline MatrixClass classify_matrix(const SquareMatrix& M) {
  int n = M.n();
  if (n < 3) throw std::invalid_argument("classify_matrix: n must be >= 3");
  MatrixClass other;

  for (int j = 1; j <= n; ++j)
    if (M.at(1, j) != 0) return other;

  std::vector<RowClass> rows(static_cast<std::size_t>(n + 1));
  for (int i = 2; i <= n; ++i) {
    rows[static_cast<std::size_t>(i)] = classify_row(M, i);
    if (rows[static_cast<std::size_t>(i)].kind == RowClass::Kind::Irregular ||
        rows[static_cast<std::size_t>(i)].kind == RowClass::Kind::Spread)
      return other;
  }

  std::vector<int> nonzero_rows;
  for (int i = 2; i <= n; ++i)
    if (rows[static_cast<std::size_t>(i)].kind == RowClass::Kind::Pair) nonzero_rows.push_back(i);

  if (nonzero_rows.empty()) return other;

  if (static_cast<int>(nonzero_rows.size()) == n - 1) {
    const RowClass& first = rows[static_cast<std::size_t>(2)];
    for (int i = 3; i <= n; ++i) {
      const RowClass& r = rows[static_cast<std::size_t>(i)];
      if (r.value != first.value || r.col1 != first.col1 || r.col2 != first.col2) return other;
    }
    MatrixClass out;
    out.kind = MatrixClass::Kind::UniformPair;
    out.x = first.value;
    out.c1 = first.col1;
    out.c2 = first.col2;
    return out;
  }

  if (nonzero_rows.size() == 1) {
    int tau = nonzero_rows[0];
    const RowClass& r = rows[static_cast<std::size_t>(tau)];
    MatrixClass out;
    out.kind = MatrixClass::Kind::SingleRow;
    out.x = r.value;
    out.c1 = r.col1;
    out.c2 = r.col2;
    out.tau = tau;
    return out;
  }

  return other;
}

inline SquareMatrix make_uniform_pair_matrix(int n, const Rational& x, int p1, int p2) {
  if (n < 3) throw std::invalid_argument("make_uniform_pair_matrix: n must be >= 3");
  if (x == 0) throw std::invalid_argument("make_uniform_pair_matrix: x must be nonzero");
  if (p1 < 2 || p1 > n || p2 < 2 || p2 > n || p1 == p2)
    throw std::invalid_argument("make_uniform_pair_matrix: p1, p2 must be distinct in [2, n]");
  SquareMatrix M(n);
  for (int i = 2; i <= n; ++i) {
    M.set(i, p1, x);
    M.set(i, p2, -x);
  }
  return M;
}

inline SquareMatrix make_single_row_matrix(int n, const Rational& x, int q1, int q2, int tau) {
  if (n < 3) throw std::invalid_argument("make_single_row_matrix: n must be >= 3");
  if (x == 0) throw std::invalid_argument("make_single_row_matrix: x must be nonzero");
  if (q1 < 2 || q1 > n || q2 < 2 || q2 > n || q1 == q2)
    throw std::invalid_argument("make_single_row_matrix: q1, q2 must be distinct in [2, n]");
  if (tau < 2 || tau > n)
    throw std::invalid_argument("make_single_row_matrix: tau must lie in [2, n]");
  SquareMatrix M(n);
  M.set(tau, q1, x);
  M.set(tau, q2, -x);
  return M;
}

inline SquareMatrix make_uniform_spread_matrix(int n, const Rational& y, int s) {
  if (n < 3) throw std::invalid_argument("make_uniform_spread_matrix: n must be >= 3");
  if (y == 0) throw std::invalid_argument("make_uniform_spread_matrix: y must be nonzero");
  if (s < 2 || s > n)
    throw std::invalid_argument("make_uniform_spread_matrix: s must lie in [2, n]");
  SquareMatrix M(n);
  for (int i = 2; i <= n; ++i) {
    M.set(i, s, y * (n - 2));
    for (int j = 2; j <= n; ++j)
      if (j != s) M.set(i, j, -y);
  }
  return M;
}

}  // namespace stareig
