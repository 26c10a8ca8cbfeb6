#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stareig/permutation.hpp"
#include "stareig/rational.hpp"
#include "stareig/star_graph.hpp"

namespace stareig {

// Index (u, v, w) of the elementary function
//   f_u^{v,w}(π) = [π(v) = u] - [π(w) = u],
// with u in 1..n and distinct v, w in 2..n.
struct ElementaryIndex {
  int u = 0;
  int v = 0;
  int w = 0;
};

inline void validate_elementary_index(int u, int v, int w, int n) {
  if (n < 3) throw std::invalid_argument("elementary index: n must be >= 3");
  if (u < 1 || u > n)
    throw std::invalid_argument("elementary index: u out of [1, n]: " + std::to_string(u));
  if (v < 2 || v > n || w < 2 || w > n)
    throw std::invalid_argument("elementary index: v, w must lie in [2, n]");
  if (v == w) throw std::invalid_argument("elementary index: v and w must differ");
}

// Coordinates of a function in the basis
//   F_2 = { f_u^{2,w} : u in 2..n, w in 3..n },
// stored in u-major order. The coefficient of f_u^{2,w} is written mu_u^w.
class CoefficientVector {
 public:
  explicit CoefficientVector(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("CoefficientVector: n must be >= 3");
    mu_.resize(static_cast<std::size_t>((n - 1) * (n - 2)));
  }

  int n() const noexcept { return n_; }
  int dimension() const noexcept { return (n_ - 1) * (n_ - 2); }

  // Flat position of mu_u^w; u in 2..n, w in 3..n.
  int index_of(int u, int w) const {
    if (u < 2 || u > n_)
      throw std::out_of_range("CoefficientVector: u out of [2, n]: " + std::to_string(u));
    if (w < 3 || w > n_)
      throw std::out_of_range("CoefficientVector: w out of [3, n]: " + std::to_string(w));
    return (u - 2) * (n_ - 2) + (w - 3);
  }

  const Rational& at(int u, int w) const { return mu_[static_cast<std::size_t>(index_of(u, w))]; }
  void set(int u, int w, Rational value) {
    mu_[static_cast<std::size_t>(index_of(u, w))] = std::move(value);
  }

  const std::vector<Rational>& flat() const noexcept { return mu_; }

  bool is_zero() const {
    for (const Rational& r : mu_)
      if (r != 0) return false;
    return true;
  }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

  CoefficientVector& operator+=(const CoefficientVector& o) {
    require_same(o);
    for (std::size_t i = 0; i < mu_.size(); ++i) mu_[i] += o.mu_[i];
    return *this;
  }
  CoefficientVector& operator-=(const CoefficientVector& o) {
    require_same(o);
    for (std::size_t i = 0; i < mu_.size(); ++i) mu_[i] -= o.mu_[i];
    return *this;
  }
  CoefficientVector& operator*=(const Rational& s) {
    for (Rational& m : mu_) m *= s;
    return *this;
  }
  friend CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) {
    return a += b;
  }
  friend CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b) {
    return a -= b;
  }
  friend CoefficientVector operator*(const Rational& s, CoefficientVector a) { return a *= s; }

 private:
  void require_same(const CoefficientVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CoefficientVector: size mismatch");
  }

  int n_;
  std::vector<Rational> mu_;
};

// A rational-valued function on the vertices of S_n. Evaluation must be pure;
// copies share the underlying evaluator.
class VertexFunction {
 public:
  VertexFunction(int n, std::function<Rational(const Permutation&)> eval)
      : n_(n), eval_(std::move(eval)) {
    if (n < 3) throw std::invalid_argument("VertexFunction: n must be >= 3");
    if (!eval_) throw std::invalid_argument("VertexFunction: null evaluator");
  }

  int n() const noexcept { return n_; }

  Rational operator()(const Permutation& p) const {
    if (p.size() != n_)
      throw std::invalid_argument("VertexFunction: permutation size " +
                                  std::to_string(p.size()) + " does not match n=" +
                                  std::to_string(n_));
    return eval_(p);
  }

 private:
  int n_;
  std::function<Rational(const Permutation&)> eval_;
};

inline VertexFunction elementary(int u, int v, int w, int n) {
  validate_elementary_index(u, v, w, n);
  return VertexFunction(n, [u, v, w](const Permutation& p) {
    int a = p(v) == u ? 1 : 0;
    int b = p(w) == u ? 1 : 0;
    return Rational(a - b);
  });
}

inline VertexFunction zero_function(int n) {
  return VertexFunction(n, [](const Permutation&) { return Rational(0); });
}

// Expansion of f_u^{v,w} over F_2. For u >= 2 this is f_u^{2,w} - f_u^{2,v}
// (with the degenerate v=2 / w=2 cases collapsing to a single term); for
// u = 1 it follows from summing [π(v) = i] over all i.
inline CoefficientVector elementary_coefficients(int u, int v, int w, int n) {
  validate_elementary_index(u, v, w, n);
  CoefficientVector c(n);
  auto add = [&](int uu, int ww, int delta) {
    c.set(uu, ww, c.at(uu, ww) + delta);
  };
  if (u >= 2) {
    if (w != 2) add(u, w, 1);
    if (v != 2) add(u, v, -1);
  } else {
    // f_1^{v,w} = sum_{i >= 2} (f_i^{2,v} - f_i^{2,w}).
    for (int i = 2; i <= n; ++i) {
      if (v != 2) add(i, v, 1);
      if (w != 2) add(i, w, -1);
    }
  }
  return c;
}

namespace detail {
struct CoefficientData {
  CoefficientVector c;
  std::vector<Rational> row_sums;  // indexed by u-2; sum over w of mu_u^w
};
}  // namespace detail

// Realizes coefficients as a function:
//   f(π) = sum_{u,w} mu_u^w f_u^{2,w}(π).
// Rejects the zero vector, which is not an eigenfunction.
inline VertexFunction from_coefficients(const CoefficientVector& c) {
  if (c.is_zero())
    throw std::invalid_argument("from_coefficients: zero coefficient vector");
  int n = c.n();
  auto data = std::make_shared<detail::CoefficientData>(detail::CoefficientData{c, {}});
  data->row_sums.resize(static_cast<std::size_t>(n - 1));
  for (int u = 2; u <= n; ++u) {
    Rational s = 0;
    for (int w = 3; w <= n; ++w) s += c.at(u, w);
    data->row_sums[static_cast<std::size_t>(u - 2)] = s;
  }
  return VertexFunction(n, [data, n](const Permutation& p) {
    Rational acc = 0;
    int a = p(2);
    if (a >= 2) acc = data->row_sums[static_cast<std::size_t>(a - 2)];
    for (int w = 3; w <= n; ++w) {
      int b = p(w);
      if (b >= 2) acc -= data->c.at(b, w);
    }
    return acc;
  });
}

// Wraps a rank-indexed value table of length n!.
inline VertexFunction from_table(int n, std::vector<Rational> values) {
  if (n < 3 || n > kMaxAdjacencyN)
    throw std::out_of_range("from_table: n out of [3, " + std::to_string(kMaxAdjacencyN) +
                            "]: " + std::to_string(n));
  if (values.size() != factorial(n))
    throw std::invalid_argument("from_table: expected " + std::to_string(factorial(n)) +
                                " values, got " + std::to_string(values.size()));
  auto table = std::make_shared<std::vector<Rational>>(std::move(values));
  return VertexFunction(n, [table](const Permutation& p) { return (*table)[rank(p)]; });
}

// Rank-indexed table of all values; n is capped at 8 (n! evaluations).
inline std::vector<Rational> tabulate(const VertexFunction& f) {
  int n = f.n();
  if (n > kMaxAdjacencyN)
    throw std::out_of_range("tabulate: n > " + std::to_string(kMaxAdjacencyN));
  std::vector<Rational> table;
  table.reserve(factorial(n));
  for (PermutationEnumerator e(n); !e.done(); e.advance()) table.push_back(f(e.current()));
  return table;
}

// All of F_2 in canonical order: u ascending, then w ascending.
inline std::vector<VertexFunction> basis_F2(int n) {
  if (n < 3) throw std::invalid_argument("basis_F2: n must be >= 3");
  std::vector<VertexFunction> out;
  out.reserve(static_cast<std::size_t>((n - 1) * (n - 2)));
  for (int u = 2; u <= n; ++u)
    for (int w = 3; w <= n; ++w) out.push_back(elementary(u, 2, w, n));
  return out;
}

// Exact check of λ f(π) = sum over neighbors of f, for every vertex.
// The zero function is not considered an eigenfunction.
inline bool is_eigenfunction(const VertexFunction& f, const Rational& lambda) {
  int n = f.n();
  if (n < 3 || n > 7)
    throw std::out_of_range("is_eigenfunction: n out of [3, 7]: " + std::to_string(n));
  auto table = tabulate(f);
  bool nonzero = false;
  for (const Rational& v : table)
    if (v != 0) {
      nonzero = true;
      break;
    }
  if (!nonzero) return false;
  auto adj = adjacency_by_rank(n);
  for (std::size_t r = 0; r < table.size(); ++r) {
    Rational sum = 0;
    for (std::uint32_t nb : adj[r]) sum += table[nb];
    Rational lhs = lambda * table[r];
    if (lhs != sum) return false;
  }
  return true;
}

struct BasisCheck {
  bool ok = false;
  int rank_found = 0;
  int expected_rank = 0;
  bool members_are_eigenfunctions = false;
};

// Verifies that F_2 consists of (n-2)-eigenfunctions and spans a space of
// dimension (n-1)(n-2). Rank is taken over the value tables via exact
// Gaussian elimination, stopping as soon as full rank is reached.
inline BasisCheck verify_basis(int n) {
  if (n < 3 || n > 7)
    throw std::out_of_range("verify_basis: n out of [3, 7]: " + std::to_string(n));
  BasisCheck out;
  out.expected_rank = (n - 1) * (n - 2);

  out.members_are_eigenfunctions = true;
  for (const VertexFunction& f : basis_F2(n))
    if (!is_eigenfunction(f, Rational(n - 2))) {
      out.members_are_eigenfunctions = false;
      break;
    }

  // Rows of the vertex-by-basis value matrix arrive one vertex at a time.
  int d = out.expected_rank;
  std::vector<std::vector<Rational>> echelon;  // reduced rows with leading pivots
  std::vector<int> pivot_col;
  for (PermutationEnumerator e(n); !e.done() && static_cast<int>(echelon.size()) < d;
       e.advance()) {
    const std::vector<int>& word = e.word();
    std::vector<Rational> row(static_cast<std::size_t>(d));
    int k = 0;
    for (int u = 2; u <= n; ++u)
      for (int w = 3; w <= n; ++w, ++k) {
        int val = (word[1] == u ? 1 : 0) - (word[static_cast<std::size_t>(w - 1)] == u ? 1 : 0);
        if (val) row[static_cast<std::size_t>(k)] = val;
      }
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      Rational& lead = row[static_cast<std::size_t>(pivot_col[i])];
      if (lead != 0) {
        Rational factor = lead;
        const auto& er = echelon[i];
        for (std::size_t j = static_cast<std::size_t>(pivot_col[i]); j < row.size(); ++j)
          if (er[j] != 0) row[j] -= factor * er[j];
      }
    }
    int pc = -1;
    for (int j = 0; j < d; ++j)
      if (row[static_cast<std::size_t>(j)] != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    Rational inv_lead = row[static_cast<std::size_t>(pc)];
    for (int j = pc; j < d; ++j) row[static_cast<std::size_t>(j)] /= inv_lead;
    echelon.push_back(std::move(row));
    pivot_col.push_back(pc);
  }
  out.rank_found = static_cast<int>(echelon.size());
  out.ok = out.members_are_eigenfunctions && out.rank_found == out.expected_rank;
  return out;
}

struct SupportResult {
  std::uint64_t count = 0;
  std::vector<PermRank> witnesses;  // ranks with nonzero value, ascending
};

// |Supp(f)| by direct enumeration; n is capped at 8.
inline SupportResult support(const VertexFunction& f, bool with_witnesses = false) {
  int n = f.n();
  if (n > kMaxAdjacencyN)
    throw std::out_of_range("support: n > " + std::to_string(kMaxAdjacencyN));
  SupportResult out;
  for (PermutationEnumerator e(n); !e.done(); e.advance()) {
    if (f(e.current()) != 0) {
      ++out.count;
      if (with_witnesses) out.witnesses.push_back(e.current_rank());
    }
  }
  return out;
}

inline std::set<Rational> value_set(const VertexFunction& f) {
  int n = f.n();
  if (n > kMaxAdjacencyN)
    throw std::out_of_range("value_set: n > " + std::to_string(kMaxAdjacencyN));
  std::set<Rational> out;
  for (PermutationEnumerator e(n); !e.done(); e.advance()) out.insert(f(e.current()));
  return out;
}

}  // namespace stareig
