#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stareig/eigenfunction.hpp"
#include "stareig/extremal.hpp"
#include "stareig/permutation.hpp"
#include "stareig/star_graph.hpp"

namespace stareig {

// A subset of the vertices of S_n, stored as a bitset indexed by
// lexicographic rank.
class VertexSet {
 public:
  explicit VertexSet(int n) : n_(n) {
    if (n < 3 || n > kMaxAdjacencyN)
      throw std::out_of_range("VertexSet: n out of [3, " +
                              std::to_string(kMaxAdjacencyN) + "]: " + std::to_string(n));
    bits_.assign(factorial(n), false);
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    s.bits_.assign(s.bits_.size(), true);
    s.count_ = s.bits_.size();
    return s;
  }

  int n() const { return n_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(PermRank r) const {
    check_rank(r);
    return bits_[static_cast<std::size_t>(r)];
  }

  void insert(PermRank r) {
    check_rank(r);
    std::size_t i = static_cast<std::size_t>(r);
    if (!bits_[i]) {
      bits_[i] = true;
      ++count_;
    }
  }

  // Members in ascending rank order.
  std::vector<PermRank> ranks() const {
    std::vector<PermRank> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<PermRank>(i));
    return out;
  }

  bool operator==(const VertexSet&) const = default;

 private:
  void check_rank(PermRank r) const {
    if (r >= bits_.size())
      throw std::out_of_range("VertexSet: rank " + std::to_string(r) +
                              " out of range for n = " + std::to_string(n_));
  }

  int n_;
  std::uint64_t count_ = 0;
  std::vector<bool> bits_;
};

// The coset {π : π(alpha) = a}, of size (n-1)!.
inline VertexSet coset(int a, int alpha, int n) {
  VertexSet s(n);
  if (a < 1 || a > n)
    throw std::out_of_range("coset: value " + std::to_string(a) + " out of [1, " +
                            std::to_string(n) + "]");
  if (alpha < 1 || alpha > n)
    throw std::out_of_range("coset: position " + std::to_string(alpha) + " out of [1, " +
                            std::to_string(n) + "]");
  for (PermutationEnumerator e(n); !e.done(); e.advance())
    if (e.word()[static_cast<std::size_t>(alpha - 1)] == a) s.insert(e.current_rank());
  return s;
}

// Layers C^(0), ..., C^(rho) of the distance partition with respect to a
// nonempty vertex set; rho is the covering radius.
struct DistancePartition {
  std::vector<VertexSet> layers;
  int rho = 0;
};

inline DistancePartition distance_partition(const VertexSet& source) {
  int n = source.n();
  if (n > 7)
    throw std::out_of_range("distance_partition: n out of [3, 7]: " + std::to_string(n));
  if (source.empty()) throw std::invalid_argument("distance_partition: empty vertex set");

  auto adj = adjacency_by_rank(n);
  std::vector<int> dist(adj.size(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(adj.size());
  for (PermRank r : source.ranks()) {
    dist[static_cast<std::size_t>(r)] = 0;
    queue.push_back(static_cast<std::uint32_t>(r));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::uint32_t v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }

  int rho = 0;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] > rho) rho = dist[v];

  DistancePartition out;
  out.rho = rho;
  out.layers.assign(static_cast<std::size_t>(rho) + 1, VertexSet(n));
  for (std::size_t v = 0; v < dist.size(); ++v)
    out.layers[static_cast<std::size_t>(dist[v])].insert(static_cast<PermRank>(v));
  return out;
}

// Row i gives the number of neighbors a vertex of block i has in each block.
using QuotientMatrix = std::vector<std::vector<int>>;

// Two vertices of the same block whose neighbor counts into target_block
// differ. Blocks are 0-indexed by position in the partition.
struct EquitableViolation {
  int block = 0;
  PermRank vertex_a = 0;
  PermRank vertex_b = 0;
  int target_block = 0;
};

struct EquitableCheck {
  std::optional<QuotientMatrix> quotient;
  std::optional<EquitableViolation> violation;
  bool ok() const { return quotient.has_value(); }
};

// Checks whether an ordered partition of all of Sym_n is equitable. Throws
// if the blocks do not form a partition (overlap, gap, or an empty block).
inline EquitableCheck is_equitable(std::span<const VertexSet> blocks) {
  if (blocks.empty()) throw std::invalid_argument("is_equitable: no blocks");
  int n = blocks[0].n();
  std::uint64_t total = factorial(n);
  std::vector<int> block_of(total, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].n() != n)
      throw std::invalid_argument("is_equitable: blocks disagree on n");
    if (blocks[i].empty())
      throw std::invalid_argument("is_equitable: block " + std::to_string(i) + " is empty");
    for (PermRank r : blocks[i].ranks()) {
      if (block_of[static_cast<std::size_t>(r)] >= 0)
        throw std::invalid_argument("is_equitable: blocks overlap at rank " + std::to_string(r));
      block_of[static_cast<std::size_t>(r)] = static_cast<int>(i);
    }
  }
  for (std::uint64_t r = 0; r < total; ++r)
    if (block_of[static_cast<std::size_t>(r)] < 0)
      throw std::invalid_argument("is_equitable: rank " + std::to_string(r) +
                                  " belongs to no block");

  auto adj = adjacency_by_rank(n);
  QuotientMatrix quotient(blocks.size());
  std::vector<int> row(blocks.size()), counts(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool first = true;
    PermRank ref = 0;
    for (PermRank r : blocks[i].ranks()) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t nb : adj[static_cast<std::size_t>(r)])
        ++counts[static_cast<std::size_t>(block_of[nb])];
      if (first) {
        row = counts;
        ref = r;
        first = false;
        continue;
      }
      for (std::size_t j = 0; j < blocks.size(); ++j)
        if (counts[j] != row[j]) {
          EquitableCheck out;
          out.violation = EquitableViolation{static_cast<int>(i), ref, r,
                                             static_cast<int>(j)};
          return out;
        }
    }
    quotient[i] = row;
  }

  EquitableCheck out;
  out.quotient = std::move(quotient);
  return out;
}

struct CrcResult {
  int rho = 0;
  QuotientMatrix quotient;
};

// A set is a completely regular code iff its distance partition is
// equitable; returns the covering radius and quotient matrix when it is.
inline std::optional<CrcResult> is_completely_regular(const VertexSet& code) {
  DistancePartition partition = distance_partition(code);
  EquitableCheck check = is_equitable(partition.layers);
  if (!check.quotient) return std::nullopt;
  return CrcResult{partition.rho, *std::move(check.quotient)};
}

// Writes the function with coefficients c as
//   scale * (χ_{coset(u, v)} - χ_{coset(u, w)}),  v < w,
// when it is a scalar multiple of an elementary function; the two cosets
// are then completely regular codes of covering radius 2 whose union is
// the support. Returns nothing for functions outside that family.
inline std::optional<Decomposition> decompose_as_code_difference(const CoefficientVector& c) {
  std::optional<Decomposition> d = characterize_optimum(c);
  if (!d) return std::nullopt;
  if (d->v > d->w) {
    std::swap(d->v, d->w);
    d->scale = -d->scale;
  }
  int n = c.n();
  if (n <= 6) {
    VertexFunction f = from_coefficients(c);
    for (PermutationEnumerator e(n); !e.done(); e.advance()) {
      Permutation p = e.current();
      Rational expected(0);
      if (p(d->v) == d->u) expected += d->scale;
      if (p(d->w) == d->u) expected -= d->scale;
      if (f(p) != expected)
        throw std::logic_error("decompose_as_code_difference: verification failed");
    }
  }
  return d;
}

}  // namespace stareig
