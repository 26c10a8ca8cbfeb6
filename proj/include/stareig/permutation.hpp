#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stareig {

// Lexicographic index of a permutation within Sym_n, in [0, n!).
using PermRank = std::uint64_t;

// Full enumeration of Sym_n is refused beyond this point; 12! is already
// half a billion vertices.
inline constexpr int kMaxEnumerationN = 12;

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw std::out_of_range("factorial: n out of [0, 20]: " + std::to_string(n));
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

// A permutation of {1, ..., n} in one-line notation: the entry at position i
// is the image of i. Everything is 1-indexed to match the usual convention
// for symmetric groups; only the internal storage is 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty image list");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
      if (v < 1 || v > n)
        throw std::invalid_argument("Permutation: image " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)]++)
        throw std::invalid_argument("Permutation: repeated image " + std::to_string(v));
    }
  }

  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation::identity: n must be positive");
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(im));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }

  // Image of position i (1-indexed).
  int operator()(int i) const {
    if (i < 1 || i > size())
      throw std::out_of_range("Permutation: position " + std::to_string(i) +
                              " out of range for n=" + std::to_string(size()));
    return images_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic order on one-line notation.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// (p ∘ q)(i) = p(q(i)); q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch (" + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()) + ")");
  int n = p.size();
  std::vector<int> im(static_cast<std::size_t>(n));
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (int i = 0; i < n; ++i)
    im[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(qi[static_cast<std::size_t>(i)] - 1)];
  return Permutation(std::move(im));
}

inline Permutation inverse(const Permutation& p) {
  int n = p.size();
  std::vector<int> im(static_cast<std::size_t>(n));
  const auto& pi = p.images();
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(im));
}

// 0 for even, 1 for odd.
inline int parity(const Permutation& p) {
  const auto& im = p.images();
  int inv = 0;
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) inv ^= 1;
  return inv;
}

// Star-graph adjacency: neighbors of p are the compositions p ∘ (1 i) for
// i = 2..n, i.e. the words obtained from p by swapping the entries at
// positions 1 and i. Requires n >= 3.
inline std::vector<Permutation> neighbors(const Permutation& p) {
  int n = p.size();
  if (n < 3) throw std::invalid_argument("neighbors: star graph needs n >= 3");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  std::vector<int> w = p.images();
  for (int i = 2; i <= n; ++i) {
    std::swap(w[0], w[static_cast<std::size_t>(i - 1)]);
    out.emplace_back(w);
    std::swap(w[0], w[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

// Lehmer-code rank: the number of permutations of Sym_n that are
// lexicographically smaller.
inline PermRank rank(const Permutation& p) {
  const auto& im = p.images();
  int n = p.size();
  PermRank r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (im[static_cast<std::size_t>(j)] < im[static_cast<std::size_t>(i)]) ++smaller_later;
    r += smaller_later * factorial(n - 1 - i);
  }
  return r;
}

inline Permutation unrank(PermRank r, int n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw std::out_of_range("unrank: n out of [1, " + std::to_string(kMaxEnumerationN) +
                            "]: " + std::to_string(n));
  std::uint64_t total = factorial(n);
  if (r >= total)
    throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of [0, " +
                            std::to_string(total) + ") for n=" + std::to_string(n));
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t f = factorial(i);
    std::size_t idx = static_cast<std::size_t>(r / f);
    r %= f;
    im.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(im));
}

inline std::string to_string(const Permutation& p) {
  std::string s;
  const auto& im = p.images();
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(im[i]);
  }
  return s;
}

// Parses one-line notation "2,1,3" (spaces around commas allowed).
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> im;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty())
      throw std::invalid_argument("parse_permutation: empty entry in \"" +
                                  std::string(text) + "\"");
    int v = 0;
    for (char c : piece) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("parse_permutation: bad entry \"" + std::string(piece) +
                                    "\"");
      v = v * 10 + (c - '0');
      if (v > 1000)
        throw std::invalid_argument("parse_permutation: entry too large in \"" +
                                    std::string(text) + "\"");
    }
    im.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(im));
}

// Streams Sym_n in lexicographic order, optionally starting mid-sequence,
// which is what makes rank-range parallel scans deterministic.
class PermutationEnumerator {
 public:
  explicit PermutationEnumerator(int n, PermRank start = 0) : n_(n) {
    if (n < 1 || n > kMaxEnumerationN)
      throw std::out_of_range("PermutationEnumerator: n out of [1, " +
                              std::to_string(kMaxEnumerationN) + "]: " + std::to_string(n));
    total_ = factorial(n);
    if (start > total_)
      throw std::out_of_range("PermutationEnumerator: start rank past the end");
    rank_ = start;
    if (rank_ < total_) word_ = unrank(rank_, n).images();
  }

  bool done() const noexcept { return rank_ >= total_; }
  PermRank current_rank() const noexcept { return rank_; }
  std::uint64_t total() const noexcept { return total_; }

  // One-line word of the current permutation; valid while !done().
  const std::vector<int>& word() const noexcept { return word_; }

  Permutation current() const { return Permutation(word_); }

  void advance() {
    ++rank_;
    if (rank_ < total_) std::next_permutation(word_.begin(), word_.end());
  }

 private:
  int n_;
  std::uint64_t total_;
  PermRank rank_ = 0;
  std::vector<int> word_;
};

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  for (PermutationEnumerator e(n); !e.done(); e.advance()) fn(e.current());
}

}  // namespace stareig
