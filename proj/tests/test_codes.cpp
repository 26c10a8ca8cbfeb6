#include "stareig/codes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace stareig;

TEST_CASE("vertex set basics") {
  VertexSet s(4);
  CHECK(s.n() == 4);
  CHECK(s.empty());
  s.insert(5);
  s.insert(0);
  s.insert(5);
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(1));
  CHECK(s.ranks() == std::vector<PermRank>{0, 5});

  VertexSet t(4);
  t.insert(0);
  CHECK_FALSE(s == t);
  t.insert(5);
  CHECK(s == t);

  CHECK(VertexSet::full(3).size() == 6);
  CHECK(VertexSet::full(3).contains(5));

  CHECK_THROWS_AS(VertexSet(2), std::out_of_range);
  CHECK_THROWS_AS(VertexSet(9), std::out_of_range);
  CHECK_THROWS_AS(s.contains(24), std::out_of_range);
  CHECK_THROWS_AS(s.insert(24), std::out_of_range);
}

TEST_CASE("cosets") {
  // In lexicographic order the permutations fixing 1 come first:
  // [1,2,3] has rank 0 and [1,3,2] has rank 1.
  CHECK(coset(1, 1, 3).ranks() == std::vector<PermRank>{0, 1});

  for (int n = 3; n <= 5; ++n)
    for (int alpha = 1; alpha <= n; ++alpha)
      for (int a = 1; a <= n; ++a)
        CHECK(coset(a, alpha, n).size() == factorial(n - 1));

  // Membership means exactly pi(alpha) = a.
  VertexSet c = coset(3, 2, 4);
  for (PermutationEnumerator e(4); !e.done(); e.advance())
    CHECK(c.contains(e.current_rank()) == (e.current()(2) == 3));

  // Distinct values at one position give disjoint cosets.
  VertexSet c1 = coset(1, 2, 4), c2 = coset(2, 2, 4);
  for (PermRank r : c1.ranks()) CHECK_FALSE(c2.contains(r));

  CHECK_THROWS_AS(coset(0, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(coset(5, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(coset(1, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(coset(1, 5, 4), std::out_of_range);
}

TEST_CASE("distance partition of a position coset") {
  DistancePartition p = distance_partition(coset(1, 2, 4));
  CHECK(p.rho == 2);
  REQUIRE(p.layers.size() == 3);
  CHECK(p.layers[0] == coset(1, 2, 4));
  // One swap moves the symbol into position 1, so the first layer is the
  // position-1 coset with the same symbol.
  CHECK(p.layers[1] == coset(1, 1, 4));
  CHECK(p.layers[0].size() == 6);
  CHECK(p.layers[1].size() == 6);
  CHECK(p.layers[2].size() == 12);

  // Layers partition the vertices.
  std::set<PermRank> seen;
  for (const auto& layer : p.layers)
    for (PermRank r : layer.ranks()) CHECK(seen.insert(r).second);
  CHECK(seen.size() == 24);
}

TEST_CASE("distance partition degenerate cases") {
  CHECK(distance_partition(VertexSet::full(4)).rho == 0);

  // A single vertex: layer sizes follow the distance distribution, and the
  // covering radius is the eccentricity, i.e. the diameter.
  VertexSet one(4);
  one.insert(0);
  DistancePartition p = distance_partition(one);
  CHECK(p.rho == 4);
  auto dist = distances_from_identity(4);
  for (std::size_t r = 0; r < dist.size(); ++r)
    CHECK(p.layers[static_cast<std::size_t>(dist[r])].contains(r));

  CHECK_THROWS_AS(distance_partition(VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(distance_partition(VertexSet::full(8)), std::out_of_range);
}

TEST_CASE("equitable partition checks") {
  SECTION("one block: a regular graph") {
    std::vector<VertexSet> blocks{VertexSet::full(4)};
    EquitableCheck r = is_equitable(blocks);
    REQUIRE(r.ok());
    CHECK(*r.quotient == QuotientMatrix{{3}});
    CHECK_FALSE(r.violation.has_value());
  }

  SECTION("parity bipartition") {
    std::vector<VertexSet> blocks{VertexSet(4), VertexSet(4)};
    for (PermutationEnumerator e(4); !e.done(); e.advance())
      blocks[static_cast<std::size_t>(parity(e.current()))].insert(e.current_rank());
    EquitableCheck r = is_equitable(blocks);
    REQUIRE(r.ok());
    CHECK(*r.quotient == QuotientMatrix{{0, 3}, {3, 0}});
  }

  SECTION("coset distance partition, the radius-2 quotient") {
    DistancePartition p = distance_partition(coset(1, 2, 4));
    EquitableCheck r = is_equitable(p.layers);
    REQUIRE(r.ok());
    CHECK(*r.quotient == QuotientMatrix{{2, 1, 0}, {1, 0, 2}, {0, 1, 2}});
  }

  SECTION("a non-equitable partition reports a witness pair") {
    // {identity} against the rest: neighbors of the identity see it once,
    // far vertices never do.
    std::vector<VertexSet> blocks{VertexSet(3), VertexSet(3)};
    blocks[0].insert(0);
    for (PermRank r = 1; r < 6; ++r) blocks[1].insert(r);
    EquitableCheck r = is_equitable(blocks);
    CHECK_FALSE(r.ok());
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->block == 1);
    CHECK(r.violation->target_block == 0);
    CHECK(r.violation->vertex_a != r.violation->vertex_b);
    CHECK(blocks[1].contains(r.violation->vertex_a));
    CHECK(blocks[1].contains(r.violation->vertex_b));
  }

  SECTION("invalid partitions throw") {
    CHECK_THROWS_AS(is_equitable(std::vector<VertexSet>{}), std::invalid_argument);

    std::vector<VertexSet> gap{coset(1, 1, 3)};
    CHECK_THROWS_AS(is_equitable(gap), std::invalid_argument);

    std::vector<VertexSet> overlap{VertexSet::full(3), coset(1, 1, 3)};
    CHECK_THROWS_AS(is_equitable(overlap), std::invalid_argument);

    std::vector<VertexSet> with_empty{VertexSet::full(3), VertexSet(3)};
    CHECK_THROWS_AS(is_equitable(with_empty), std::invalid_argument);

    std::vector<VertexSet> mixed{VertexSet::full(3), VertexSet(4)};
    CHECK_THROWS_AS(is_equitable(mixed), std::invalid_argument);
  }
}

TEST_CASE("position cosets are completely regular of covering radius 2") {
  for (int n = 3; n <= 5; ++n) {
    QuotientMatrix expected{{n - 2, 1, 0}, {1, 0, n - 2}, {0, 1, n - 2}};
    for (int alpha = 2; alpha <= n; ++alpha)
      for (int a = 1; a <= n; ++a) {
        auto r = is_completely_regular(coset(a, alpha, n));
        REQUIRE(r.has_value());
        CHECK(r->rho == 2);
        CHECK(r->quotient == expected);
      }
  }
}

TEST_CASE("position-1 cosets are completely regular of covering radius 1") {
  // Any permutation outside {pi : pi(1) = a} carries a at a position i >= 2
  // and one swap brings it home, so the partition has two blocks.
  for (int a = 1; a <= 4; ++a) {
    auto r = is_completely_regular(coset(a, 1, 4));
    REQUIRE(r.has_value());
    CHECK(r->rho == 1);
    CHECK(r->quotient == QuotientMatrix{{0, 3}, {1, 2}});
  }
}

TEST_CASE("full vertex set and a singleton as codes") {
  auto full = is_completely_regular(VertexSet::full(5));
  REQUIRE(full.has_value());
  CHECK(full->rho == 0);
  CHECK(full->quotient == QuotientMatrix{{4}});

  // S_3 is a 6-cycle; from one vertex the layers have sizes 1, 2, 2, 1 and
  // the quotient is the path collapse of the cycle.
  VertexSet one(3);
  one.insert(0);
  auto r = is_completely_regular(one);
  REQUIRE(r.has_value());
  CHECK(r->rho == 3);
  CHECK(r->quotient ==
        QuotientMatrix{{0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}});
}

TEST_CASE("a set that is not completely regular") {
  VertexSet one(4);
  one.insert(0);
  auto r = is_completely_regular(one);
  CHECK_FALSE(r.has_value());
}

TEST_CASE("decomposition as a difference of coset indicators") {
  SECTION("f_1^{2,3} at n = 4") {
    CoefficientVector c = elementary_coefficients(1, 2, 3, 4);
    auto d = decompose_as_code_difference(c);
    REQUIRE(d.has_value());
    CHECK(d->scale == Rational(1));
    CHECK(d->u == 1);
    CHECK(d->v == 2);
    CHECK(d->w == 3);
  }

  SECTION("scaling passes through") {
    CoefficientVector c = elementary_coefficients(1, 2, 3, 4);
    c *= Rational(5);
    auto d = decompose_as_code_difference(c);
    REQUIRE(d.has_value());
    CHECK(d->scale == Rational(5));
    CHECK(d->u == 1);
    CHECK(d->v == 2);
    CHECK(d->w == 3);
  }

  SECTION("indices come out sorted even when the input order is reversed") {
    CoefficientVector c = elementary_coefficients(2, 4, 3, 4);
    auto d = decompose_as_code_difference(c);
    REQUIRE(d.has_value());
    CHECK(d->scale == Rational(-1));
    CHECK(d->u == 2);
    CHECK(d->v == 3);
    CHECK(d->w == 4);
  }

  SECTION("the two cosets split the support") {
    CoefficientVector c = elementary_coefficients(1, 2, 3, 4);
    auto d = decompose_as_code_difference(c);
    REQUIRE(d.has_value());
    VertexSet pos = coset(d->u, d->v, 4), neg = coset(d->u, d->w, 4);
    for (PermRank r : pos.ranks()) CHECK_FALSE(neg.contains(r));

    SupportResult s = support(from_coefficients(c), true);
    std::vector<PermRank> merged = pos.ranks();
    auto neg_ranks = neg.ranks();
    merged.insert(merged.end(), neg_ranks.begin(), neg_ranks.end());
    std::sort(merged.begin(), merged.end());
    CHECK(s.witnesses == merged);

    auto pr = is_completely_regular(pos);
    auto nr = is_completely_regular(neg);
    REQUIRE(pr.has_value());
    REQUIRE(nr.has_value());
    CHECK(pr->rho == 2);
    CHECK(nr->rho == 2);
  }

  SECTION("a generic combination is not a coset difference") {
    CoefficientVector c = elementary_coefficients(2, 2, 3, 4);
    c += elementary_coefficients(3, 2, 4, 4);
    CHECK_FALSE(decompose_as_code_difference(c).has_value());
  }

  SECTION("zero rejected") {
    CHECK_THROWS_AS(decompose_as_code_difference(CoefficientVector(4)),
                    std::invalid_argument);
  }
}
