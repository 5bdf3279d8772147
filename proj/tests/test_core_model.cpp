#include "zeta/core_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace zeta;

namespace {

std::vector<IntMatrix> sorted_maps(const AdmissibleRep& rep) {
  auto maps = rep.edge_maps();
  std::sort(maps.begin(), maps.end());
  return maps;
}

NilpotentAlgebra non_lie_example() {
  NilpotentAlgebra alg(1, 1);
  alg(0, 0, 0) = 5;
  return alg;
}

}  // namespace

TEST(AlgebraToRep, HeisenbergLoops) {
  const auto rep = algebra_to_rep(heisenberg_algebra());
  ASSERT_EQ(rep.vertex_count(), 1u);
  EXPECT_EQ(rep.rank(0), (RankPair{2, 1}));
  ASSERT_EQ(rep.quiver().edge_count(), 4u);
  EXPECT_EQ(rep.edge_maps()[0], (IntMatrix{{0}, {1}}));
  EXPECT_EQ(rep.edge_maps()[1], (IntMatrix{{-1}, {0}}));
  EXPECT_EQ(rep.edge_maps()[2], (IntMatrix{{0}, {-1}}));
  EXPECT_EQ(rep.edge_maps()[3], (IntMatrix{{1}, {0}}));
  EXPECT_EQ(rep.quiver().edges()[0].id, "left_1");
  EXPECT_EQ(rep.quiver().edges()[3].id, "right_2");
  for (const auto& e : rep.quiver().edges()) {
    EXPECT_EQ(e.tail, 0u);
    EXPECT_EQ(e.head, 0u);
  }
}

TEST(AlgebraToRep, AbelianHasEmptyMatrices) {
  const auto rep = algebra_to_rep(NilpotentAlgebra(3, 0));
  EXPECT_EQ(rep.rank(0), (RankPair{3, 0}));
  ASSERT_EQ(rep.quiver().edge_count(), 6u);
  for (const auto& a : rep.edge_maps()) {
    EXPECT_EQ(a.rows(), 3u);
    EXPECT_EQ(a.cols(), 0u);
  }
}

TEST(AlgebraToRep, NonLieDiagonalBracket) {
  const auto rep = algebra_to_rep(non_lie_example());
  ASSERT_EQ(rep.quiver().edge_count(), 2u);
  EXPECT_EQ(rep.edge_maps()[0], (IntMatrix{{5}}));
  EXPECT_EQ(rep.edge_maps()[1], (IntMatrix{{5}}));
}

TEST(AmalgamateRep, PowerOneIsIdentity) {
  const auto rep = algebra_to_rep(heisenberg_algebra());
  EXPECT_EQ(amalgamate_rep(rep, 1), rep);
}

TEST(AmalgamateRep, HeisenbergSquareBlocks) {
  const auto rep = amalgamate_rep(algebra_to_rep(heisenberg_algebra()), 2);
  EXPECT_EQ(rep.rank(0), (RankPair{4, 1}));
  ASSERT_EQ(rep.quiver().edge_count(), 8u);
  // (left_1, copy 1) and (left_1, copy 2): a^{left_1} = [[0],[1]] placed in
  // row block 1 resp. 2 (built by hand).
  EXPECT_EQ(rep.edge_maps()[0], (IntMatrix{{0}, {1}, {0}, {0}}));
  EXPECT_EQ(rep.edge_maps()[1], (IntMatrix{{0}, {0}, {0}, {1}}));
  EXPECT_EQ(rep.quiver().edges()[1].id, "left_1:2");
  EXPECT_EQ(rep.edge_maps()[2], (IntMatrix{{-1}, {0}, {0}, {0}}));
}

TEST(AmalgamateRep, DegenerateFirstRanks) {
  Quiver q;
  q.add_vertex("v");
  q.add_edge("e", "v", "v");
  AdmissibleRep rep(q, {{0, 2}}, {IntMatrix(0, 2)});
  const auto out = amalgamate_rep(rep, 3);
  EXPECT_EQ(out.rank(0), (RankPair{0, 2}));
  ASSERT_EQ(out.edge_maps().size(), 3u);
  for (const auto& a : out.edge_maps()) EXPECT_EQ(a, IntMatrix(0, 2));
}

TEST(AmalgamateRep, RejectsZeroPower) {
  EXPECT_THROW(amalgamate_rep(algebra_to_rep(heisenberg_algebra()), 0), ModelError);
  EXPECT_THROW(amalgamate_algebra(heisenberg_algebra(), 0), ModelError);
}

TEST(AmalgamateAlgebra, PowerOneIsIdentity) {
  EXPECT_EQ(amalgamate_algebra(heisenberg_algebra(), 1), heisenberg_algebra());
}

TEST(AmalgamateAlgebra, HeisenbergSquare) {
  const auto alg = amalgamate_algebra(heisenberg_algebra(), 2);
  EXPECT_EQ(alg.n(), 4);
  EXPECT_EQ(alg.d(), 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      std::int64_t expected = 0;
      if ((a == 0 && b == 1) || (a == 2 && b == 3)) expected = 1;
      if ((a == 1 && b == 0) || (a == 3 && b == 2)) expected = -1;
      EXPECT_EQ(alg(a, b, 0), expected) << a << "," << b;
    }
}

TEST(AmalgamateAlgebra, AbelianStaysAbelian) {
  const auto alg = amalgamate_algebra(NilpotentAlgebra(2, 0), 3);
  EXPECT_EQ(alg, NilpotentAlgebra(6, 0));
}

TEST(ValidateLie, Examples) {
  EXPECT_TRUE(validate_lie(heisenberg_algebra()));
  NilpotentAlgebra diag(1, 1);
  diag(0, 0, 0) = 1;
  EXPECT_FALSE(validate_lie(diag));
  EXPECT_TRUE(validate_lie(NilpotentAlgebra(4, 0)));
}

TEST(Dictionary, AmalgamationCommutesWithAlgebraToRep) {
  NilpotentAlgebra mixed(3, 2);
  mixed(0, 1, 0) = 1;
  mixed(1, 0, 0) = -1;
  mixed(0, 2, 1) = 3;
  mixed(2, 2, 0) = 7;
  for (const auto& alg : {heisenberg_algebra(), non_lie_example(), mixed, NilpotentAlgebra(2, 0)})
    for (int m = 1; m <= 3; ++m) {
      const auto via_algebra = algebra_to_rep(amalgamate_algebra(alg, m));
      const auto via_rep = amalgamate_rep(algebra_to_rep(alg), m);
      EXPECT_EQ(via_algebra.ranks(), via_rep.ranks());
      EXPECT_EQ(sorted_maps(via_algebra), sorted_maps(via_rep)) << "m=" << m;
    }
}

TEST(Dictionary, Deterministic) {
  const auto a = amalgamate_rep(algebra_to_rep(heisenberg_algebra()), 3);
  const auto b = amalgamate_rep(algebra_to_rep(heisenberg_algebra()), 3);
  EXPECT_EQ(a, b);
}

TEST(AdmissibleRep, RejectsShapeMismatch) {
  Quiver q;
  q.add_vertex("v");
  q.add_vertex("w");
  q.add_edge("e", "v", "w");
  EXPECT_THROW(AdmissibleRep(q, {{1, 0}, {0, 1}}, {IntMatrix(1, 2)}), ModelError);
  EXPECT_NO_THROW(AdmissibleRep(q, {{1, 0}, {0, 1}}, {IntMatrix(1, 1)}));
}

TEST(Quiver, RejectsUnknownVertices) {
  Quiver q;
  q.add_vertex("v");
  EXPECT_THROW(q.add_edge("e", "v", "x"), ModelError);
  EXPECT_THROW(q.add_vertex("v"), ModelError);
}
