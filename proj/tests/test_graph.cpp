#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "tripack/error.hpp"
#include "tripack/graph.hpp"

using namespace tripack;
using namespace tripack::testing;

TEST(Validate, Figure1IsValidWithApexSidesComplete) {
  auto rep = validate(figure1());
  EXPECT_TRUE(rep.valid());
  EXPECT_TRUE(rep.side_complete[index(Side::AB)]);
  EXPECT_TRUE(rep.side_complete[index(Side::AC)]);
  EXPECT_FALSE(rep.side_complete[index(Side::BC)]);
  EXPECT_TRUE(rep.problems.empty());
}

TEST(Validate, EmptyGraphIsValidAndVacuouslyComplete) {
  auto rep = validate(TripartiteGraph{});
  EXPECT_TRUE(rep.valid());
  for (bool c : rep.side_complete) EXPECT_TRUE(c);
}

TEST(Validate, EdgeInsidePartIsRejected) {
  TripartiteGraph g({std::vector<VertexId>{0}, {1, 2}, {3}}, {std::vector<Edge>{}, {}, {{1, 2}}});
  auto rep = validate(g);
  EXPECT_FALSE(rep.edges_respect_parts);
  EXPECT_FALSE(rep.valid());
  EXPECT_THROW(require_valid(g), ValidationError);
}

TEST(Validate, OverlappingPartsAndDuplicatesAreRejected) {
  TripartiteGraph overlap({std::vector<VertexId>{0}, {0, 1}, {2}}, {});
  EXPECT_FALSE(validate(overlap).parts_disjoint);

  TripartiteGraph dup({std::vector<VertexId>{0}, {1}, {2}},
                      {std::vector<Edge>{{0, 1}, {1, 0}}, {}, {}});
  EXPECT_FALSE(validate(dup).simple);
}

TEST(Validate, EdgeOnWrongSideIsRejected) {
  // An A-C edge listed under AB.
  TripartiteGraph g({std::vector<VertexId>{0}, {1}, {2}}, {std::vector<Edge>{{0, 2}}, {}, {}});
  EXPECT_FALSE(validate(g).edges_respect_parts);
}

TEST(Orientation, IdentityForFigure1) {
  auto o = detect_orientation(figure1());
  ASSERT_TRUE(o);
  EXPECT_TRUE(o->is_identity());
}

TEST(Orientation, CompleteGraphPicksSmallestPart) {
  // K_{3,2,4} with parts in that order: B is smallest and becomes the apex.
  auto k = complete_tripartite(3, 2, 4);
  auto o = detect_orientation(k);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->apex(), Part::B);
  EXPECT_EQ(o->roles[1], Part::A);
  EXPECT_EQ(o->roles[2], Part::C);

  auto oriented = apply_orientation(k, *o);
  EXPECT_EQ(oriented.p(), 2u);
  EXPECT_TRUE(oriented.bilaterally_complete());
  EXPECT_TRUE(detect_orientation(oriented)->is_identity());
}

TEST(Orientation, TieGoesToInputOrder) {
  auto o = detect_orientation(complete_tripartite(2, 2, 2));
  ASSERT_TRUE(o);
  EXPECT_TRUE(o->is_identity());
}

TEST(Orientation, ApexCIsFound) {
  // AC and BC complete, AB has a single edge.
  std::vector<VertexId> a{0, 1}, b{2, 3}, c{4};
  TripartiteGraph g({a, b, c}, {std::vector<Edge>{{0, 2}}, complete_side(a, c), complete_side(b, c)});
  auto o = detect_orientation(g);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->apex(), Part::C);
  auto oriented = apply_orientation(g, *o);
  EXPECT_EQ(oriented.part(Part::A), c);
  EXPECT_EQ(oriented.part(Part::B), a);
  EXPECT_EQ(oriented.part(Part::C), b);
  EXPECT_EQ(oriented.side(Side::BC), (std::vector<Edge>{{0, 2}}));
}

TEST(Orientation, NoneWhenOnlyOneSideComplete) {
  std::vector<VertexId> a{0, 1}, b{2, 3}, c{4, 5};
  TripartiteGraph g({a, b, c}, {complete_side(a, b), std::vector<Edge>{{0, 4}}, {{2, 5}}});
  EXPECT_FALSE(detect_orientation(g));
}

TEST(Triangles, Figure1HasFourteen) {
  auto g = figure1();
  auto ts = enumerate_triangles(g);
  EXPECT_EQ(ts.size(), 14u);  // p * |E_BC| = 2 * 7
  EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
  EXPECT_EQ(ts, triangles_by_triples(g));
}

TEST(Triangles, NoBcEdgesMeansNoTriangles) {
  EXPECT_TRUE(enumerate_triangles(bilateral(3, 3, 3, {})).empty());
}

TEST(Triangles, K222HasEight) {
  auto g = complete_tripartite(2, 2, 2);
  EXPECT_EQ(enumerate_triangles(g).size(), 8u);
  EXPECT_EQ(enumerate_triangles(g), triangles_by_triples(g));
}

TEST(Triangles, MatchTripleScanOnGeneralGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = generate({3, 3, 4, 0.5, GenMode::General, 0.6, 0.6, seed});
    EXPECT_EQ(enumerate_triangles(g), triangles_by_triples(g)) << "seed " << seed;
  }
}

TEST(Triangles, CountIsPTimesBcEdgesWhenBilateral) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate({3, 4, 4, 0.5, GenMode::BilaterallyComplete, 1, 1, seed});
    EXPECT_EQ(enumerate_triangles(g).size(), g.p() * g.side(Side::BC).size());
  }
}

TEST(MakeTriangle, AcceptsAnyVertexOrder) {
  auto g = figure1();
  auto t = make_triangle(g, 9, 0, 3);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (Triangle{0, 3, 9}));
  EXPECT_FALSE(make_triangle(g, 0, 1, 3));
  EXPECT_FALSE(make_triangle(g, 0, 3, 42));
}

TEST(IsTransversal, Figure1Examples) {
  auto g = figure1();
  EXPECT_TRUE(is_transversal(g, figure1_min_transversal()));
  EXPECT_TRUE(is_transversal(g, g.side(Side::BC)));
  EXPECT_FALSE(is_transversal(g, std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(is_transversal(bilateral(2, 2, 2, {}), std::vector<Edge>{}));
}

TEST(IsTransversal, ForeignEdgeThrows) {
  EXPECT_THROW(is_transversal(figure1(), std::vector<Edge>{{2, 9}}), PreconditionError);
}

TEST(IsPacking, Figure1Examples) {
  auto g = figure1();
  EXPECT_TRUE(is_packing(g, std::vector<Triangle>{{0, 2, 6}, {1, 2, 7}}));
  EXPECT_FALSE(is_packing(g, std::vector<Triangle>{{0, 2, 6}, {0, 2, 7}}));
  EXPECT_TRUE(is_packing(g, std::vector<Triangle>{}));
}

TEST(IsPacking, ForeignTriangleThrows) {
  EXPECT_THROW(is_packing(figure1(), std::vector<Triangle>{{0, 2, 9}}), PreconditionError);
}

TEST(EdgeType, CanonicalOrder) {
  Edge e{9, 3};
  EXPECT_EQ(e.u, 3u);
  EXPECT_EQ(e.v, 9u);
  EXPECT_EQ(e, (Edge{3, 9}));
  EXPECT_EQ(e.other(3), 9u);
  EXPECT_EQ(to_string(e), "3-9");
}
