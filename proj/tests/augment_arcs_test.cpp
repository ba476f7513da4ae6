#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace bidi {
namespace {

using testing::doc;
using testing::fixture;
using testing::id;

using Edge = std::pair<VertexId, VertexId>;

TEST(ShadowGraph, GapExampleAfterChain) {
  auto g = fixture("gap.bg");
  // Nothing is added before the shadow graph here, so V̂ = {l1, r1} = {v1, v2}.
  const std::vector<VertexId> vhat{id(g, "v1"), id(g, "v2")};
  const ShadowGraph s = build_shadow_graph(g, vhat);
  EXPECT_EQ(s.underlying_edges(), (std::vector<Edge>{{id(g, "v1"), id(g, "v2")}}));
  EXPECT_EQ(s.arcs, (std::vector<ShadowArc>{{id(g, "v1"), id(g, "v2"), Sign::minus, Sign::plus},
                                            {id(g, "v2"), id(g, "v1"), Sign::plus, Sign::minus}}));
}

TEST(ShadowGraph, K23IsCompleteBipartite) {
  const auto g = fixture("k23.bg");
  std::vector<VertexId> all;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) all.push_back(VertexId{v});
  const ShadowGraph s = build_shadow_graph(g, all);
  EXPECT_EQ(s.underlying_edges().size(), 6u);
  EXPECT_EQ(s.arcs.size(), 12u);
  for (const ShadowArc& a : s.arcs) {
    EXPECT_EQ(a.from_sign, Sign::plus);
    EXPECT_EQ(a.to_sign, Sign::plus);
    EXPECT_NE(g.label(a.from)[0], g.label(a.to)[0]);
  }
}

TEST(ShadowGraph, SingleVertexHasNoArcs) {
  const auto g = fixture("k23.bg");
  const std::vector<VertexId> one{id(g, "w1")};
  EXPECT_TRUE(build_shadow_graph(g, one).arcs.empty());
}

TEST(ShadowGraph, ArcsMatchReachesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = testing::random_case(seed, 10, 15);
    std::vector<VertexId> vhat;
    for (std::uint32_t v = 0; v < g.vertex_count(); v += 2) vhat.push_back(VertexId{v});
    const ShadowGraph s = build_shadow_graph(g, vhat);
    std::size_t expected = 0;
    for (VertexId u : vhat) {
      for (VertexId v : vhat) {
        if (u == v) continue;
        for (Sign p : {Sign::plus, Sign::minus}) {
          for (Sign q : {Sign::plus, Sign::minus}) {
            if (!reaches(g, u, p, v, q)) continue;
            ++expected;
            ASSERT_NE(std::find(s.arcs.begin(), s.arcs.end(), ShadowArc{u, v, p, q}), s.arcs.end());
          }
        }
      }
    }
    ASSERT_EQ(s.arcs.size(), expected);
  }
}

ShadowGraph shadow(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
  ShadowGraph s{std::move(vertices), {}};
  for (const auto& [a, b] : edges) s.arcs.push_back({a, b, Sign::plus, Sign::plus});
  return s;
}

TEST(MaximalMatching, SingleEdge) {
  const MatchingPlan p = maximal_matching(shadow({VertexId{0}, VertexId{1}}, {{VertexId{0}, VertexId{1}}}));
  EXPECT_EQ(p.matched.size(), 1u);
  EXPECT_TRUE(p.unmatched.empty());
  EXPECT_EQ(p.cycle_arcs, (std::vector<Edge>{{VertexId{1}, VertexId{0}}}));
  EXPECT_FALSE(p.leftover.has_value());
}

TEST(MaximalMatching, EdgelessOnThreeVertices) {
  const MatchingPlan p = maximal_matching(shadow({VertexId{0}, VertexId{1}, VertexId{2}}, {}));
  EXPECT_TRUE(p.matched.empty());
  EXPECT_EQ(p.unmatched.size(), 3u);
  EXPECT_TRUE(p.cycle_arcs.empty());
  EXPECT_EQ(p.pair_arcs, (std::vector<Edge>{{VertexId{0}, VertexId{1}}}));
  EXPECT_EQ(p.leftover, VertexId{2});
}

TEST(MaximalMatching, CompleteBipartiteTwoThree) {
  std::vector<VertexId> vs;
  std::vector<Edge> edges;
  for (std::uint32_t v = 0; v < 5; ++v) vs.push_back(VertexId{v});
  for (std::uint32_t a : {0u, 1u}) {
    for (std::uint32_t b : {2u, 3u, 4u}) edges.emplace_back(VertexId{b}, VertexId{a});
  }
  const MatchingPlan p = maximal_matching(shadow(vs, edges));
  EXPECT_EQ(p.matched, (std::vector<Edge>{{VertexId{0}, VertexId{2}}, {VertexId{1}, VertexId{3}}}));
  EXPECT_EQ(p.unmatched, std::vector<VertexId>{VertexId{4}});
  EXPECT_EQ(p.cycle_arcs, (std::vector<Edge>{{VertexId{2}, VertexId{1}}, {VertexId{3}, VertexId{0}}}));
  EXPECT_EQ(p.leftover, VertexId{4});
}

TEST(MaximalMatching, CoversAndIsMaximalOnRandomShadowGraphs) {
  PortableRandom r(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(r.below(12));
    std::vector<VertexId> vs;
    for (std::uint32_t v = 0; v < n; ++v) vs.push_back(VertexId{3 * v});
    std::vector<Edge> edges;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (r.unit() < 0.25) edges.emplace_back(vs[a], vs[b]);
      }
    }
    const ShadowGraph s = shadow(vs, edges);
    const MatchingPlan p = maximal_matching(s);
    const auto underlying = s.underlying_edges();
    std::vector<VertexId> covered = p.unmatched;
    for (const auto& [a, b] : p.matched) {
      ASSERT_LT(a, b);
      ASSERT_TRUE(std::binary_search(underlying.begin(), underlying.end(), Edge{a, b}));
      covered.push_back(a);
      covered.push_back(b);
    }
    std::sort(covered.begin(), covered.end());
    ASSERT_EQ(covered, vs);
    for (const auto& [a, b] : underlying) {
      const bool a_free = std::count(p.unmatched.begin(), p.unmatched.end(), a) > 0;
      const bool b_free = std::count(p.unmatched.begin(), p.unmatched.end(), b) > 0;
      ASSERT_FALSE(a_free && b_free);
    }
    ASSERT_TRUE(std::is_sorted(p.unmatched.begin(), p.unmatched.end()));
  }
}

TEST(AdditionalArcs, GapExampleNeedsTheClosingLoop) {
  const auto g = fixture("gap.bg");
  const Augmentation a = additional_arcs_acyclic(g);
  EXPECT_EQ(a.certificate, Certificate::within_one);
  ASSERT_EQ(a.arc_cost(), 2u);
  EXPECT_TRUE(a.added[0].same_boundary(Arc::link(id(g, "v1"), Sign::plus, id(g, "v2"), Sign::minus)));
  EXPECT_TRUE(a.added[1].is_loop());
  EXPECT_EQ(a.added[1].first().sign, Sign::minus);
  EXPECT_TRUE(a.closing_loop);
  EXPECT_EQ(arc_lower_bound(classify(g)) + 1, a.arc_cost());
  EXPECT_TRUE(is_strongly_connected(with_arcs(g, a.added)));
}

TEST(AdditionalArcs, K23ExampleSpendsFourArcs) {
  const auto g = fixture("k23.bg");
  const Augmentation a = additional_arcs_acyclic(g);
  ASSERT_EQ(a.arc_cost(), 4u);
  EXPECT_EQ(std::count_if(a.added.begin(), a.added.end(), [](const Arc& x) { return x.is_loop(); }), 2);
  EXPECT_TRUE(a.closing_loop);
  EXPECT_TRUE(is_strongly_connected(with_arcs(g, a.added)));
}

TEST(AdditionalArcs, TwoSingleSourceComponentsAndIsolatedVertex) {
  const auto g = doc("link a + b +\nlink a - b +\nlink c + d +\nlink c - d +\nvertex q\n");
  const Classification c = classify(g);
  ASSERT_EQ(arc_lower_bound(c), 2u);
  const Augmentation a = additional_arcs_acyclic(g);
  EXPECT_EQ(a.arc_cost(), 2u);
  EXPECT_FALSE(a.closing_loop);
  for (const Arc& x : a.added) EXPECT_FALSE(x.is_loop());
  EXPECT_TRUE(oracle::strongly_connected_definitional(with_arcs(g, a.added)));
}

TEST(AdditionalArcs, LoneIsolatedVertexLeavesNoDummyBehind) {
  // One isolated vertex and a component with four specials forces the matching path.
  const auto g = doc("link a + b +\nlink a + c +\nlink a + d +\nvertex q\n");
  const Classification c = classify(g);
  ASSERT_EQ(c.isolated.size(), 1u);
  ASSERT_GT(c.l2 + 1, c.l1);
  const Augmentation a = additional_arcs_acyclic(g);
  for (const Arc& x : a.added) {
    for (const ArcEnd& e : x.ends()) EXPECT_LT(e.vertex.value, g.vertex_count());
  }
  const BidirectedGraph out = with_arcs(g, a.added);
  EXPECT_TRUE(is_strongly_connected(out));
  EXPECT_GE(a.arc_cost(), arc_lower_bound(c));
  EXPECT_LE(a.arc_cost(), arc_lower_bound(c) + 1);
}

TEST(AugmentArcs, StronglyConnectedInputNeedsNothing) {
  EXPECT_TRUE(augment_arcs(fixture("gap-closed.bg")).added.empty());
  EXPECT_TRUE(augment_arcs(fixture("loop-only.bg")).added.empty());
}

TEST(AugmentArcs, AcyclicInputMatchesDirectCall) {
  for (const char* name : {"gap.bg", "k23.bg"}) {
    const auto g = fixture(name);
    EXPECT_EQ(augment_arcs(g).added, additional_arcs_acyclic(g).added) << name;
  }
}

void check_window(const BidirectedGraph& g, const Augmentation& a) {
  const Condensation cond = condense(g);
  if (cond.condensed.vertex_count() <= 1) {
    ASSERT_TRUE(a.added.empty());
    return;
  }
  const Classification c = classify(cond.condensed);
  const std::size_t lambda = arc_lower_bound(c);
  ASSERT_GE(a.arc_cost(), lambda) << serialize(g);
  ASSERT_LE(a.arc_cost(), lambda + 1) << serialize(g);
  if (c.l1 == c.gamma || c.l2 + 1 <= c.l1) ASSERT_EQ(a.arc_cost(), lambda) << serialize(g);
  if (a.arc_cost() == lambda + 1) ASSERT_TRUE(a.closing_loop) << serialize(g);
  for (const Arc& x : a.added) {
    for (const ArcEnd& e : x.ends()) ASSERT_LT(e.vertex.value, g.vertex_count());
  }
  ASSERT_TRUE(is_strongly_connected(with_arcs(g, a.added))) << serialize(g);
}

TEST(AugmentArcs, WindowOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const auto g = testing::random_case(seed, 40, 120);
    check_window(g, augment_arcs(g));
  }
}

TEST(AugmentArcs, WindowOnSparseGraphsWithIsolatedVertices) {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    RandomGraphSpec spec{.vertices = 4 + seed % 20, .arcs = seed % 9, .seed = seed, .loop_fraction = 0.2};
    const auto g = gen_random(spec);
    check_window(g, augment_arcs(g));
  }
}

TEST(AugmentArcs, OutputIsStronglyConnectedByDefinition) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = testing::random_case(seed, 6, 8);
    const Augmentation a = augment_arcs(g);
    ASSERT_TRUE(oracle::strongly_connected_definitional(with_arcs(g, a.added))) << serialize(g);
  }
}

}  // namespace
}  // namespace bidi
