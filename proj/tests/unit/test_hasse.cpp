#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "chowkit/error.hpp"
#include "chowkit/hasse.hpp"
#include "f4_rings.hpp"

using namespace chowkit;
using chowkit::testing::f4_rings;

namespace {

std::set<std::tuple<int, int, int>> edge_set(const Diagram& d) {
  std::set<std::tuple<int, int, int>> out;
  for (const auto& e : d.edges) out.emplace(e.source, e.target, e.label);
  return out;
}

}  // namespace

TEST(Hasse, F4MaximalParabolics) {
  for (int node : {0, 3}) {
    const Diagram d = build_hasse(f4_rings().group, ParabolicSubset::omitting(4, node));
    EXPECT_EQ(d.vertices.size(), 24u);
    EXPECT_EQ(d.edges.size(), 30u);
    EXPECT_EQ(d.dimension, 15);
    for (const auto& e : d.edges) {
      EXPECT_EQ(d.length(e.target), d.length(e.source) + 1);
      EXPECT_EQ(d.codim(e.source), d.codim(e.target) + 1);
      EXPECT_EQ(e.weight, 1);
    }
  }
}

TEST(Hasse, BottomPathLabels) {
  // Starting from e the diagram is a chain s1, s2 s1, s3 s2 s1 for Theta = {2,3,4}.
  const Diagram d = build_hasse(f4_rings().group, ParabolicSubset::omitting(4, 0));
  std::vector<int> labels;
  for (int len = 0; len < 3; ++len) {
    std::vector<int> out;
    for (const auto& e : d.edges) {
      if (d.length(e.source) == len) out.push_back(e.label);
    }
    ASSERT_EQ(out.size(), 1u) << len;
    labels.push_back(out.front());
  }
  EXPECT_EQ(labels, (std::vector<int>{0, 1, 2}));
}

TEST(Hasse, A2PathAndSingleVertex) {
  const auto group = std::make_shared<const WeylGroup>(named_root_system("A2"));
  const Diagram path = build_hasse(group, ParabolicSubset({1}));
  EXPECT_EQ(path.vertices.size(), 3u);
  EXPECT_EQ(edge_set(path), (std::set<std::tuple<int, int, int>>{{0, 1, 0}, {1, 2, 1}}));

  const Diagram point = build_hasse(group, ParabolicSubset::all(2));
  EXPECT_EQ(point.vertices.size(), 1u);
  EXPECT_TRUE(point.edges.empty());
  const std::string dot = export_dot(point);
  EXPECT_NE(dot.find("v0 [label=\"e\\ncodim 0\"];"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
  const auto json = nlohmann::json::parse(export_json(point));
  EXPECT_EQ(json["vertices"].size(), 1u);
  EXPECT_TRUE(json["edges"].empty());
}

TEST(Hasse, RightRuleKeepsOnlyTheFirstStep) {
  const Diagram d = build_hasse(f4_rings().group, ParabolicSubset::omitting(4, 0), EdgeRule::Right);
  ASSERT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.edges.front().source, 0);
  EXPECT_EQ(d.edges.front().label, 0);
}

TEST(Hasse, EmbedsIntoTheCayleyGraph) {
  const auto& g = f4_rings().group;
  const Diagram full = build_hasse(g, ParabolicSubset{});
  EXPECT_EQ(full.vertices.size(), 1152u);
  const auto full_edges = edge_set(full);
  for (int node : {0, 3}) {
    const Diagram d = build_hasse(g, ParabolicSubset::omitting(4, node));
    const auto map = embed_diagram(d, full);
    ASSERT_EQ(map.size(), d.vertices.size());
    EXPECT_EQ(std::set<int>(map.begin(), map.end()).size(), map.size());
    for (const auto& e : d.edges) {
      EXPECT_TRUE(full_edges.contains({map[static_cast<std::size_t>(e.source)],
                                       map[static_cast<std::size_t>(e.target)], e.label}));
    }
  }
  const Diagram a = build_hasse(g, ParabolicSubset::omitting(4, 0));
  const Diagram b = build_hasse(g, ParabolicSubset::omitting(4, 3));
  EXPECT_THROW(embed_diagram(a, b), DomainError);
}

TEST(Hasse, PieriWeights) {
  const auto& r = f4_rings();
  auto weight = [](const ChowRing& ring, const Diagram& d, const char* from, const char* to) {
    const int u = d.vertex_of(ring.schubert_class(ring.find(from)).min_rep);
    const int v = d.vertex_of(ring.schubert_class(ring.find(to)).min_rep);
    for (const auto& e : d.edges) {
      if (e.source == v && e.target == u) return e.weight;
    }
    return 0;
  };
  const Diagram p1 = build_pieri_diagram(*r.x1);
  const Diagram p4 = build_pieri_diagram(*r.x4);
  EXPECT_TRUE(p1.weighted);
  EXPECT_EQ(weight(*r.x1, p1, "h1^3", "h2^4"), 2);
  EXPECT_EQ(weight(*r.x1, p1, "h1^3", "h1^4"), 1);
  EXPECT_EQ(weight(*r.x1, p1, "h1^3", "h1^5"), 0);
  // Every weighted edge is a coefficient of the stored tables.
  for (const auto& [ring, d] : {std::pair{r.x1, &p1}, std::pair{r.x4, &p4}}) {
    int total = 0;
    for (const auto& row : pieri_table(*ring)) {
      for (const auto& [k, c] : row.product.terms()) {
        EXPECT_EQ(weight(*ring, *d, ring->label(row.rhs).c_str(), ring->label(k).c_str()), c);
        ++total;
      }
    }
    // The table leaves out the row of the unit.
    EXPECT_EQ(static_cast<int>(d->edges.size()), total + 1);
  }
  bool has_two = false;
  for (const auto& e : p4.edges) has_two |= e.weight == 2;
  EXPECT_TRUE(has_two);
  EXPECT_EQ(weight(*r.x4, p4, "g1^7", "g1^8"), 2);
}

TEST(Hasse, DotIsDeterministic) {
  const Diagram d = build_hasse(f4_rings().group, ParabolicSubset::omitting(4, 3));
  const std::string once = export_dot(d);
  EXPECT_EQ(once, export_dot(build_hasse(f4_rings().group, ParabolicSubset::omitting(4, 3))));
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = once.find("[label=\"", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 24u + 30u);
  EXPECT_NE(export_dot(d, true), once);
}
