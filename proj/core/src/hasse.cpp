#include "chowkit/hasse.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "chowkit/error.hpp"

namespace chowkit {

int Diagram::vertex_of(ElementId w) const {
  auto it = std::find(vertices.begin(), vertices.end(), w);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Diagram build_hasse(std::shared_ptr<const WeylGroup> group, const ParabolicSubset& theta, EdgeRule rule) {
  Diagram d;
  d.group = std::move(group);
  d.theta = theta;
  const WeylGroup& W = *d.group;
  d.vertices = W.minimal_reps(theta);
  d.dimension = W.max_length() - W.length(W.longest_of(theta));
  std::vector<int> position(W.order(), -1);
  for (std::size_t k = 0; k < d.vertices.size(); ++k) position[d.vertices[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < d.vertices.size(); ++k) {
    const ElementId w = d.vertices[k];
    for (int i = 0; i < W.rank(); ++i) {
      const ElementId x = rule == EdgeRule::Left ? W.left_mul(w, i) : W.right_mul(w, i);
      if (W.length(x) != W.length(w) + 1) continue;
      const int t = position[x];
      if (t >= 0) d.edges.push_back({static_cast<int>(k), t, i, 1});
    }
  }
  return d;
}

std::vector<int> embed_diagram(const Diagram& big, const Diagram& small) {
  if (big.group != small.group) throw DomainError("diagrams belong to different Weyl groups");
  if (!small.theta.is_subset_of(big.theta)) throw DomainError("embedding needs nested parabolic subsets");
  const WeylGroup& W = *big.group;
  const ElementId w_big = W.longest_of(big.theta);
  const ElementId w_small = W.longest_of(small.theta);
  std::vector<int> map;
  for (ElementId v : big.vertices) {
    const int j = small.vertex_of(W.multiply(W.multiply(v, w_big), w_small));
    if (j < 0) throw ConsistencyError("embedded vertex is not a minimal representative");
    map.push_back(j);
  }
  return map;
}

Diagram build_pieri_diagram(const ChowRing& ring, std::optional<int> node) {
  Diagram d;
  d.group = ring.group_ptr();
  d.theta = ring.theta();
  d.dimension = ring.dimension();
  d.vertices = ring.group().minimal_reps(ring.theta());
  d.weighted = true;
  if (ring.divisors().empty()) return d;
  const int alpha = node ? *node : ring.divisors().front().first;
  for (int u = 0; u < static_cast<int>(d.vertices.size()); ++u) {
    const int cls = ring.index_of_min_rep(d.vertices[static_cast<std::size_t>(u)]);
    const ChowElement product = ring.chevalley_mult(alpha, ChowElement::basis(cls));
    for (const auto& [k, c] : product.terms()) {
      const int v = d.vertex_of(ring.schubert_class(k).min_rep);
      d.edges.push_back({v, u, -1, static_cast<int>(c)});
    }
  }
  std::sort(d.edges.begin(), d.edges.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return d;
}

std::string export_dot(const Diagram& d, bool by_codim) {
  const WeylGroup& W = *d.group;
  std::ostringstream out;
  out << "digraph " << (d.weighted ? "pieri" : "hasse") << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, fontsize=9];\n";
  for (std::size_t k = 0; k < d.vertices.size(); ++k) {
    const int v = static_cast<int>(k);
    out << "  v" << k << " [label=\"" << W.format(d.vertices[k]) << "\\ncodim " << d.codim(v) << "\"];\n";
  }
  for (const auto& e : d.edges) {
    const int from = by_codim ? e.target : e.source;
    const int to = by_codim ? e.source : e.target;
    out << "  v" << from << " -> v" << to;
    std::vector<std::string> attrs;
    if (e.label >= 0) attrs.push_back("label=\"" + std::to_string(e.label + 1) + "\"");
    if (d.weighted) {
      attrs.push_back("label=\"" + std::to_string(e.weight) + "\"");
      if (e.weight > 1) attrs.push_back("penwidth=" + std::to_string(e.weight));
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t a = 0; a < attrs.size(); ++a) out << (a ? ", " : "") << attrs[a];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const Diagram& d) {
  const WeylGroup& W = *d.group;
  nlohmann::json j;
  j["theta"] = d.theta.to_string();
  j["dimension"] = d.dimension;
  auto verts = nlohmann::json::array();
  for (std::size_t k = 0; k < d.vertices.size(); ++k) {
    const int v = static_cast<int>(k);
    verts.push_back({{"id", v}, {"word", W.format(d.vertices[k])}, {"length", d.length(v)}, {"codim", d.codim(v)}});
  }
  j["vertices"] = verts;
  auto edges = nlohmann::json::array();
  for (const auto& e : d.edges) {
    nlohmann::json je{{"source", e.source}, {"target", e.target}};
    if (e.label >= 0) je["label"] = e.label + 1;
    if (d.weighted) je["weight"] = e.weight;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2);
}

}  // namespace chowkit
