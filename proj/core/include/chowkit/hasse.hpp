#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/chow.hpp"
#include "chowkit/weyl.hpp"

namespace chowkit {

/// Which neighbours of w in W^Theta are joined to it.
enum class EdgeRule {
  /// w -> s_i w. On W^Theta this is the rule that survives the passage to
  /// maximal representatives, and it reproduces the usual pictures.
  Left,
  /// w -> w s_i, taken literally inside W^Theta. For a maximal parabolic
  /// only the edge e -> s_i survives.
  Right,
};

/// An edge always points from the shorter to the longer element.
struct DiagramEdge {
  int source;
  int target;
  int label;   // node index (0-based), or -1 when unlabelled
  int weight;  // 1 for Hasse diagrams, the Chevalley coefficient for Pieri diagrams
};

struct Diagram {
  std::shared_ptr<const WeylGroup> group;
  ParabolicSubset theta;
  int dimension = 0;               // l(w0) - l(w_theta)
  std::vector<ElementId> vertices;  // W^Theta in enumeration order
  std::vector<DiagramEdge> edges;
  bool weighted = false;

  int length(int v) const { return group->length(vertices[static_cast<std::size_t>(v)]); }
  /// Codimension of the Schubert class indexed by the vertex.
  int codim(int v) const { return dimension - length(v); }
  /// Vertex index of a W^Theta element, or -1.
  int vertex_of(ElementId w) const;
};

Diagram build_hasse(std::shared_ptr<const WeylGroup> group, const ParabolicSubset& theta,
                    EdgeRule rule = EdgeRule::Left);

/// Vertex map H(theta_big) -> H(theta_small), v -> v w_big w_small, i.e.
/// through the maximal representative v w_big. Throws DomainError unless
/// theta_small is contained in theta_big.
std::vector<int> embed_diagram(const Diagram& big, const Diagram& small);

/// Edges v -> u weighted by the coefficient of [v] in H * [u], where H is the
/// divisor class of `node` (default: the first node outside Theta).
Diagram build_pieri_diagram(const ChowRing& ring, std::optional<int> node = std::nullopt);

/// Deterministic DOT text. With by_codim the edges point towards increasing
/// codimension (the orientation of the pictures) instead of increasing length.
std::string export_dot(const Diagram& d, bool by_codim = false);
std::string export_json(const Diagram& d);

}  // namespace chowkit
