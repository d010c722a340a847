#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chowkit/poly.hpp"
#include "chowkit/weyl.hpp"

namespace chowkit {

using Coeff = std::int64_t;

/// A basis class [X_w] of CH(G/P_Theta), w in ^Theta W.
struct SchubertClass {
  ElementId rep = 0;
  ElementId min_rep = 0;  // v in W^Theta with rep = v w_theta
  int codim = 0;
};

/// Integer combination of basis classes, keyed by basis index of the ring
/// it was built for. Zero coefficients are never stored.
class ChowElement {
 public:
  using Terms = std::map<int, Coeff>;

  ChowElement() = default;
  static ChowElement basis(int index, Coeff c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(int index) const;
  void add(int index, Coeff c);

  ChowElement& operator+=(const ChowElement& o);
  ChowElement& operator-=(const ChowElement& o);
  ChowElement& operator*=(Coeff c);
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(Coeff c, ChowElement a) { return a *= c; }
  ChowElement operator-() const;
  friend bool operator==(const ChowElement&, const ChowElement&) = default;

 private:
  Terms terms_;
};

/// How c_map enumerates Delta_w: only over W^Theta (enough for inputs pulled
/// back from G/P), or over all of W with a check that nothing leaks out.
enum class CMapMode { Parabolic, Full };

/// CH(G/P_Theta) with its Schubert basis. Basis indices run by codimension,
/// and within a codimension by the enumeration order of W^Theta.
class ChowRing {
 public:
  ChowRing(std::shared_ptr<const WeylGroup> group, ParabolicSubset theta);

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }
  const RootSystem& system() const { return *group_->system(); }
  const ParabolicSubset& theta() const { return theta_; }

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const SchubertClass& schubert_class(int index) const { return classes_.at(static_cast<std::size_t>(index)); }
  int codim(int index) const { return schubert_class(index).codim; }
  /// Basis indices of codimension `c`. Throws DomainError out of range.
  const std::vector<int>& basis(int c) const;
  std::vector<int> ranks() const;
  int unit() const { return 0; }
  int point() const { return size() - 1; }
  /// Basis index of [X_w], or -1 if w is not a maximal coset rep.
  int index_of(ElementId w) const;
  /// Basis index of [X_{v w_theta}] for v in W^Theta, or -1.
  int index_of_min_rep(ElementId v) const;
  /// Poincare dual basis class: [X_w] <-> [X_{w0 w w_theta}].
  int dual(int index) const;
  /// Nodes alpha outside Theta, with the index of [X_{w0 s_alpha}].
  const std::vector<std::pair<int, int>>& divisors() const { return divisors_; }
  int divisor_index(int node) const;

  /// Reduced word of the minimal coset representative v, e.g. "s1 s2 s3";
  /// the class is [X_{v w_theta}] and has dimension l(v).
  std::string word(int index) const { return group_->format(classes_[static_cast<std::size_t>(index)].min_rep); }

  /// Optional display names, one per basis index ("1", "h1^4", ...).
  void set_labels(std::vector<std::string> labels);
  bool has_labels() const { return !labels_.empty(); }
  /// Display name; "[s1 s2]" style when unlabeled.
  std::string label(int index) const;
  /// Accepts a display name or a bracketed reduced word of the minimal
  /// representative. Throws ParseError.
  int find(std::string_view name) const;
  /// Basis indices sorted by codimension, then by label when labeled.
  const std::vector<int>& display_order() const { return display_order_; }

  /// Codimension of a homogeneous element; -1 for zero. Throws DomainError
  /// for mixed degrees.
  int codim_of(const ChowElement& x) const;
  Coeff degree(const ChowElement& x) const;
  /// Pairing from the delta formula; x, y homogeneous of complementary codim.
  Coeff duality_pair(const ChowElement& x, const ChowElement& y) const;
  /// Chevalley formula for [X_{w0 s_alpha}] * x, evaluated in CH(G/B).
  ChowElement chevalley_mult(int alpha, const ChowElement& x) const;

  /// Delta_{w^-1}(d/|W|) for the representative of a basis class.
  Polynomial giambelli_lift(int index) const;
  /// The same lift for any element of W.
  Polynomial lift_element(ElementId w) const;
  ChowElement c_map(const Polynomial& u, CMapMode mode = CMapMode::Parabolic) const;

  /// Product through Giambelli lifts, cross-checked against Chevalley and
  /// duality where they apply. Throws ConsistencyError on disagreement.
  ChowElement multiply(const ChowElement& x, const ChowElement& y) const;
  ChowElement multiply_basis(int a, int b) const;
  ChowElement power(const ChowElement& x, int k) const;
  /// Fills the product cache for every pair with codim sum <= dim.
  void precompute(int jobs = 1) const;

  /// "2h2^4 + h1^4" style, terms in display order; "0" for zero.
  std::string format(const ChowElement& x) const;
  /// Inverse of format. A bare integer means that multiple of the unit.
  ChowElement parse(std::string_view text) const;

  const DividedDifferenceEngine& engine() const { return engine_; }

 private:
  ChowElement compute_product(int a, int b) const;
  void rebuild_display_order();

  std::shared_ptr<const WeylGroup> group_;
  ParabolicSubset theta_;
  ElementId w_theta_ = 0;
  int dimension_ = 0;
  std::vector<SchubertClass> classes_;
  std::vector<std::vector<int>> by_codim_;
  std::unordered_map<ElementId, int> index_;
  std::unordered_map<ElementId, int> min_index_;
  std::vector<int> dual_;
  std::vector<std::pair<int, int>> divisors_;
  std::vector<ElementId> min_reps_;  // W^Theta in enumeration order
  std::vector<std::string> labels_;
  std::vector<int> display_order_;
  DividedDifferenceEngine engine_;
  Polynomial top_;  // d/|W|

  mutable std::mutex lift_mutex_;
  mutable std::unordered_map<ElementId, Polynomial> lifts_;
  mutable std::mutex product_mutex_;
  mutable std::map<std::pair<int, int>, ChowElement> products_;
};

/// One row "H * x = product" per basis class x with 0 < codim x < dim,
/// where H is the divisor class of `node` (the first divisor by default).
struct TableRow {
  int lhs;
  int rhs;
  ChowElement product;
};
std::vector<TableRow> pieri_table(const ChowRing& ring, std::optional<int> node = std::nullopt);
/// Aligned "h1^1 * h1^3 = h1^4 + 2h2^4" lines.
std::string table_text(const ChowRing& ring, const std::vector<TableRow>& rows);
/// [{lhs, rhs, product: [{class, coeff}]}]
std::string table_json(const ChowRing& ring, const std::vector<TableRow>& rows);
std::string element_json(const ChowRing& ring, const ChowElement& x);

/// Reads "a * b = c" lines (blank lines and '#' comments skipped).
std::vector<TableRow> parse_table(const ChowRing& ring, std::string_view text);

}  // namespace chowkit
