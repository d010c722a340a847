#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chowkit/rootsystem.hpp"

namespace chowkit {

/// A subset Theta of the simple nodes; W_Theta is generated by its reflections.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> nodes);

  static ParabolicSubset all(int rank);
  /// Maximal parabolic omitting `node`: P_i <-> Theta = {1..rank} \ {i}.
  static ParabolicSubset omitting(int rank, int node);

  bool contains(int node) const;
  bool is_subset_of(const ParabolicSubset& other) const;
  const std::vector<int>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  /// Nodes of {0..rank-1} outside Theta.
  std::vector<int> complement(int rank) const;

  /// "2,3,4" (1-based); the empty set is "".
  std::string to_string() const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  std::vector<int> nodes_;  // sorted, unique
};

/// Parses "2,3,4" (1-based, comma separated). Throws ParseError.
ParabolicSubset parse_theta(std::string_view text, int rank);

/// Faithful representation by the images w(alpha_1), ..., w(alpha_rank).
class WeylElement {
 public:
  WeylElement(RootSystemPtr system, std::vector<Root> images);

  static WeylElement identity(RootSystemPtr system);
  static WeylElement simple(RootSystemPtr system, int i);
  /// s_beta for a root beta.
  static WeylElement reflection(RootSystemPtr system, const Root& beta);

  const RootSystemPtr& system() const { return system_; }
  const std::vector<Root>& images() const { return images_; }
  /// Number of positive roots sent to negative roots.
  int length() const { return length_; }

  Root apply(const Root& beta) const;
  Weight act(const Weight& omega) const;

  /// l(w s_i) < l(w).
  bool has_right_descent(int i) const;
  /// l(s_i w) < l(w).
  bool has_left_descent(int i) const;

  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images_ == b.images_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.images_ < b.images_;
  }

 private:
  RootSystemPtr system_;
  std::vector<Root> images_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// u*v as composition of actions. Throws DomainError for different root systems.
WeylElement multiply(const WeylElement& u, const WeylElement& v);

/// Strips right descents, smallest index first; the returned word multiplies
/// back to w from left to right.
std::vector<int> reduced_word(const WeylElement& w);
WeylElement from_word(const RootSystemPtr& system, const std::vector<int>& word);

/// "s3 s2 s1" (1-based), or "e" for the empty word.
std::string format_word(const std::vector<int>& word);
std::vector<int> parse_word(std::string_view text, int rank);

WeylElement longest_element(const RootSystemPtr& system, const ParabolicSubset& theta);
/// W^Theta, sorted by length then image tuple.
std::vector<WeylElement> minimal_coset_reps(const RootSystemPtr& system, const ParabolicSubset& theta);
/// ^Theta W = { v w_theta : v in W^Theta }, in the order of minimal_coset_reps.
std::vector<WeylElement> maximal_coset_reps(const RootSystemPtr& system, const ParabolicSubset& theta);

using ElementId = std::uint32_t;

/// The materialized group: every element has a dense id, ordered by length
/// and then by image tuple. The identity has id 0 and w0 the last id.
class WeylGroup {
 public:
  /// Throws DomainError if |W| exceeds `max_order`.
  explicit WeylGroup(RootSystemPtr system, std::size_t max_order = 100000);

  const RootSystemPtr& system() const { return system_; }
  int rank() const { return system_->rank(); }
  std::size_t order() const { return elements_.size(); }
  int max_length() const { return elements_.back().length(); }

  const WeylElement& element(ElementId id) const { return elements_[id]; }
  ElementId id_of(const WeylElement& w) const;
  int length(ElementId id) const { return elements_[id].length(); }

  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(elements_.size() - 1); }

  ElementId right_mul(ElementId id, int i) const { return right_[id * static_cast<std::size_t>(rank()) + i]; }
  ElementId left_mul(ElementId id, int i) const { return left_[id * static_cast<std::size_t>(rank()) + i]; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId id) const;
  /// s_beta for the k-th positive root.
  ElementId reflection(std::size_t positive_root_index) const { return reflections_[positive_root_index]; }

  const std::vector<int>& word(ElementId id) const { return words_[id]; }
  std::string format(ElementId id) const { return format_word(words_[id]); }

  /// Ids of W^Theta in enumeration order.
  std::vector<ElementId> minimal_reps(const ParabolicSubset& theta) const;
  ElementId longest_of(const ParabolicSubset& theta) const;

 private:
  RootSystemPtr system_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, ElementId, WeylElementHash> index_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> reflections_;
  std::vector<std::vector<int>> words_;
};

}  // namespace chowkit
