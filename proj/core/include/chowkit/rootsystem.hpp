#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace chowkit {

// Node indices are 0-based in the API. Text formats ("s1", "w1", --theta 2,3,4)
// use the 1-based Bourbaki numbering.

/// Integer Cartan matrix with C(i, j) = <alpha_j, alpha_i^vee>.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Throws DomainError unless the matrix is square with 2 on the diagonal,
  /// non-positive off-diagonal entries and a symmetric zero pattern.
  CartanMatrix(int rank, std::vector<int> entries);
  CartanMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// All leading principal minors positive.
  bool is_finite_type() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Coordinates in the simple-root basis.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  static Weight fundamental(int rank, int i);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

class RootSystem {
 public:
  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  const std::string& name() const { return name_; }

  /// Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& simple_root(int i) const { return simple_roots_.at(static_cast<std::size_t>(i)); }
  bool is_root(const Root& r) const;
  /// Index of r in positive_roots(), or -1.
  int positive_index(const Root& r) const;

  /// s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
  Root reflect_root(int i, const Root& beta) const;
  /// s_i(omega) = omega - <alpha_i^vee, omega> alpha_i, computed in the weight basis.
  Weight reflect_weight(int i, const Weight& omega) const;

  /// A root expanded in the fundamental-weight basis.
  Weight to_weight(const Root& beta) const;

  /// <beta^vee, omega>. Throws DomainError if beta is not a root.
  int coroot_pairing(const Root& beta, const Weight& omega) const;
  /// <alpha_i^vee, beta>.
  int simple_coroot_pairing(int i, const Root& beta) const;

  /// d_i with d_i C(i,j) symmetric; (alpha_i, alpha_i) = 2 d_i, smallest positive integers.
  const std::vector<long>& symmetrizer() const { return symmetrizer_; }
  /// Invariant form (beta, gamma) in units of the symmetrizer.
  long inner(const Root& beta, const Root& gamma) const;

  std::string label(int i) const { return std::to_string(i + 1); }

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(const CartanMatrix&, int, std::string);

  CartanMatrix cartan_;
  std::string name_;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
  std::vector<long> symmetrizer_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Closure of the simple roots under simple reflections. Throws
/// InfiniteRootSystemError if the matrix is not of finite type or a root of
/// height above `height_bound` appears.
RootSystemPtr build_root_system(const CartanMatrix& cartan, int height_bound = 256,
                                std::string name = "custom");

/// Bourbaki-numbered Cartan matrices: "A1".."A8", "B2".."B8", "C2".."C8",
/// "D4".."D8", "G2", "F4". Throws DomainError on unknown names.
CartanMatrix named_cartan(std::string_view type);
RootSystemPtr named_root_system(std::string_view type);

/// Rows of whitespace-separated integers; blank lines and '#' comments skipped.
CartanMatrix parse_cartan(std::string_view text);
CartanMatrix load_cartan(const std::filesystem::path& path);

}  // namespace chowkit
