#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "chowkit/rational.hpp"
#include "chowkit/rootsystem.hpp"
#include "chowkit/weyl.hpp"

namespace chowkit {

inline constexpr int kMaxVariables = 8;

/// Exponent vector over omega_1..omega_n.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact-rational polynomial in the fundamental weights. Zero coefficients
/// are never stored; iteration follows graded lex order, largest first.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(int nvars = 0);
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  /// sum_j coeffs[j] * omega_j
  static Polynomial linear(const std::vector<int>& coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(int k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  Terms terms_;
};

/// "11/6*w1^2*w4^2 - 2/3*w1*w2 + 1", terms in graded lex order.
std::string to_string(const Polynomial& p);
/// Inverse of to_string; also accepts whitespace between factors.
Polynomial parse_polynomial(std::string_view text, int nvars);

/// Exact quotient u / form, where form is linear in the omegas. Throws
/// ConsistencyError if the remainder is nonzero.
Polynomial divide_by_linear(const Polynomial& u, const std::vector<int>& form);

/// The ring automorphism induced by s_i: omega_i -> omega_i - alpha_i.
Polynomial simple_reflect(const RootSystem& sys, int i, const Polynomial& u);
Polynomial weyl_act(const WeylElement& w, const Polynomial& u);

/// (u - s_i u) / alpha_i by direct subtraction and exact division.
Polynomial divided_difference(const RootSystem& sys, int i, const Polynomial& u);
/// Delta_{i1} o ... o Delta_{ik}: the last letter is applied first.
Polynomial divided_difference_word(const RootSystem& sys, const std::vector<int>& word, const Polynomial& u);

/// Product of all positive roots written in the omegas.
Polynomial positive_root_product(const RootSystem& sys);

/// Fast divided differences. Since s_i fixes omega_j for j != i,
/// Delta_i(m * omega_i^k) = m * Delta_i(omega_i^k); the quotients
/// Delta_i(omega_i^k) are tabulated once (by exact division) and reused.
class DividedDifferenceEngine {
 public:
  explicit DividedDifferenceEngine(RootSystemPtr system);

  const RootSystemPtr& system() const { return system_; }
  Polynomial apply(int i, const Polynomial& u) const;
  Polynomial apply_word(const std::vector<int>& word, const Polynomial& u) const;

 private:
  /// Copies of Delta_i(omega_i^k) for k = 0..max_k.
  std::vector<Polynomial> quotients(int i, int max_k) const;

  RootSystemPtr system_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<Polynomial>> table_;  // table_[i][k] = Delta_i(omega_i^k)
};

}  // namespace chowkit
