#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "chowkit/chow.hpp"

namespace chowkit {

using RingPtr = std::shared_ptr<const ChowRing>;

/// An element of CH(X x Y) = CH(X) (x) CH(Y), stored on pairs of basis
/// classes (f, g) meaning f x g.
class Correspondence {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Coeff>;

  Correspondence(RingPtr source, RingPtr target);
  /// The single product f x g, expanded bilinearly.
  static Correspondence product(RingPtr source, RingPtr target, const ChowElement& f, const ChowElement& g);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(int f, int g) const;
  void add(int f, int g, Coeff c);

  /// Total codimension of a homogeneous correspondence, -1 for zero.
  /// Throws DomainError for mixed degrees.
  int codim() const;

  Correspondence& operator+=(const Correspondence& o);
  Correspondence& operator-=(const Correspondence& o);
  Correspondence& operator*=(Coeff c);
  friend Correspondence operator+(Correspondence a, const Correspondence& b) { return a += b; }
  friend Correspondence operator-(Correspondence a, const Correspondence& b) { return a -= b; }
  friend Correspondence operator*(Coeff c, Correspondence a) { return a *= c; }
  Correspondence operator-() const;
  friend bool operator==(const Correspondence& a, const Correspondence& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Correspondence& o) const;

  RingPtr source_;
  RingPtr target_;
  Terms terms_;
};

/// beta o alpha for alpha on X x Y and beta on Y x Z:
/// (f_b x g_b) o (f_a x g_a) = deg(g_a * f_b) (f_a x g_b).
Correspondence compose(const Correspondence& beta, const Correspondence& alpha);
Correspondence transpose(const Correspondence& alpha);
/// sum over basis classes of [X_w] x (its Poincare dual).
Correspondence diagonal(const RingPtr& ring);
/// Cup product on X x Y: (f x g)(f' x g') = ff' x gg'.
Correspondence intersect(const Correspondence& a, const Correspondence& b);

/// Coefficients reduced to (-m/2, m/2]; m = 0 leaves them alone.
Correspondence mod_reduce(const Correspondence& alpha, int m);
bool congruent(const Correspondence& a, const Correspondence& b, int m);

/// p o p == p (mod m). Throws DomainError unless p is square of total codim dim X.
bool is_idempotent(const Correspondence& p, int m = 0);
/// p o q == 0 and q o p == 0 (mod m).
bool are_orthogonal(const Correspondence& p, const Correspondence& q, int m = 0);

/// Pullback action p^*: CH(Y) -> CH(X), x -> sum c deg(x g) f. For an
/// idempotent p on X its image is the realization of (X, p).
ChowElement realize(const Correspondence& p, const ChowElement& x);
/// Pushforward action p_*: CH(X) -> CH(Y), x -> sum c deg(x f) g.
ChowElement pushforward(const Correspondence& p, const ChowElement& x);
/// Rank of the image of realize(p, .) restricted to codimension c of the
/// source of p^*.
int realization_rank(const Correspondence& p, int c);

/// Terms grouped by first factor: "1 x h1^15 + h1^4 x (h1^11 + h2^11)".
std::string format(const Correspondence& alpha);
/// Sum of "[scalar] left x right" terms; each side is a class, an integer
/// multiple of the unit or a parenthesised sum. The scalar may contain
/// "eps", which requires `eps`. Throws ParseError.
Correspondence parse_correspondence(const RingPtr& source, const RingPtr& target, std::string_view text,
                                    std::optional<int> eps = std::nullopt);
/// [{f, g, coeff}]
std::string to_json(const Correspondence& alpha);

}  // namespace chowkit
