#include "chowkit/correspondence.hpp"

#include <json.hpp>

#include "chowkit/error.hpp"
#include "chowkit/linalg.hpp"
#include "lexer.hpp"
#include "textio.hpp"

namespace chowkit {

Correspondence::Correspondence(RingPtr source, RingPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw DomainError("correspondence needs two rings");
}

Correspondence Correspondence::product(RingPtr source, RingPtr target, const ChowElement& f, const ChowElement& g) {
  Correspondence out(std::move(source), std::move(target));
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) out.add(a, b, ca * cb);
  }
  return out;
}

Coeff Correspondence::coefficient(int f, int g) const {
  auto it = terms_.find({f, g});
  return it == terms_.end() ? 0 : it->second;
}

void Correspondence::add(int f, int g, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{f, g}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Correspondence::codim() const {
  int c = -1;
  for (const auto& [key, v] : terms_) {
    const int ck = source_->codim(key.first) + target_->codim(key.second);
    if (c >= 0 && c != ck) throw DomainError("correspondence is not homogeneous");
    c = ck;
  }
  return c;
}

void Correspondence::check_compatible(const Correspondence& o) const {
  if (o.source_ != source_ || o.target_ != target_) throw DomainError("correspondences live on different varieties");
}

Correspondence& Correspondence::operator+=(const Correspondence& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

Correspondence& Correspondence::operator-=(const Correspondence& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

Correspondence& Correspondence::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [key, v] : terms_) v *= c;
  }
  return *this;
}

Correspondence Correspondence::operator-() const {
  Correspondence out = *this;
  return out *= -1;
}

Correspondence compose(const Correspondence& beta, const Correspondence& alpha) {
  if (alpha.target() != beta.source()) throw DomainError("compose: middle varieties differ");
  const ChowRing& Y = *alpha.target();
  // beta's terms grouped by first factor.
  std::map<int, std::vector<std::pair<int, Coeff>>> by_first;
  for (const auto& [key, c] : beta.terms()) by_first[key.first].emplace_back(key.second, c);

  Correspondence out(alpha.source(), beta.target());
  for (const auto& [ka, ca] : alpha.terms()) {
    const int g_a = ka.second;
    for (const auto& [f_b, row] : by_first) {
      if (Y.codim(g_a) + Y.codim(f_b) != Y.dimension()) continue;
      const Coeff d = Y.degree(Y.multiply_basis(g_a, f_b));
      if (d == 0) continue;
      for (const auto& [g_b, cb] : row) out.add(ka.first, g_b, ca * cb * d);
    }
  }
  return out;
}

Correspondence transpose(const Correspondence& alpha) {
  Correspondence out(alpha.target(), alpha.source());
  for (const auto& [key, c] : alpha.terms()) out.add(key.second, key.first, c);
  return out;
}

Correspondence diagonal(const RingPtr& ring) {
  Correspondence out(ring, ring);
  for (int k = 0; k < ring->size(); ++k) out.add(k, ring->dual(k), 1);
  return out;
}

Correspondence intersect(const Correspondence& a, const Correspondence& b) {
  if (a.source() != b.source() || a.target() != b.target()) throw DomainError("intersect: different varieties");
  const ChowRing& X = *a.source();
  const ChowRing& Y = *a.target();
  Correspondence out(a.source(), a.target());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (X.codim(ka.first) + X.codim(kb.first) > X.dimension()) continue;
      if (Y.codim(ka.second) + Y.codim(kb.second) > Y.dimension()) continue;
      const ChowElement f = X.multiply_basis(ka.first, kb.first);
      const ChowElement g = Y.multiply_basis(ka.second, kb.second);
      for (const auto& [i, ci] : f.terms()) {
        for (const auto& [j, cj] : g.terms()) out.add(i, j, ca * cb * ci * cj);
      }
    }
  }
  return out;
}

Correspondence mod_reduce(const Correspondence& alpha, int m) {
  if (m < 0) throw DomainError("modulus must be non-negative");
  if (m == 0) return alpha;
  Correspondence out(alpha.source(), alpha.target());
  for (const auto& [key, c] : alpha.terms()) {
    Coeff r = ((c % m) + m) % m;
    if (2 * r > m) r -= m;
    out.add(key.first, key.second, r);
  }
  return out;
}

bool congruent(const Correspondence& a, const Correspondence& b, int m) { return mod_reduce(a - b, m).is_zero(); }

static void check_square_morphism(const Correspondence& p) {
  if (p.source() != p.target()) throw DomainError("expected a correspondence from a variety to itself");
  const int c = p.codim();
  if (c >= 0 && c != p.source()->dimension()) throw DomainError("expected a correspondence of codimension dim X");
}

bool is_idempotent(const Correspondence& p, int m) {
  check_square_morphism(p);
  return congruent(compose(p, p), p, m);
}

bool are_orthogonal(const Correspondence& p, const Correspondence& q, int m) {
  check_square_morphism(p);
  check_square_morphism(q);
  if (p.source() != q.source()) throw DomainError("are_orthogonal: different varieties");
  return mod_reduce(compose(p, q), m).is_zero() && mod_reduce(compose(q, p), m).is_zero();
}

ChowElement realize(const Correspondence& p, const ChowElement& x) {
  const ChowRing& Y = *p.target();
  ChowElement out;
  for (const auto& [key, c] : p.terms()) {
    for (const auto& [k, cx] : x.terms()) {
      if (Y.codim(k) + Y.codim(key.second) != Y.dimension()) continue;
      out.add(key.first, c * cx * Y.degree(Y.multiply_basis(k, key.second)));
    }
  }
  return out;
}

ChowElement pushforward(const Correspondence& p, const ChowElement& x) {
  const ChowRing& X = *p.source();
  ChowElement out;
  for (const auto& [key, c] : p.terms()) {
    for (const auto& [k, cx] : x.terms()) {
      if (X.codim(k) + X.codim(key.first) != X.dimension()) continue;
      out.add(key.second, c * cx * X.degree(X.multiply_basis(k, key.first)));
    }
  }
  return out;
}

int realization_rank(const Correspondence& p, int c) {
  const ChowRing& X = *p.source();
  const ChowRing& Y = *p.target();
  // p^* sends codim c of Y to codim c + (codim p - dim Y) of X.
  IntegerMatrix rows;
  for (int k = 0; k < Y.size(); ++k) {
    if (Y.codim(k) != c) continue;
    const ChowElement image = realize(p, ChowElement::basis(k));
    std::vector<Integer> row(static_cast<std::size_t>(X.size()));
    for (const auto& [j, v] : image.terms()) row[static_cast<std::size_t>(j)] = static_cast<long>(v);
    rows.push_back(std::move(row));
  }
  return matrix_rank(rows);
}

std::string format(const Correspondence& alpha) {
  if (alpha.is_zero()) return "0";
  const ChowRing& X = *alpha.source();
  const ChowRing& Y = *alpha.target();
  std::map<int, ChowElement> groups;
  for (const auto& [key, c] : alpha.terms()) groups[key.first].add(key.second, c);
  std::string out;
  bool first = true;
  for (int f : X.display_order()) {
    auto it = groups.find(f);
    if (it == groups.end()) continue;
    ChowElement g = it->second;
    // Pull the sign of the leading term (and a lone coefficient) out front.
    Coeff lead = 0;
    for (int k : Y.display_order()) {
      if ((lead = g.coefficient(k)) != 0) break;
    }
    Coeff scalar = lead < 0 ? -1 : 1;
    if (g.terms().size() == 1) scalar = lead;
    if (scalar != 1) {
      ChowElement h;
      for (const auto& [k, c] : g.terms()) h.add(k, c / scalar);
      g = h;
    }
    const Coeff mag = scalar < 0 ? -scalar : scalar;
    if (first) {
      if (scalar < 0) out += "-";
    } else {
      out += scalar < 0 ? " - " : " + ";
    }
    first = false;
    out += X.format(ChowElement::basis(f, mag));
    out += " x ";
    const std::string rhs = Y.format(g);
    out += g.terms().size() == 1 ? rhs : "(" + rhs + ")";
  }
  return out;
}

Correspondence parse_correspondence(const RingPtr& source, const RingPtr& target, std::string_view text,
                                    std::optional<int> eps) {
  using detail::Token;
  detail::TokenStream ts(text);
  Correspondence out(source, target);
  if (ts.peek().kind == Token::Int && ts.peek().value == 0 && ts.peek(1).kind == Token::End) return out;
  bool first = true;
  while (!ts.at_end()) {
    Coeff scalar = 1;
    if (ts.accept('-')) {
      scalar = -1;
    } else if (!ts.accept('+') && !first) {
      throw ParseError("expected '+' or '-' near '" + ts.peek().text + "'");
    }
    first = false;
    for (;;) {
      const Token& t = ts.peek();
      if (t.is_word("eps")) {
        if (!eps) throw ParseError("'eps' used without a value for epsilon");
        scalar *= *eps;
        ts.next();
        ts.accept('*');
        continue;
      }
      if (t.kind == Token::Int) {
        const Token& after = ts.peek(1).is('*') ? ts.peek(2) : ts.peek(1);
        if (after.is_word("eps") || after.is('(')) {
          scalar *= t.value;
          ts.next();
          ts.accept('*');
          continue;
        }
      }
      break;
    }
    const ChowElement f = detail::parse_side(*source, ts);
    if (!ts.peek().is_word("x")) throw ParseError("expected 'x' near '" + ts.peek().text + "'");
    ts.next();
    const ChowElement g = detail::parse_side(*target, ts);
    out += scalar * Correspondence::product(source, target, f, g);
  }
  return out;
}

std::string to_json(const Correspondence& alpha) {
  const ChowRing& X = *alpha.source();
  const ChowRing& Y = *alpha.target();
  auto arr = nlohmann::json::array();
  for (int f : X.display_order()) {
    for (int g : Y.display_order()) {
      const Coeff c = alpha.coefficient(f, g);
      if (c != 0) arr.push_back({{"f", X.label(f)}, {"g", Y.label(g)}, {"coeff", c}});
    }
  }
  return arr.dump(2);
}

}  // namespace chowkit
