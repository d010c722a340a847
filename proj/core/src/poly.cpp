#include "chowkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "chowkit/error.hpp"

namespace chowkit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  const auto slash = s.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    return b > a && std::all_of(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(b),
                                [](unsigned char c) { return std::isdigit(c); });
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits(start, num_end) || (slash != std::string::npos && !digits(slash + 1, s.size()))) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw DomainError("polynomial: unsupported number of variables");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DomainError("polynomial: variable index out of range");
  Polynomial p(nvars);
  Monomial m;
  m.exps[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

Polynomial Polynomial::linear(const std::vector<int>& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Monomial m;
    m.exps[j] = 1;
    p.add_term(m, Rational(coeffs[j]));
  }
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::ranges::all_of(terms_, [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomial: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomial: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomial: variable count mismatch");
  Polynomial out(a.nvars_);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] = static_cast<std::uint8_t>(ma.exps[k] + mb.exps[k]);
      prod = ca * cb;
      out.add_term(m, prod);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw DomainError("polynomial: negative power");
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int k = 0; k < p.nvars(); ++k) {
      const int e = m.exps[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'w' + std::to_string(k + 1);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, int nvars) {
  Polynomial p(nvars);
  std::string s(text);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (pos == s.size()) throw ParseError("empty polynomial");
  bool expect_term = true;
  while (pos < s.size()) {
    int sign = 1;
    skip();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!expect_term) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
    }
    expect_term = false;
    Rational coef(sign);
    Monomial mono;
    bool any_factor = false;
    for (;;) {
      skip();
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') break;
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (s[pos] == 'w') {
        std::size_t end = ++pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw ParseError("variable without index");
        const int var = std::stoi(s.substr(pos, end - pos));
        if (var < 1 || var > nvars) throw ParseError("variable w" + std::to_string(var) + " out of range");
        pos = end;
        int e = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip();
          end = pos;
          while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
          if (end == pos) throw ParseError("missing exponent");
          e = std::stoi(s.substr(pos, end - pos));
          pos = end;
        }
        auto& slot = mono.exps[static_cast<std::size_t>(var - 1)];
        if (slot + e > 255) throw ParseError("exponent too large");
        slot = static_cast<std::uint8_t>(slot + e);
      } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t end = pos;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
        coef *= parse_rational(s.substr(pos, end - pos));
        pos = end;
      } else {
        throw ParseError(std::string("unexpected character '") + s[pos] + "' in polynomial");
      }
      any_factor = true;
    }
    if (!any_factor) throw ParseError("empty term in polynomial");
    p.add_term(mono, coef);
  }
  return p;
}

Polynomial divide_by_linear(const Polynomial& u, const std::vector<int>& form) {
  if (static_cast<int>(form.size()) != u.nvars()) throw DomainError("divide_by_linear: variable count mismatch");
  int pivot = -1;
  for (std::size_t j = 0; j < form.size(); ++j) {
    if (form[j] != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) throw DomainError("divide_by_linear: zero divisor");
  const auto pv = static_cast<std::size_t>(pivot);
  // Long division in the pivot variable; the leading coefficient is a constant.
  Polynomial rest = u;
  Polynomial quotient(u.nvars());
  while (!rest.is_zero()) {
    auto lead = std::max_element(rest.terms().begin(), rest.terms().end(), [pv](const auto& a, const auto& b) {
      return a.first.exps[pv] < b.first.exps[pv];
    });
    if (lead->first.exps[pv] == 0) {
      throw ConsistencyError("divide_by_linear: nonzero remainder " + to_string(rest));
    }
    Monomial qm = lead->first;
    --qm.exps[pv];
    Rational qc = lead->second / form[pv];
    quotient.add_term(qm, qc);
    for (std::size_t j = 0; j < form.size(); ++j) {
      if (form[j] == 0) continue;
      Monomial m = qm;
      ++m.exps[j];
      rest.add_term(m, -qc * form[j]);
    }
  }
  return quotient;
}

Polynomial simple_reflect(const RootSystem& sys, int i, const Polynomial& u) {
  if (i < 0 || i >= sys.rank()) throw DomainError("simple_reflect: node index out of range");
  if (u.nvars() != sys.rank()) throw DomainError("simple_reflect: polynomial has wrong variable count");
  // omega_i -> omega_i - alpha_i, everything else fixed.
  std::vector<int> image = Weight::fundamental(sys.rank(), i).coords;
  const auto alpha = sys.to_weight(sys.simple_root(i)).coords;
  for (std::size_t j = 0; j < image.size(); ++j) image[j] -= alpha[j];
  const Polynomial sub = Polynomial::linear(image);
  std::vector<Polynomial> powers{Polynomial::constant(u.nvars(), Rational(1))};
  Polynomial out(u.nvars());
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& [m, c] : u.terms()) {
    const int k = m.exps[ui];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * sub);
    Monomial rest = m;
    rest.exps[ui] = 0;
    for (const auto& [pm, pc] : powers[static_cast<std::size_t>(k)].terms()) {
      Monomial t = rest;
      for (std::size_t q = 0; q < t.exps.size(); ++q) t.exps[q] = static_cast<std::uint8_t>(t.exps[q] + pm.exps[q]);
      out.add_term(t, c * pc);
    }
  }
  return out;
}

Polynomial weyl_act(const WeylElement& w, const Polynomial& u) {
  const auto word = reduced_word(w);
  Polynomial out = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflect(*w.system(), *it, out);
  return out;
}

Polynomial divided_difference(const RootSystem& sys, int i, const Polynomial& u) {
  Polynomial diff = u - simple_reflect(sys, i, u);
  if (diff.is_zero()) return diff;
  return divide_by_linear(diff, sys.to_weight(sys.simple_root(i)).coords);
}

Polynomial divided_difference_word(const RootSystem& sys, const std::vector<int>& word, const Polynomial& u) {
  Polynomial out = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(sys, *it, out);
  return out;
}

Polynomial positive_root_product(const RootSystem& sys) {
  Polynomial d = Polynomial::constant(sys.rank(), Rational(1));
  for (const auto& beta : sys.positive_roots()) d = d * Polynomial::linear(sys.to_weight(beta).coords);
  return d;
}

DividedDifferenceEngine::DividedDifferenceEngine(RootSystemPtr system)
    : system_(std::move(system)), table_(static_cast<std::size_t>(system_->rank())) {}

std::vector<Polynomial> DividedDifferenceEngine::quotients(int i, int max_k) const {
  std::lock_guard lock(mutex_);
  auto& row = table_[static_cast<std::size_t>(i)];
  while (static_cast<int>(row.size()) <= max_k) {
    Monomial m;
    m.exps[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(row.size());
    Polynomial mono(system_->rank());
    mono.add_term(m, Rational(1));
    row.push_back(divided_difference(*system_, i, mono));
  }
  return {row.begin(), row.begin() + max_k + 1};
}

Polynomial DividedDifferenceEngine::apply(int i, const Polynomial& u) const {
  if (i < 0 || i >= system_->rank()) throw DomainError("divided difference: node index out of range");
  if (u.nvars() != system_->rank()) throw DomainError("divided difference: polynomial has wrong variable count");
  const auto ui = static_cast<std::size_t>(i);
  int max_exp = 0;
  for (const auto& [m, c] : u.terms()) max_exp = std::max<int>(max_exp, m.exps[ui]);
  const std::vector<Polynomial> q = quotients(i, max_exp);

  Polynomial out(u.nvars());
  Rational prod;
  for (const auto& [m, c] : u.terms()) {
    const int k = m.exps[ui];
    if (k == 0) continue;
    Monomial rest = m;
    rest.exps[ui] = 0;
    for (const auto& [qm, qc] : q[static_cast<std::size_t>(k)].terms()) {
      Monomial t = rest;
      for (std::size_t v = 0; v < t.exps.size(); ++v) t.exps[v] = static_cast<std::uint8_t>(t.exps[v] + qm.exps[v]);
      prod = c * qc;
      out.add_term(t, prod);
    }
  }
  return out;
}

Polynomial DividedDifferenceEngine::apply_word(const std::vector<int>& word, const Polynomial& u) const {
  Polynomial out = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(*it, out);
  return out;
}

}  // namespace chowkit
