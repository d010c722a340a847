#include "chowkit/chow.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "chowkit/error.hpp"
#include "lexer.hpp"
#include "textio.hpp"

namespace chowkit {

ChowElement ChowElement::basis(int index, Coeff c) {
  ChowElement x;
  x.add(index, c);
  return x;
}

Coeff ChowElement::coefficient(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void ChowElement::add(int index, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ChowElement& ChowElement::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [k, v] : terms_) v *= c;
  }
  return *this;
}

ChowElement ChowElement::operator-() const {
  ChowElement x = *this;
  return x *= -1;
}

ChowRing::ChowRing(std::shared_ptr<const WeylGroup> group, ParabolicSubset theta)
    : group_(std::move(group)), theta_(std::move(theta)), engine_(group_->system()) {
  const WeylGroup& W = *group_;
  const int N = W.max_length();
  w_theta_ = W.longest_of(theta_);
  dimension_ = N - W.length(w_theta_);
  min_reps_ = W.minimal_reps(theta_);

  by_codim_.assign(static_cast<std::size_t>(dimension_) + 1, {});
  std::vector<SchubertClass> order;  // stable in W^Theta order
  for (ElementId v : min_reps_) {
    const ElementId rep = W.multiply(v, w_theta_);
    order.push_back({rep, v, N - W.length(rep)});
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.codim < b.codim; });
  for (const auto& cls : order) {
    const int idx = static_cast<int>(classes_.size());
    classes_.push_back(cls);
    by_codim_[static_cast<std::size_t>(cls.codim)].push_back(idx);
    index_.emplace(cls.rep, idx);
    min_index_.emplace(cls.min_rep, idx);
  }

  dual_.resize(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const ElementId partner = W.multiply(W.multiply(W.longest(), classes_[k].rep), w_theta_);
    const int j = index_of(partner);
    if (j < 0 || classes_[static_cast<std::size_t>(j)].codim + classes_[k].codim != dimension_) {
      throw ConsistencyError("duality partner outside the Schubert basis");
    }
    dual_[k] = j;
  }

  for (int node : theta_.complement(W.rank())) {
    const int j = index_of(W.right_mul(W.longest(), node));
    if (j < 0 || codim(j) != 1) throw ConsistencyError("divisor class missing from the Schubert basis");
    divisors_.emplace_back(node, j);
  }

  top_ = positive_root_product(system()) * Rational(1, static_cast<long>(W.order()));
  lifts_.emplace(W.identity(), top_);
  rebuild_display_order();
}

const std::vector<int>& ChowRing::basis(int c) const {
  if (c < 0 || c > dimension_) throw DomainError("codimension " + std::to_string(c) + " out of range");
  return by_codim_[static_cast<std::size_t>(c)];
}

std::vector<int> ChowRing::ranks() const {
  std::vector<int> out;
  for (const auto& b : by_codim_) out.push_back(static_cast<int>(b.size()));
  return out;
}

int ChowRing::index_of(ElementId w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int ChowRing::index_of_min_rep(ElementId v) const {
  auto it = min_index_.find(v);
  return it == min_index_.end() ? -1 : it->second;
}

int ChowRing::dual(int index) const { return dual_.at(static_cast<std::size_t>(index)); }

int ChowRing::divisor_index(int node) const {
  for (const auto& [n, idx] : divisors_) {
    if (n == node) return idx;
  }
  throw DomainError("node " + std::to_string(node + 1) + " does not index a divisor of this ring");
}

void ChowRing::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != classes_.size()) throw DomainError("label count does not match the basis");
  labels_ = std::move(labels);
  rebuild_display_order();
}

std::string ChowRing::label(int index) const {
  if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(index));
  if (index == unit()) return "1";
  return "[" + word(index) + "]";
}

int ChowRing::find(std::string_view name) const {
  if (name.empty()) throw ParseError("empty class name");
  if (name.front() == '[') {
    if (name.back() != ']') throw ParseError("unterminated class name");
    auto inner = name.substr(1, name.size() - 2);
    const auto word = (inner == "e" || inner.empty()) ? std::vector<int>{} : parse_word(inner, group_->rank());
    const int j = index_of_min_rep(group_->id_of(from_word(group_->system(), word)));
    if (j < 0) throw ParseError("'" + std::string(name) + "' is not a Schubert class of this ring");
    return j;
  }
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == name) return static_cast<int>(k);
  }
  if (name == "1") return unit();
  throw ParseError("unknown class '" + std::string(name) + "'");
}

void ChowRing::rebuild_display_order() {
  display_order_.resize(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) display_order_[k] = static_cast<int>(k);
  if (labels_.empty()) return;
  std::stable_sort(display_order_.begin(), display_order_.end(), [this](int a, int b) {
    if (codim(a) != codim(b)) return codim(a) < codim(b);
    return labels_[static_cast<std::size_t>(a)] < labels_[static_cast<std::size_t>(b)];
  });
}

int ChowRing::codim_of(const ChowElement& x) const {
  int c = -1;
  for (const auto& [k, v] : x.terms()) {
    const int ck = codim(k);
    if (c >= 0 && ck != c) throw DomainError("element is not homogeneous");
    c = ck;
  }
  return c;
}

Coeff ChowRing::degree(const ChowElement& x) const { return x.coefficient(point()); }

Coeff ChowRing::duality_pair(const ChowElement& x, const ChowElement& y) const {
  const int cx = codim_of(x);
  const int cy = codim_of(y);
  if (cx < 0 || cy < 0) return 0;
  if (cx + cy != dimension_) throw DomainError("duality pairing needs complementary codimensions");
  Coeff total = 0;
  for (const auto& [k, c] : x.terms()) total += c * y.coefficient(dual(k));
  return total;
}

ChowElement ChowRing::chevalley_mult(int alpha, const ChowElement& x) const {
  if (alpha < 0 || alpha >= group_->rank()) throw DomainError("node index out of range");
  if (theta_.contains(alpha)) throw DomainError("node " + std::to_string(alpha + 1) + " lies in Theta");
  const WeylGroup& W = *group_;
  const RootSystem& sys = system();
  const Weight omega = Weight::fundamental(sys.rank(), alpha);
  const auto& roots = sys.positive_roots();
  ChowElement out;
  for (const auto& [k, c] : x.terms()) {
    const ElementId w = classes_[static_cast<std::size_t>(k)].rep;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const ElementId ws = W.multiply(w, W.reflection(r));
      if (W.length(ws) != W.length(w) - 1) continue;
      const int pairing = sys.coroot_pairing(roots[r], omega);
      if (pairing == 0) continue;
      const int j = index_of(ws);
      if (j < 0) throw ConsistencyError("Chevalley product leaves the parabolic subring at " + W.format(ws));
      out.add(j, c * pairing);
    }
  }
  return out;
}

Polynomial ChowRing::giambelli_lift(int index) const { return lift_element(schubert_class(index).rep); }

Polynomial ChowRing::lift_element(ElementId w) const {
  std::lock_guard lock(lift_mutex_);
  if (auto it = lifts_.find(w); it != lifts_.end()) return it->second;
  // Walk down the deterministic reduced word to the longest memoized prefix.
  const auto& word = group_->word(w);
  std::vector<ElementId> chain;
  ElementId cur = w;
  std::size_t depth = word.size();
  while (!lifts_.contains(cur)) {
    chain.push_back(cur);
    cur = group_->right_mul(cur, word[depth - 1]);
    --depth;
  }
  Polynomial p = lifts_.at(cur);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    p = engine_.apply(word[depth], p);
    ++depth;
    lifts_.emplace(*it, p);
  }
  return p;
}

ChowElement ChowRing::c_map(const Polynomial& u, CMapMode mode) const {
  if (u.nvars() != group_->rank()) throw DomainError("c_map: polynomial has wrong variable count");
  if (!u.is_homogeneous()) throw DomainError("c_map: polynomial is not homogeneous");
  ChowElement out;
  if (u.is_zero()) return out;
  const int k = u.degree();
  const WeylGroup& W = *group_;
  if (k > W.max_length()) return out;

  std::vector<ElementId> domain;
  if (mode == CMapMode::Parabolic) {
    for (ElementId v : min_reps_) {
      if (W.length(v) <= k) domain.push_back(v);
    }
  } else {
    for (ElementId v = 0; v < W.order() && W.length(v) <= k; ++v) domain.push_back(v);
  }
  // Delta_w = Delta_i o Delta_{s_i w} for a left descent i; the domain is
  // closed under this step and sorted by length.
  std::unordered_map<ElementId, Polynomial> values;
  values.emplace(W.identity(), u);
  for (ElementId v : domain) {
    if (v == W.identity()) continue;
    int i = 0;
    while (!W.element(v).has_left_descent(i)) ++i;
    auto parent = values.find(W.left_mul(v, i));
    if (parent == values.end() || parent->second.is_zero()) continue;
    Polynomial value = engine_.apply(i, parent->second);
    if (!value.is_zero()) values.emplace(v, std::move(value));
  }
  for (ElementId v : domain) {
    if (W.length(v) != k) continue;
    auto it = values.find(v);
    if (it == values.end()) continue;
    const Polynomial& value = it->second;
    if (!value.is_constant()) throw ConsistencyError("c_map: Delta_w(u) is not a constant");
    const Rational q = value.constant_term();
    if (q.get_den() != 1) {
      throw LatticeError("c_map: coefficient " + q.get_str() + " is not in the image lattice");
    }
    const ElementId target = W.multiply(W.longest(), v);
    const int j = index_of(target);
    if (j < 0) throw ConsistencyError("c_map: class " + W.format(target) + " lies outside the parabolic subring");
    if (!q.get_num().fits_slong_p()) throw LatticeError("c_map: coefficient overflow");
    out.add(j, q.get_num().get_si());
  }
  return out;
}

ChowElement ChowRing::compute_product(int a, int b) const {
  ChowElement result;
  const int ca = codim(a);
  const int cb = codim(b);
  if (ca + cb > dimension_) return result;
  result = c_map(giambelli_lift(a) * giambelli_lift(b));

  auto check_divisor = [&](int div, int other) {
    for (const auto& [node, idx] : divisors_) {
      if (idx != div) continue;
      if (chevalley_mult(node, ChowElement::basis(other)) != result) {
        throw ConsistencyError("Giambelli product " + label(a) + " * " + label(b) + " disagrees with Chevalley");
      }
    }
  };
  if (cb == 1) check_divisor(b, a);
  if (ca == 1) check_divisor(a, b);
  if (ca + cb == dimension_) {
    const Coeff expected = duality_pair(ChowElement::basis(a), ChowElement::basis(b));
    if (result != ChowElement::basis(point(), expected)) {
      throw ConsistencyError("Giambelli product " + label(a) + " * " + label(b) + " disagrees with duality");
    }
  }
  return result;
}

ChowElement ChowRing::multiply_basis(int a, int b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw DomainError("basis index out of range");
  const auto key = std::minmax(a, b);
  {
    std::lock_guard lock(product_mutex_);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
  }
  ChowElement result = compute_product(key.first, key.second);
  std::lock_guard lock(product_mutex_);
  products_.emplace(key, result);
  return result;
}

ChowElement ChowRing::multiply(const ChowElement& x, const ChowElement& y) const {
  ChowElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (codim(a) + codim(b) > dimension_) continue;
      out += (ca * cb) * multiply_basis(a, b);
    }
  }
  return out;
}

ChowElement ChowRing::power(const ChowElement& x, int k) const {
  if (k < 0) throw DomainError("negative power");
  ChowElement out = ChowElement::basis(unit());
  for (int j = 0; j < k; ++j) out = multiply(out, x);
  return out;
}

void ChowRing::precompute(int jobs) const {
  for (int k = 0; k < size(); ++k) giambelli_lift(k);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < size(); ++a) {
    for (int b = a; b < size(); ++b) {
      if (codim(a) + codim(b) <= dimension_) pairs.emplace_back(a, b);
    }
  }
  if (jobs <= 1) {
    for (const auto& [a, b] : pairs) multiply_basis(a, b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t k = next++; k < pairs.size(); k = next++) multiply_basis(pairs[k].first, pairs[k].second);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string ChowRing::format(const ChowElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k : display_order_) {
    const Coeff c = x.coefficient(k);
    if (c == 0) continue;
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string name = label(k);
    if (k == unit() && name == "1") {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += name;
    }
  }
  return out;
}

namespace detail {

bool is_class_token(const Token& t) {
  return t.kind == Token::Bracket || (t.kind == Token::Ident && t.text != "x" && t.text != "eps");
}

ChowElement parse_atom(const ChowRing& ring, TokenStream& ts) {
  Coeff c = 1;
  if (ts.peek().kind == Token::Int) {
    c = ts.next().value;
    if (!ts.peek().is('*') && !is_class_token(ts.peek())) return ChowElement::basis(ring.unit(), c);
    ts.accept('*');
  }
  const Token t = ts.next();
  if (!is_class_token(t)) throw ParseError("expected a class name near '" + t.text + "'");
  return ChowElement::basis(ring.find(t.text), c);
}

ChowElement parse_element(const ChowRing& ring, TokenStream& ts) {
  ChowElement out;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (ts.accept('-')) {
      sign = -1;
    } else if (!ts.accept('+') && !first) {
      break;
    }
    first = false;
    out += sign * parse_atom(ring, ts);
  }
  return out;
}

ChowElement parse_side(const ChowRing& ring, TokenStream& ts) {
  if (ts.accept('(')) {
    ChowElement x = parse_element(ring, ts);
    ts.expect(')');
    return x;
  }
  return parse_atom(ring, ts);
}

}  // namespace detail

ChowElement ChowRing::parse(std::string_view text) const {
  detail::TokenStream ts(text);
  if (ts.at_end()) throw ParseError("empty element");
  if (ts.peek().kind == detail::Token::Int && ts.peek().value == 0 && ts.peek(1).kind == detail::Token::End) {
    return {};
  }
  ChowElement x = detail::parse_element(*this, ts);
  if (!ts.at_end()) throw ParseError("trailing input near '" + ts.peek().text + "'");
  return x;
}

std::vector<TableRow> pieri_table(const ChowRing& ring, std::optional<int> node) {
  if (ring.divisors().empty()) throw DomainError("ring has no divisor classes");
  const int h = node ? ring.divisor_index(*node) : ring.divisors().front().second;
  std::vector<TableRow> rows;
  for (int k : ring.display_order()) {
    const int c = ring.codim(k);
    if (c == 0 || c == ring.dimension()) continue;
    rows.push_back({h, k, ring.multiply_basis(h, k)});
  }
  return rows;
}

std::string table_text(const ChowRing& ring, const std::vector<TableRow>& rows) {
  std::vector<std::string> lhs;
  std::size_t width = 0;
  for (const auto& row : rows) {
    lhs.push_back(ring.label(row.lhs) + " * " + ring.label(row.rhs));
    width = std::max(width, lhs.back().size());
  }
  std::string out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out += lhs[k] + std::string(width - lhs[k].size(), ' ') + " = " + ring.format(rows[k].product) + "\n";
  }
  return out;
}

static nlohmann::json element_to_json(const ChowRing& ring, const ChowElement& x) {
  auto arr = nlohmann::json::array();
  for (int k : ring.display_order()) {
    const Coeff c = x.coefficient(k);
    if (c != 0) arr.push_back({{"class", ring.label(k)}, {"coeff", c}});
  }
  return arr;
}

std::string table_json(const ChowRing& ring, const std::vector<TableRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"lhs", ring.label(row.lhs)}, {"rhs", ring.label(row.rhs)}, {"product", element_to_json(ring, row.product)}});
  }
  return arr.dump(2);
}

std::string element_json(const ChowRing& ring, const ChowElement& x) { return element_to_json(ring, x).dump(2); }

std::vector<TableRow> parse_table(const ChowRing& ring, std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      detail::TokenStream ts(line);
      const auto a = ts.next();
      ts.expect('*');
      const auto b = ts.next();
      ts.expect('=');
      if (!detail::is_class_token(a) || !detail::is_class_token(b)) throw ParseError("expected class names");
      ChowElement product = detail::parse_element(ring, ts);
      if (!ts.at_end()) throw ParseError("trailing input near '" + ts.peek().text + "'");
      rows.push_back({ring.find(a.text), ring.find(b.text), std::move(product)});
    } catch (const ParseError& e) {
      throw ParseError("table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace chowkit
