#include "chowkit/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chowkit/error.hpp"

namespace chowkit {

ParabolicSubset::ParabolicSubset(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::ranges::sort(nodes_);
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (!nodes_.empty() && nodes_.front() < 0) throw DomainError("parabolic subset: negative node index");
}

ParabolicSubset ParabolicSubset::all(int rank) {
  std::vector<int> v(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] = i;
  return ParabolicSubset(std::move(v));
}

ParabolicSubset ParabolicSubset::omitting(int rank, int node) {
  if (node < 0 || node >= rank) throw DomainError("parabolic subset: node out of range");
  std::vector<int> v;
  for (int i = 0; i < rank; ++i) {
    if (i != node) v.push_back(i);
  }
  return ParabolicSubset(std::move(v));
}

bool ParabolicSubset::contains(int node) const { return std::ranges::binary_search(nodes_, node); }

bool ParabolicSubset::is_subset_of(const ParabolicSubset& other) const {
  return std::ranges::includes(other.nodes_, nodes_);
}

std::vector<int> ParabolicSubset::complement(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return out;
}

std::string ParabolicSubset::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(nodes_[k] + 1);
  }
  return s;
}

ParabolicSubset parse_theta(std::string_view text, int rank) {
  std::vector<int> nodes;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("malformed theta '" + std::string(text) + "'");
    } catch (const std::logic_error&) {
      throw ParseError("malformed theta '" + std::string(text) + "'");
    }
    if (v < 1 || v > rank) throw ParseError("theta node " + item + " out of range 1.." + std::to_string(rank));
    nodes.push_back(v - 1);
  }
  return ParabolicSubset(std::move(nodes));
}

namespace {

void check_theta(const RootSystem& sys, const ParabolicSubset& theta) {
  if (!theta.empty() && theta.nodes().back() >= sys.rank()) {
    throw DomainError("parabolic subset has a node outside the diagram");
  }
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr system, std::vector<Root> images)
    : system_(std::move(system)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(system_->rank())) {
    throw DomainError("WeylElement: expected one image per simple root");
  }
  for (const auto& beta : system_->positive_roots()) {
    if (apply(beta).is_negative()) ++length_;
  }
}

WeylElement WeylElement::identity(RootSystemPtr system) {
  std::vector<Root> im;
  for (int i = 0; i < system->rank(); ++i) im.push_back(system->simple_root(i));
  return WeylElement(std::move(system), std::move(im));
}

WeylElement WeylElement::simple(RootSystemPtr system, int i) {
  if (i < 0 || i >= system->rank()) throw DomainError("simple reflection: node out of range");
  std::vector<Root> im;
  for (int k = 0; k < system->rank(); ++k) im.push_back(system->reflect_root(i, system->simple_root(k)));
  return WeylElement(std::move(system), std::move(im));
}

WeylElement WeylElement::reflection(RootSystemPtr system, const Root& beta) {
  if (!system->is_root(beta)) throw DomainError("reflection: argument is not a root");
  const long bb = system->inner(beta, beta);
  std::vector<Root> im;
  for (int k = 0; k < system->rank(); ++k) {
    const Root& a = system->simple_root(k);
    const long c = 2 * system->inner(beta, a) / bb;
    Root r = a;
    for (std::size_t m = 0; m < r.coords.size(); ++m) r.coords[m] -= static_cast<int>(c) * beta.coords[m];
    im.push_back(std::move(r));
  }
  return WeylElement(std::move(system), std::move(im));
}

Root WeylElement::apply(const Root& beta) const {
  Root out{std::vector<int>(images_.size(), 0)};
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int c = beta.coords[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += c * images_[i].coords[k];
  }
  return out;
}

Weight WeylElement::act(const Weight& omega) const {
  const auto word = reduced_word(*this);
  Weight out = omega;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = system_->reflect_weight(*it, out);
  return out;
}

bool WeylElement::has_right_descent(int i) const { return images_.at(static_cast<std::size_t>(i)).is_negative(); }

bool WeylElement::has_left_descent(int i) const {
  return multiply(WeylElement::simple(system_, i), *this).length() < length_;
}

WeylElement WeylElement::inverse() const {
  auto word = reduced_word(*this);
  std::reverse(word.begin(), word.end());
  return from_word(system_, word);
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& r : w.images()) {
    for (int c : r.coords) {
      h ^= static_cast<std::size_t>(c + 1024);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  if (u.system() != v.system() && u.system()->cartan() != v.system()->cartan()) {
    throw DomainError("multiply: elements of different root systems");
  }
  std::vector<Root> im;
  im.reserve(v.images().size());
  for (const auto& r : v.images()) im.push_back(u.apply(r));
  return WeylElement(u.system(), std::move(im));
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  const auto& sys = w.system();
  while (cur.length() > 0) {
    int i = 0;
    while (!cur.has_right_descent(i)) ++i;
    word.push_back(i);
    cur = multiply(cur, WeylElement::simple(sys, i));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement from_word(const RootSystemPtr& system, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(system);
  for (int i : word) w = multiply(w, WeylElement::simple(system, i));
  return w;
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ' ';
    s += 's' + std::to_string(word[k] + 1);
  }
  return s;
}

std::vector<int> parse_word(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<int> word;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad word token '" + tok + "'");
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw ParseError("bad word token '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad word token '" + tok + "'");
    }
    if (v < 1 || v > rank) throw ParseError("word letter out of range: " + tok);
    word.push_back(v - 1);
  }
  return word;
}

WeylElement longest_element(const RootSystemPtr& system, const ParabolicSubset& theta) {
  check_theta(*system, theta);
  WeylElement w = WeylElement::identity(system);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : theta.nodes()) {
      if (!w.has_right_descent(i)) {
        w = multiply(w, WeylElement::simple(system, i));
        grew = true;
      }
    }
  }
  return w;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystemPtr& system, const ParabolicSubset& theta) {
  check_theta(*system, theta);
  // W^Theta is closed under taking reduced suffixes, so growth by left
  // multiplication from e reaches all of it.
  auto in_quotient = [&](const WeylElement& w) {
    return std::ranges::none_of(theta.nodes(), [&](int s) { return w.has_right_descent(s); });
  };
  std::vector<WeylElement> out{WeylElement::identity(system)};
  std::vector<WeylElement> level = out;
  std::vector<WeylElement> simples;
  for (int i = 0; i < system->rank(); ++i) simples.push_back(WeylElement::simple(system, i));
  while (!level.empty()) {
    std::set<WeylElement> next;
    for (const auto& w : level) {
      for (const auto& s : simples) {
        WeylElement x = multiply(s, w);
        if (x.length() == w.length() + 1 && in_quotient(x)) next.insert(std::move(x));
      }
    }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<WeylElement> maximal_coset_reps(const RootSystemPtr& system, const ParabolicSubset& theta) {
  const WeylElement w_theta = longest_element(system, theta);
  std::vector<WeylElement> out;
  for (const auto& v : minimal_coset_reps(system, theta)) out.push_back(multiply(v, w_theta));
  return out;
}

WeylGroup::WeylGroup(RootSystemPtr system, std::size_t max_order) : system_(std::move(system)) {
  const int n = system_->rank();
  std::vector<WeylElement> simples;
  for (int i = 0; i < n; ++i) simples.push_back(WeylElement::simple(system_, i));
  std::vector<WeylElement> level{WeylElement::identity(system_)};
  while (!level.empty()) {
    elements_.insert(elements_.end(), level.begin(), level.end());
    if (elements_.size() > max_order) throw DomainError("Weyl group exceeds the materialization limit");
    std::set<WeylElement> next;
    for (const auto& w : level) {
      for (const auto& s : simples) {
        WeylElement x = chowkit::multiply(w, s);
        if (x.length() == w.length() + 1) next.insert(std::move(x));
      }
    }
    level.assign(next.begin(), next.end());
  }
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], static_cast<ElementId>(k));

  right_.resize(elements_.size() * static_cast<std::size_t>(n));
  left_.resize(elements_.size() * static_cast<std::size_t>(n));
  words_.resize(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      right_[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = id_of(chowkit::multiply(elements_[k], simples[static_cast<std::size_t>(i)]));
      left_[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = id_of(chowkit::multiply(simples[static_cast<std::size_t>(i)], elements_[k]));
    }
  }
  // Words follow from the right-multiplication table: strip the smallest right descent.
  for (std::size_t k = 1; k < elements_.size(); ++k) {
    const auto id = static_cast<ElementId>(k);
    int i = 0;
    while (!elements_[k].has_right_descent(i)) ++i;
    words_[k] = words_[right_mul(id, i)];
    words_[k].push_back(i);
  }
  for (const auto& beta : system_->positive_roots()) reflections_.push_back(id_of(WeylElement::reflection(system_, beta)));
}

ElementId WeylGroup::id_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw DomainError("element does not belong to this Weyl group");
  return it->second;
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  ElementId x = a;
  for (int i : words_[b]) x = right_mul(x, i);
  return x;
}

ElementId WeylGroup::inverse(ElementId id) const {
  ElementId x = identity();
  const auto& w = words_[id];
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = right_mul(x, *it);
  return x;
}

std::vector<ElementId> WeylGroup::minimal_reps(const ParabolicSubset& theta) const {
  check_theta(*system_, theta);
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (std::ranges::none_of(theta.nodes(), [&](int s) { return elements_[k].has_right_descent(s); })) {
      out.push_back(static_cast<ElementId>(k));
    }
  }
  return out;
}

ElementId WeylGroup::longest_of(const ParabolicSubset& theta) const { return id_of(longest_element(system_, theta)); }

}  // namespace chowkit
