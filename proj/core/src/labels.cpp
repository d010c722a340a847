#include "chowkit/labels.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chowkit/error.hpp"
#include "lexer.hpp"

namespace chowkit {

namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(line);
  }
  return out;
}

bool is_name(const detail::Token& t) { return t.kind == detail::Token::Ident || t.kind == detail::Token::Bracket; }

}  // namespace

SymbolicTable parse_symbolic_table(std::string_view text) {
  using detail::Token;
  SymbolicTable table;
  for (std::string_view line : content_lines(text)) {
    detail::TokenStream ts(line);
    std::string tag;
    if (is_name(ts.peek()) && !ts.peek(1).is('*')) tag = ts.next().text;
    SymbolicRow row;
    Token a = ts.next();
    ts.expect('*');
    Token b = ts.next();
    ts.expect('=');
    if (!is_name(a) || !is_name(b)) throw ParseError("table row needs class names: " + std::string(line));
    row.lhs = a.text;
    row.rhs = b.text;
    bool first = true;
    while (!ts.at_end()) {
      Coeff sign = 1;
      if (ts.accept('-')) {
        sign = -1;
      } else if (!ts.accept('+') && !first) {
        throw ParseError("expected '+' or '-' in: " + std::string(line));
      }
      first = false;
      Coeff c = 1;
      if (ts.peek().kind == Token::Int) {
        c = ts.next().value;
        ts.accept('*');
      }
      if (is_name(ts.peek())) {
        row.product.emplace_back(sign * c, ts.next().text);
      } else {
        row.product.emplace_back(sign * c, "1");
      }
    }
    table.tags.push_back(tag);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> solve_labels(const ChowRing& ring, std::string_view letter, const SymbolicTable& table) {
  std::vector<int> split;  // codimensions with two classes
  for (int c = 0; c <= ring.dimension(); ++c) {
    const auto n = ring.basis(c).size();
    if (n > 2) throw FixtureError("label scheme supports at most two classes per codimension");
    if (n == 2) split.push_back(c);
  }
  if (split.size() > 20) throw FixtureError("too many ambiguous codimensions");
  const std::string let(letter);

  std::vector<std::vector<std::string>> solutions;
  for (unsigned mask = 0; mask < (1u << split.size()); ++mask) {
    std::vector<std::string> labels(static_cast<std::size_t>(ring.size()));
    std::map<std::string, int, std::less<>> index;
    for (int c = 0; c <= ring.dimension(); ++c) {
      const auto& b = ring.basis(c);
      const auto pos = std::find(split.begin(), split.end(), c);
      const bool swap = pos != split.end() && ((mask >> (pos - split.begin())) & 1u);
      for (std::size_t k = 0; k < b.size(); ++k) {
        const std::size_t sub = swap ? 1 - k : k;
        std::string name = c == 0 ? "1" : let + std::to_string(sub + 1) + "^" + std::to_string(c);
        index[name] = b[k];
        labels[static_cast<std::size_t>(b[k])] = std::move(name);
      }
    }
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw FixtureError("table mentions unknown class '" + name + "'");
      return it->second;
    };
    bool ok = true;
    for (const auto& row : table.rows) {
      ChowElement expected;
      for (const auto& [c, name] : row.product) expected.add(lookup(name), c);
      if (ring.multiply_basis(lookup(row.lhs), lookup(row.rhs)) != expected) {
        ok = false;
        break;
      }
    }
    if (ok) solutions.push_back(std::move(labels));
  }
  if (solutions.empty()) throw FixtureError("no labeling of the basis reproduces the multiplication table");
  if (solutions.size() > 1) throw FixtureError("the multiplication table does not determine the labeling");
  return solutions.front();
}

std::string format_label_fixture(const ChowRing& ring, std::string_view ring_name) {
  std::ostringstream out;
  for (int k : ring.display_order()) {
    out << ring_name << ' ' << ring.codim(k) << ' ' << ring.label(k) << ' ' << ring.word(k) << '\n';
  }
  return out.str();
}

void check_label_fixture(const ChowRing& ring, std::string_view ring_name, std::string_view fixture) {
  int seen = 0;
  for (std::string_view line : content_lines(fixture)) {
    std::istringstream in{std::string(line)};
    std::string name, label;
    int codim = -1;
    in >> name >> codim >> label;
    if (name != ring_name) continue;
    std::string word, letter;
    while (in >> letter) word += (word.empty() ? "" : " ") + letter;
    ++seen;
    int k = -1;
    try {
      k = ring.find("[" + word + "]");
    } catch (const Error&) {
      throw FixtureError("label fixture: '" + word + "' is not a class of " + std::string(ring_name));
    }
    if (ring.codim(k) != codim || ring.label(k) != label) {
      throw FixtureError("label fixture: " + std::string(ring_name) + " class [" + word + "] is " + ring.label(k) +
                         " in codim " + std::to_string(ring.codim(k)) + ", fixture says " + label + " in codim " +
                         std::to_string(codim));
    }
  }
  if (seen != ring.size()) {
    throw FixtureError("label fixture lists " + std::to_string(seen) + " classes of " + std::string(ring_name) +
                       ", ring has " + std::to_string(ring.size()));
  }
}

}  // namespace chowkit
