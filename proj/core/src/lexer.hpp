#pragma once

// Tokenizer shared by the text formats for Chow elements, tables and
// correspondences.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chowkit/error.hpp"

namespace chowkit::detail {

struct Token {
  enum Kind { Int, Ident, Bracket, Sym, End } kind = End;
  std::string text;
  std::int64_t value = 0;

  bool is(char c) const { return kind == Sym && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == Ident && text == w; }
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Token t{Token::Int, std::string(s.substr(i, j - i)), 0};
      try {
        t.value = std::stoll(t.text);
      } catch (const std::exception&) {
        throw ParseError("integer out of range: " + t.text);
      }
      out.push_back(std::move(t));
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '^')) ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), 0});
      i = j;
    } else if (c == '[') {
      const auto j = s.find(']', i);
      if (j == std::string_view::npos) throw ParseError("unterminated '['");
      out.push_back({Token::Bracket, std::string(s.substr(i, j - i + 1)), 0});
      i = j + 1;
    } else if (std::string_view("+-*()=").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), 0});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, "", 0});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const auto k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(char c) {
    if (!peek().is(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' near '" + peek().text + "'");
  }
  bool at_end() const { return peek().kind == Token::End; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace chowkit::detail
