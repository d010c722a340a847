#pragma once

// Parsing helpers for Chow elements embedded in larger expressions.

#include "chowkit/chow.hpp"
#include "lexer.hpp"

namespace chowkit::detail {

bool is_class_token(const Token& t);
/// [n] [*] name | n  (a bare integer is a multiple of the unit)
ChowElement parse_atom(const ChowRing& ring, TokenStream& ts);
/// Signed sum of atoms.
ChowElement parse_element(const ChowRing& ring, TokenStream& ts);
/// "(" element ")" | atom
ChowElement parse_side(const ChowRing& ring, TokenStream& ts);

}  // namespace chowkit::detail
