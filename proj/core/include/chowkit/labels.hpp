#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chowkit/chow.hpp"

namespace chowkit {

/// A multiplication-table row kept as names, before the names are bound to
/// basis classes.
struct SymbolicRow {
  std::string lhs;
  std::string rhs;
  std::vector<std::pair<Coeff, std::string>> product;
};

/// Reads "a * b = c" lines. An optional leading word that is not followed
/// by '*' (e.g. a ring tag "X1") is returned in `tag`.
struct SymbolicTable {
  std::vector<std::string> tags;
  std::vector<SymbolicRow> rows;
};
SymbolicTable parse_symbolic_table(std::string_view text);

/// Names "1", "<letter>1^s" and, in codimensions of rank two, "<letter>2^s".
/// Every assignment of the two names in rank-two codimensions is tried; the
/// unique one reproducing every row of `table` is returned. Throws
/// FixtureError when no assignment or more than one fits.
std::vector<std::string> solve_labels(const ChowRing& ring, std::string_view letter, const SymbolicTable& table);

/// "<ring> <codim> <label> <reduced word of the minimal representative>" lines.
std::string format_label_fixture(const ChowRing& ring, std::string_view ring_name);
/// Throws FixtureError unless the rows tagged `ring_name` in `fixture` agree
/// with the labels currently set on `ring`.
void check_label_fixture(const ChowRing& ring, std::string_view ring_name, std::string_view fixture);

}  // namespace chowkit
