#pragma once

#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Row Hermite normal form: the nonzero rows of the unique echelon basis of
/// the row lattice with positive pivots and reduced entries above them.
IntegerMatrix hermite_normal_form(IntegerMatrix rows);

/// Rank over Q.
int matrix_rank(const IntegerMatrix& rows);

/// Same row lattice.
bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace chowkit
