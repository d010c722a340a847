#include "chowkit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "chowkit/error.hpp"

namespace chowkit {

IntegerMatrix hermite_normal_form(IntegerMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw DomainError("hermite_normal_form: ragged matrix");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    // Euclid on the column below pivot_row until one nonzero entry is left.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
        for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& v : rows[pivot_row]) v = -v;
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

int matrix_rank(const IntegerMatrix& rows) { return static_cast<int>(hermite_normal_form(rows).size()); }

bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

}  // namespace chowkit
