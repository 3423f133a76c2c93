#pragma once

#include <vector>

#include "horikawa/rational.hpp"

namespace horikawa {

// Dense exact rational matrix. Carries every cohomology and multiplication
// map in the project; sizes stay in the low hundreds.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMatrix transposed() const;

  // Exact rank by fraction-free (Bareiss) elimination on the
  // denominator-cleared integer matrix.
  int rank() const;

  // Nullspace basis (column vectors of length cols()), one per free column
  // of the reduced row echelon form.
  std::vector<std::vector<Rational>> nullspace() const;

  bool operator==(const RatMatrix& other) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Reduced row echelon form with its pivot columns; the workhorse behind
// span membership and cokernel bases.
struct Rref {
  RatMatrix mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(const RatMatrix& m);

// Is v in the row space described by r?
bool in_row_span(const Rref& r, const std::vector<Rational>& v);

}  // namespace horikawa
