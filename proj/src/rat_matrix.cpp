#include "horikawa/rat_matrix.hpp"

#include <utility>

#include "horikawa/errors.hpp"

namespace horikawa {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "matrix requires rows >= 0 and cols >= 0");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

int RatMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row, then run Bareiss: all divisions below are
  // exact, so the elimination stays in Int.
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Int lcm = 1;
    for (int j = 0; j < cols_; ++j) {
      const Int den = denominator(at(i, j));
      lcm = lcm / gcd(lcm, den) * den;
    }
    m[i].resize(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
      m[i][j] = numerator(at(i, j)) * (lcm / denominator(at(i, j)));
  }

  int rank = 0;
  Int prev_pivot = 1;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot_row = -1;
    for (int i = rank; i < rows_; ++i)
      if (m[i][col] != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot_row)]);
    const Int pivot = m[rank][col];
    for (int i = rank + 1; i < rows_; ++i) {
      for (int j = col + 1; j < cols_; ++j)
        m[i][j] = (pivot * m[i][j] - m[i][col] * m[rank][j]) / prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

Rref rref(const RatMatrix& m) {
  Rref r{m, {}};
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot_row = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (r.mat.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(r.mat.at(lead, j), r.mat.at(pivot_row, j));
    const Rational pivot = r.mat.at(lead, col);
    for (int j = 0; j < m.cols(); ++j) r.mat.at(lead, j) /= pivot;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || r.mat.at(i, col) == 0) continue;
      const Rational factor = r.mat.at(i, col);
      for (int j = 0; j < m.cols(); ++j) r.mat.at(i, j) -= factor * r.mat.at(lead, j);
    }
    r.pivot_cols.push_back(col);
    ++lead;
  }
  return r;
}

bool in_row_span(const Rref& r, const std::vector<Rational>& v) {
  check_internal(static_cast<int>(v.size()) == r.mat.cols(), "span test needs matching width");
  std::vector<Rational> w = v;
  for (int p = 0; p < r.rank(); ++p) {
    int col = r.pivot_cols[static_cast<std::size_t>(p)];
    const Rational factor = w[static_cast<std::size_t>(col)];
    if (factor == 0) continue;
    for (int j = 0; j < r.mat.cols(); ++j) w[static_cast<std::size_t>(j)] -= factor * r.mat.at(p, j);
  }
  for (const Rational& c : w)
    if (c != 0) return false;
  return true;
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
  Rref r = rref(*this);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (int p = 0; p < r.rank(); ++p)
      v[static_cast<std::size_t>(r.pivot_cols[static_cast<std::size_t>(p)])] =
          -r.mat.at(p, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

}  // namespace horikawa
