#pragma once

#include <array>
#include <string>
#include <vector>

namespace horikawa {

// 2 x N integer matrix, stored by columns. Holds the degree rows of Cox-ring
// weight matrices, so N <= 6 and the entries are small.
class IntMatrix2xN {
 public:
  IntMatrix2xN() = default;
  explicit IntMatrix2xN(std::vector<std::array<long long, 2>> cols) : cols_(std::move(cols)) {}

  int cols() const { return static_cast<int>(cols_.size()); }
  const std::array<long long, 2>& col(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  void push_col(long long top, long long bottom) { cols_.push_back({top, bottom}); }

  bool operator==(const IntMatrix2xN& other) const { return cols_ == other.cols_; }

  std::string to_string() const;

 private:
  std::vector<std::array<long long, 2>> cols_;
};

// True iff U * A * P = B for some U in GL2(Z) and column permutation P.
// Decided by enumerating column permutations (N <= 6), solving for U on a
// rank-2 column pair of A, and verifying. Throws domain_error if A has
// column rank < 2 over Q.
bool gl2z_equivalent(const IntMatrix2xN& a, const IntMatrix2xN& b);

}  // namespace horikawa
