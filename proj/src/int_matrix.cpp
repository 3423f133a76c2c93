#include "horikawa/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "horikawa/errors.hpp"

namespace horikawa {

std::string IntMatrix2xN::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < 2; ++r) {
    out << (r == 0 ? "[ " : "  ");
    for (int j = 0; j < cols(); ++j) out << cols_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] << (j + 1 < cols() ? " " : "");
    out << (r == 0 ? "\n" : " ]");
  }
  return out.str();
}

namespace {

long long det2(const std::array<long long, 2>& u, const std::array<long long, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

}  // namespace

bool gl2z_equivalent(const IntMatrix2xN& a, const IntMatrix2xN& b) {
  if (a.cols() != b.cols()) return false;
  const int n = a.cols();

  // Rank-2 column pair of A.
  int ci = -1, cj = -1;
  for (int i = 0; i < n && ci < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (det2(a.col(i), a.col(j)) != 0) {
        ci = i;
        cj = j;
        break;
      }
  require(ci >= 0, "GL2(Z) comparison requires column rank 2 over Q");
  const long long det_a = det2(a.col(ci), a.col(cj));

  // perm[k] = index of the A-column placed at position k.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int ki = -1, kj = -1;
    for (int k = 0; k < n; ++k) {
      if (perm[static_cast<std::size_t>(k)] == ci) ki = k;
      if (perm[static_cast<std::size_t>(k)] == cj) kj = k;
    }
    // Solve U * [A_ci A_cj] = [B_ki B_kj]:  U = [B_ki B_kj] * adj / det.
    const auto& u0 = b.col(ki);
    const auto& v0 = b.col(kj);
    long long num[2][2] = {{u0[0] * a.col(cj)[1] - v0[0] * a.col(ci)[1],
                            v0[0] * a.col(ci)[0] - u0[0] * a.col(cj)[0]},
                           {u0[1] * a.col(cj)[1] - v0[1] * a.col(ci)[1],
                            v0[1] * a.col(ci)[0] - u0[1] * a.col(cj)[0]}};
    bool integral = true;
    long long u[2][2];
    for (int r = 0; r < 2 && integral; ++r)
      for (int c = 0; c < 2 && integral; ++c) {
        if (num[r][c] % det_a != 0) integral = false;
        else u[r][c] = num[r][c] / det_a;
      }
    if (!integral) continue;
    long long det_u = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    if (det_u != 1 && det_u != -1) continue;
    bool all_match = true;
    for (int k = 0; k < n && all_match; ++k) {
      const auto& src = a.col(perm[static_cast<std::size_t>(k)]);
      const auto& dst = b.col(k);
      if (u[0][0] * src[0] + u[0][1] * src[1] != dst[0] ||
          u[1][0] * src[0] + u[1][1] * src[1] != dst[1])
        all_match = false;
    }
    if (all_match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace horikawa
