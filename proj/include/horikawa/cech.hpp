#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "horikawa/binary_form.hpp"
#include "horikawa/rat_matrix.hpp"

namespace horikawa {

// Cech H^1 of O(6 sigma_inf + 2a Gamma) on F_m for the covering by the two
// chart neighbourhoods: two Laurent windows in tau, one for the xi^0 summand
// and one for the xi^1 summand. A window holds the exponents [low, -1] and
// is empty when low > -1.
struct H1Model {
  int m = 0;
  long long a = 0;
  long long window0_low = 0;  // 2a - 6m + 1
  long long window1_low = 0;  // 2a - 5m + 1

  long long dim0() const { return window0_low <= -1 ? -window0_low : 0; }
  long long dim1() const { return window1_low <= -1 ? -window1_low : 0; }
  long long dim() const { return dim0() + dim1(); }
  std::vector<long long> window0() const;  // exponents, descending from -1
  std::vector<long long> window1() const;
};

// Needs 2a > 4m+4; the total dimension matches the line-bundle h^1.
H1Model h1_linebundle_model(int m, long long a);

// The classes tau^{-1} d/dxi, ..., tau^{-(m-1)} d/dxi, obtained by reducing
// the sections over the chart overlap modulo the two chart section modules.
// Empty for m <= 1.
std::vector<long long> tangent_h1_basis(int m);

// Local equation of the branch curve on the chart V_0:
// g0 + g1 xi + ... + g6 xi^6, with deg g_i = 2a - (6-i) m and every nonzero
// g_i normalized to have nonzero constant term in tau (all zeros visible on
// the chart overlap).
class BranchEquation {
 public:
  BranchEquation(int m, long long a, std::array<BinaryForm, 7> g);

  int m() const { return m_; }
  long long a() const { return a_; }
  const BinaryForm& g(int i) const { return g_[static_cast<std::size_t>(i)]; }
  int xi_order() const { return xi_order_; }  // min { i : g_i != 0 }

  static long long coefficient_degree(int m, long long a, int i) {
    return 2 * a - (6 - static_cast<long long>(i)) * m;
  }

 private:
  int m_;
  long long a_;
  std::array<BinaryForm, 7> g_;
  int xi_order_;
};

// Seeded branch equation with small random coefficients; the xi-order is
// forced to the requested value.
BranchEquation random_branch_equation(int m, long long a, int xi_order, SmallRng& rng);

// Matrix of alpha: H^1(T_W) -> H^1(O_B(B)) in the explicit bases. Column i
// (i = 1..m-1) is the projection of g_k tau^{-i} (times 2 when k = 2) onto
// the window of the xi^{k-1} summand; exponents outside the window truncate
// to zero. Rows are indexed by the full H1Model basis, window0 first.
// Requires xi-order k in {1, 2}.
RatMatrix alpha_matrix(const BranchEquation& b);

// Piecewise rank predicted by the surjectivity/vanishing statements for the
// alpha map; the exact matrix is the arbiter where they conflict.
long long alpha_formula_rank(int m, long long a, int xi_order);

struct AlphaSample {
  int m = 0;
  long long a = 0;
  int xi_order = 0;
  long long exact_rank = 0;
  long long formula_rank = 0;
  long long target_dim = 0;
  bool agrees = false;
  bool boundary = false;  // 2a in {5m-1, 5m} with xi-order 2
};

struct AlphaSweepReport {
  std::uint64_t seed = 0;
  std::vector<AlphaSample> samples;
  std::vector<AlphaSample> mismatches;  // disagreements away from the boundary
  std::vector<std::string> warnings;
};

// Exact ranks for generic seeded branch equations over the given m-range and
// all admissible even 2a, compared against the piecewise predictions.
AlphaSweepReport alpha_rank_sweep(int m_min, int m_max, std::uint64_t seed);

}  // namespace horikawa
