#include "horikawa/cech.hpp"

#include <algorithm>

#include "horikawa/errors.hpp"
#include "horikawa/hirzebruch.hpp"

namespace horikawa {

std::vector<long long> H1Model::window0() const {
  std::vector<long long> exps;
  for (long long e = -1; e >= window0_low; --e) exps.push_back(e);
  return exps;
}

std::vector<long long> H1Model::window1() const {
  std::vector<long long> exps;
  for (long long e = -1; e >= window1_low; --e) exps.push_back(e);
  return exps;
}

H1Model h1_linebundle_model(int m, long long a) {
  require(m >= 0, "requires m >= 0");
  require(2 * a > 4 * m + 4, "requires 2a > 4m+4");
  H1Model model;
  model.m = m;
  model.a = a;
  model.window0_low = 2 * a - 6LL * m + 1;
  model.window1_low = 2 * a - 5LL * m + 1;
  return model;
}

std::vector<long long> tangent_h1_basis(int m) {
  require(m >= 0, "requires m >= 0");
  // d/dxi component over the chart overlap: every tau power occurs. The
  // V-chart sections contribute the exponents >= 0 and the V'-chart sections
  // tau^{-m} times exponents <= 0, so reduce a window covering both.
  std::vector<long long> basis;
  for (long long e = -1; e >= -m; --e) {
    const bool in_v_sections = e >= 0;
    const bool in_v_prime_sections = e <= -m;
    if (!in_v_sections && !in_v_prime_sections) basis.push_back(e);
  }
  return basis;
}

BranchEquation::BranchEquation(int m, long long a, std::array<BinaryForm, 7> g)
    : m_(m), a_(a), g_(std::move(g)) {
  require(m >= 0, "requires m >= 0");
  require(2 * a > 4 * m + 4, "requires 2a > 4m+4");
  xi_order_ = -1;
  for (int i = 0; i <= 6; ++i) {
    const BinaryForm& gi = g_[static_cast<std::size_t>(i)];
    if (gi.is_zero()) continue;
    require(gi.degree() == coefficient_degree(m, a, i),
            "coefficient degree must be 2a - (6-i)m");
    require(gi.coeff(0) != 0,
            "nonzero coefficients require a nonzero constant term in tau");
    if (xi_order_ < 0) xi_order_ = i;
  }
  require(xi_order_ >= 0, "branch equation requires a nonzero coefficient");
  require(xi_order_ <= 2, "requires xi-vanishing order k <= 2");
}

BranchEquation random_branch_equation(int m, long long a, int xi_order, SmallRng& rng) {
  require(0 <= xi_order && xi_order <= 2, "requires xi-vanishing order k in {0, 1, 2}");
  require(BranchEquation::coefficient_degree(m, a, xi_order) >= 0,
          xi_order == 0 ? "requires 2a >= 6m" : (xi_order == 1 ? "requires 2a >= 5m" : "requires 2a >= 4m"));
  std::array<BinaryForm, 7> g{BinaryForm(0), BinaryForm(0), BinaryForm(0), BinaryForm(0),
                              BinaryForm(0), BinaryForm(0), BinaryForm(0)};
  for (int i = 0; i <= 6; ++i) {
    long long deg = BranchEquation::coefficient_degree(m, a, i);
    if (i < xi_order || deg < 0) {
      g[static_cast<std::size_t>(i)] = BinaryForm(std::max(0LL, deg));
      continue;
    }
    BinaryForm f(static_cast<int>(deg));
    for (int j = 0; j <= f.degree(); ++j) f.set_coeff(j, Rational(rng.uniform(-9, 9)));
    f.set_coeff(0, Rational(rng.nonzero(9)));
    g[static_cast<std::size_t>(i)] = std::move(f);
  }
  return BranchEquation(m, a, std::move(g));
}

RatMatrix alpha_matrix(const BranchEquation& b) {
  const int k = b.xi_order();
  require(k == 1 || k == 2,
          "alpha matrix requires xi-vanishing order k in {1, 2} (k = 0 has target h^1 = 0)");
  const int m = b.m();
  const H1Model model = h1_linebundle_model(m, b.a());
  const int cols = std::max(0, m - 1);
  RatMatrix alpha(static_cast<int>(model.dim()), cols);

  // Column i is g_k tau^{-i} (doubled for k = 2) truncated to the window of
  // the xi^{k-1} summand; the other summand's rows stay zero.
  const BinaryForm& gk = b.g(k);
  const Rational scale = (k == 2) ? Rational(2) : Rational(1);
  const std::vector<long long> window = (k == 1) ? model.window0() : model.window1();
  const int row_offset = (k == 1) ? 0 : static_cast<int>(model.dim0());
  for (int i = 1; i <= cols; ++i) {
    for (int r = 0; r < static_cast<int>(window.size()); ++r) {
      const long long exponent = window[static_cast<std::size_t>(r)];
      // coefficient of tau^exponent in g_k * tau^{-i}
      const long long tau_power = exponent + i;
      if (tau_power < 0 || tau_power > gk.degree()) continue;
      alpha.at(row_offset + r, i - 1) = gk.coeff(static_cast<int>(tau_power)) * scale;
    }
  }
  return alpha;
}

long long alpha_formula_rank(int m, long long a, int xi_order) {
  const H1Model model = h1_linebundle_model(m, a);
  if (xi_order == 0) return 0;  // target vanishes for 2a >= 6m
  if (xi_order == 1) return model.dim();  // surjective
  // xi_order == 2: zero for 2a >= 5m, rank 5m-2a-1 below; the two statements
  // overlap inconsistently at 2a = 5m-1, where this evaluates to 0.
  return std::max(0LL, 5LL * m - 2 * a - 1);
}

AlphaSweepReport alpha_rank_sweep(int m_min, int m_max, std::uint64_t seed) {
  require(0 <= m_min && m_min <= m_max, "requires 0 <= m_min <= m_max");
  AlphaSweepReport report;
  report.seed = seed;
  SmallRng rng(seed);
  for (int m = m_min; m <= m_max; ++m) {
    for (long long two_a = 4LL * m + 6; two_a <= 8LL * m + 40; two_a += 2) {
      const long long a = two_a / 2;
      for (int k = 1; k <= 2; ++k) {
        if (BranchEquation::coefficient_degree(m, a, k) < 0) continue;
        if (m - 1 <= 0) continue;  // no source classes
        BranchEquation b = random_branch_equation(m, a, k, rng);
        AlphaSample sample;
        sample.m = m;
        sample.a = a;
        sample.xi_order = k;
        sample.exact_rank = alpha_matrix(b).rank();
        sample.formula_rank = alpha_formula_rank(m, a, k);
        sample.target_dim = h1_linebundle_model(m, a).dim();
        sample.boundary = (k == 2) && (two_a == 5LL * m - 1 || two_a == 5LL * m);
        sample.agrees = sample.exact_rank == sample.formula_rank;
        if (!sample.agrees && !sample.boundary) report.mismatches.push_back(sample);
        if (sample.boundary)
          report.warnings.push_back(
              "m=" + std::to_string(m) + " 2a=" + std::to_string(two_a) +
              " k=2: boundary of the vanishing/rank statements; exact rank " +
              std::to_string(sample.exact_rank) + " is the arbiter");
        report.samples.push_back(sample);
      }
    }
  }
  return report;
}

}  // namespace horikawa
