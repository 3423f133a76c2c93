#include <doctest.h>

#include "horikawa/cech.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/hirzebruch.hpp"

using namespace horikawa;

TEST_CASE("Laurent windows of the line-bundle H^1 model") {
  H1Model model = h1_linebundle_model(8, 19);
  CHECK(model.dim0() == 9);
  CHECK(model.dim1() == 1);
  CHECK(model.dim() == 10);  // 11m - 4a - 2

  CHECK(h1_linebundle_model(2, 8).dim() == 0);

  H1Model mid = h1_linebundle_model(6, 15);
  CHECK(mid.dim0() == 5);
  CHECK(mid.dim1() == 0);

  CHECK_THROWS_AS(h1_linebundle_model(6, 14), domain_error);  // 2a > 4m+4 fails
}

TEST_CASE("model dimension matches the line-bundle h^1") {
  for (int m = 0; m <= 15; ++m)
    for (long long a = 2 * m + 3; a <= 4 * m + 20; ++a)
      CHECK(h1_linebundle_model(m, a).dim() == cohomology({m, 6, 2 * a}).h1);
}

TEST_CASE("tangent H^1 basis") {
  CHECK(tangent_h1_basis(5).size() == 4);
  CHECK(tangent_h1_basis(1).empty());
  CHECK(tangent_h1_basis(0).empty());
  std::vector<long long> ten = tangent_h1_basis(10);
  REQUIRE(ten.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(ten[static_cast<std::size_t>(i)] == -1 - i);
  for (int m = 1; m <= 15; ++m)
    CHECK(static_cast<long long>(tangent_h1_basis(m).size()) == tangent_cohomology(m).h1);
}

TEST_CASE("branch equations validate their coefficient degrees") {
  SmallRng rng(5);
  BranchEquation b = random_branch_equation(6, 15, 1, rng);
  CHECK(b.xi_order() == 1);
  CHECK(b.g(1).degree() == 0);  // 2a - 5m = 0
  CHECK(b.g(6).degree() == 30);  // 2a

  CHECK_THROWS_AS(random_branch_equation(6, 14, 1, rng), domain_error);  // needs 2a >= 5m... 2a>4m+4 first
}

TEST_CASE("alpha matrix ranks at the catalogue points") {
  SmallRng rng(17);

  // (m,a) = (6,15), k = 1, deg g1 = 0: an isomorphism.
  BranchEquation iso = random_branch_equation(6, 15, 1, rng);
  RatMatrix alpha = alpha_matrix(iso);
  CHECK(alpha.rows() == 5);
  CHECK(alpha.cols() == 5);
  CHECK(alpha.rank() == 5);

  // Same stratum with xi-order 2: the zero matrix.
  BranchEquation zero = random_branch_equation(6, 15, 2, rng);
  RatMatrix alpha2 = alpha_matrix(zero);
  CHECK(alpha2.rank() == 0);

  // (m,a) = (12,28), k = 2: rank 5m - 2a - 1 = 3.
  BranchEquation partial = random_branch_equation(12, 28, 2, rng);
  CHECK(alpha_matrix(partial).rank() == 3);

  CHECK_THROWS_AS(alpha_matrix(random_branch_equation(12, 37, 0, rng)), domain_error);
}

TEST_CASE("alpha rank is invariant under rescalings") {
  SmallRng rng(23);
  BranchEquation b = random_branch_equation(9, 21, 2, rng);
  long long base = alpha_matrix(b).rank();

  // g -> 5 g
  std::array<BinaryForm, 7> scaled;
  for (int i = 0; i <= 6; ++i) scaled[static_cast<std::size_t>(i)] = b.g(i) * Rational(5);
  CHECK(alpha_matrix(BranchEquation(9, 21, scaled)).rank() == base);

  // tau -> 3 tau: coefficient of tau^j picks up 3^j.
  std::array<BinaryForm, 7> stretched;
  for (int i = 0; i <= 6; ++i) {
    BinaryForm g = b.g(i);
    BinaryForm out(g.degree());
    Rational power(1);
    for (int j = 0; j <= g.degree(); ++j) {
      out.set_coeff(j, g.coeff(j) * power);
      power *= 3;
    }
    stretched[static_cast<std::size_t>(i)] = out;
  }
  CHECK(alpha_matrix(BranchEquation(9, 21, stretched)).rank() == base);
}

TEST_CASE("k = 1 at 2a = 5m gives a square invertible matrix") {
  SmallRng rng(31);
  // 2a = 5m needs m even for integrality and m > 4 for 2a > 4m+4.
  for (int m : {6, 8, 10, 14}) {
    BranchEquation b = random_branch_equation(m, 5 * m / 2, 1, rng);
    RatMatrix alpha = alpha_matrix(b);
    CHECK(alpha.rows() == m - 1);
    CHECK(alpha.cols() == m - 1);
    CHECK(alpha.rank() == m - 1);
  }
}

TEST_CASE("sweep agrees with the piecewise predictions away from the boundary") {
  AlphaSweepReport report = alpha_rank_sweep(2, 12, 99);
  CHECK(report.mismatches.empty());
  CHECK(!report.samples.empty());
  bool saw_boundary = false;
  for (const AlphaSample& s : report.samples) {
    if (!s.boundary) continue;
    saw_boundary = true;
    // At 2a = 5m-1 the window is empty, so the exact rank is 0 even though
    // the nonvanishing statement suggests otherwise.
    CHECK(s.exact_rank == std::max(0LL, 5LL * s.m - 2 * s.a - 1));
  }
  CHECK(saw_boundary);
  CHECK(!report.warnings.empty());
}

TEST_CASE("k = 1 surjects onto the full model") {
  SmallRng rng(41);
  for (int m = 3; m <= 15; ++m) {
    const long long a_min = std::max((5LL * m + 1) / 2, 2LL * m + 3);
    for (long long a = a_min; 2 * a < 6LL * m - 1; ++a) {
      BranchEquation b = random_branch_equation(m, a, 1, rng);
      CHECK(alpha_matrix(b).rank() == h1_linebundle_model(m, a).dim());
    }
  }
}
