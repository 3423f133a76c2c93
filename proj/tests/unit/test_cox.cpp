#include <doctest.h>

#include <algorithm>
#include <set>

#include "horikawa/cox.hpp"
#include "horikawa/errors.hpp"

using namespace horikawa;

namespace {

bool degrees_are(const WeightMatrix& w, const std::vector<Bidegree>& expected) {
  if (w.var_count() != static_cast<int>(expected.size())) return false;
  for (int i = 0; i < w.var_count(); ++i)
    if (!(w.var(i).deg == expected[static_cast<std::size_t>(i)])) return false;
  return true;
}

}  // namespace

TEST_CASE("catalogue matrices match the stated degree rows") {
  CHECK(degrees_are(catalogue::threefold(0, 4),
                    {{1, 0}, {1, 0}, {-4, 1}, {-4, 1}, {-8, 3}}));
  CHECK(degrees_are(catalogue::central_k8(), {{1, 0}, {1, 0}, {4, 1}, {0, 1}, {10, 3}}));
  CHECK(degrees_are(catalogue::fourfold_even(3, 6),
                    {{1, 0}, {1, 0}, {-4, 1}, {-5, 1}, {-11, 1}, {-16, 3}}));
  CHECK(degrees_are(catalogue::hirzebruch(3), {{1, 0}, {1, 0}, {0, 1}, {-3, 1}}));
  CHECK(degrees_are(catalogue::wps_1_1_4_10(), {{1, 0}, {1, 0}, {4, 1}, {10, 3}}));

  CHECK_THROWS_AS(catalogue::fourfold_even(2, 6), domain_error);   // n <= 2d fails
  CHECK_THROWS_AS(catalogue::fourfold_even(5, 6), domain_error);   // 2d < 2n-2 fails
  CHECK_THROWS_AS(catalogue::fourfold_odd(4, 8), domain_error);    // n+2 <= 2d fails
  CHECK_THROWS_AS(catalogue::threefold(1, 4), domain_error);       // parity
  CHECK_THROWS_AS(catalogue::fourfold_special(5), domain_error);   // n odd
}

TEST_CASE("monomial enumeration on T(0,4)") {
  WeightMatrix w = catalogue::threefold(0, 4);
  auto all = enumerate_monomials(w, {-16, 6});
  CHECK(all.size() == 84);
  int zi = w.find_var("z");
  auto z_free = enumerate_monomials(w, {-16, 6}, [&](const Monomial& m) {
    return m[static_cast<std::size_t>(zi)] == 0;
  });
  CHECK(z_free.size() == 63);

  for (const Monomial& m : all) {
    Bidegree d = w.monomial_degree(m);
    CHECK(d.d1 == -16);
    CHECK(d.d2 == 6);
  }
}

TEST_CASE("degree (0,0) has only the constant monomial") {
  for (const WeightMatrix& w :
       {catalogue::threefold(0, 4), catalogue::hirzebruch(7), catalogue::fourfold_k8()}) {
    auto monos = enumerate_monomials(w, {0, 0});
    REQUIRE(monos.size() == 1);
    CHECK(std::all_of(monos[0].begin(), monos[0].end(), [](int e) { return e == 0; }));
  }
}

TEST_CASE("on T(6,8) every hypersurface monomial is divisible by x1 or equals z^2") {
  WeightMatrix w = catalogue::threefold(6, 8);
  const long long hyper_d1 = 2 * w.var(w.find_var("z")).deg.d1;
  CHECK(hyper_d1 == -24);
  int x1 = w.find_var("x1");
  int z = w.find_var("z");
  auto monos = enumerate_monomials(w, {hyper_d1, 6});
  CHECK(!monos.empty());
  for (const Monomial& m : monos) {
    bool is_z2 = m[static_cast<std::size_t>(z)] == 2;
    bool has_x1 = m[static_cast<std::size_t>(x1)] >= 1;
    CHECK((is_z2 || has_x1));
  }
}

TEST_CASE("graded dimensions on Hirzebruch surfaces") {
  // 6 sigma_inf + 16 Gamma on F_2, i.e. bidegree (4, 6): 14a-21m+7 with a=8, m=2.
  CHECK(graded_dim(catalogue::hirzebruch(2), bidegree_of_class(2, 6, 16)) == 77);
  // 6 sigma_inf + 38 Gamma on F_8: 10a-10m+5 with a=19, m=8.
  CHECK(graded_dim(catalogue::hirzebruch(8), bidegree_of_class(8, 6, 38)) == 115);
  CHECK(graded_dim(catalogue::hirzebruch(4), {0, 0}) == 1);
}

TEST_CASE("h^0 of 6 sigma_inf + 2a Gamma matches the piecewise count") {
  for (int m = 0; m <= 20; ++m) {
    WeightMatrix w = catalogue::hirzebruch(m);
    for (long long two_a = 4LL * m + 6; two_a <= 8LL * m + 40; two_a += 2) {
      long long a = two_a / 2;
      long long expected;
      if (two_a >= 6LL * m) expected = 14 * a - 21LL * m + 7;
      else if (two_a >= 5LL * m) expected = 12 * a - 15LL * m + 6;
      else expected = 10 * a - 10LL * m + 5;
      CHECK(graded_dim(w, bidegree_of_class(m, 6, two_a)) == expected);
    }
  }
}

TEST_CASE("pushforward decomposition of graded dimensions") {
  for (int m : {0, 1, 3, 5, 9}) {
    WeightMatrix w = catalogue::hirzebruch(m);
    for (long long alpha = 0; alpha <= 4; ++alpha) {
      for (long long beta = -2; beta <= 2 * m + 6; ++beta) {
        long long expected = 0;
        for (long long i = 0; i <= alpha; ++i) expected += std::max(0LL, beta - i * m + 1);
        CHECK(graded_dim(w, bidegree_of_class(m, alpha, beta)) == expected);
      }
    }
  }
}

TEST_CASE("enumeration is an honest set and deterministic") {
  WeightMatrix w = catalogue::threefold(2, 6);
  const long long hyper_d1 = 2 * w.var(w.find_var("z")).deg.d1;
  auto first = enumerate_monomials(w, {hyper_d1, 6});
  auto second = enumerate_monomials(w, {hyper_d1, 6});
  CHECK(first == second);
  std::set<Monomial> unique(first.begin(), first.end());
  CHECK(unique.size() == first.size());
}
