#include <doctest.h>

#include <map>
#include <set>

#include "horikawa/cox.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/hirzebruch.hpp"
#include "horikawa/strata.hpp"

using namespace horikawa;

TEST_CASE("stratum descriptors") {
  StratumDescriptor s = stratum(13, 9);
  CHECK(s.a == 22);
  CHECK(s.k2 == 26);
  CHECK(s.pg == 15);
  CHECK(s.branch == BranchCase::SigmaTwice);
  CHECK(s.dim == 120);
  CHECK_FALSE(s.classical);
  REQUIRE(s.pinch_points.has_value());
  CHECK(*s.pinch_points == 8);

  StratumDescriptor zero = stratum(16, 0);
  CHECK(zero.dim == 140);
  CHECK(zero.classical);

  StratumDescriptor special = stratum(16, 10);
  CHECK(special.dim == 6 * 16 + 2 * 10 + 24);
  CHECK(special.dim == 140);
  CHECK(special.classical);

  CHECK_THROWS_AS(stratum(13, 8), domain_error);   // parity
  CHECK_THROWS_AS(stratum(9, 9), domain_error);    // k > m
  CHECK_THROWS_AS(stratum(9, 11), domain_error);
}

TEST_CASE("numerical invariants tie k, m, a together") {
  for (int k = 1; k <= 30; ++k) {
    for (int m = k % 2; m < k; m += 2) {
      StratumDescriptor s = stratum(k, m);
      CHECK(s.k2 == 4 * s.a - 6 * m - 8);
      CHECK(s.pg == 2 * s.a - 3 * m - 2);
      CHECK(s.k2 == 2 * s.pg - 4);
      CHECK((s.k2 % 4 == 0) == (m % 2 == 0));
      if (2 * m == k + 4) CHECK(s.dim == 7 * k + 28);  // component II boundary
    }
  }
}

TEST_CASE("stratum dimension equals the section count minus the automorphisms") {
  for (int k = 2; k <= 24; ++k) {
    for (int m = k % 2; m < k; m += 2) {
      StratumDescriptor s = stratum(k, m);
      long long sections = graded_dim(catalogue::hirzebruch(m), bidegree_of_class(m, 6, 2 * s.a));
      long long aut = tangent_cohomology(m).h0;
      CHECK(s.dim == (sections - 1) - aut);
    }
  }
}

TEST_CASE("component structure at k = 16") {
  ComponentStructure c = component_structure(16);
  CHECK(c.two_components);
  CHECK(c.component_one == std::vector<int>{0, 2, 4, 6, 8});
  CHECK(c.component_two == std::vector<int>{10});
  CHECK(c.trailing == std::vector<int>{12, 14});
  CHECK(c.trailing_dims == std::vector<long long>{147, 155});
  CHECK(c.classical_dim == 140);
  CHECK(c.warnings.empty());
}

TEST_CASE("component structure at k = 13") {
  ComponentStructure c = component_structure(13);
  CHECK_FALSE(c.two_components);
  CHECK(c.component_one == std::vector<int>{1, 3, 5, 7});
  CHECK(c.trailing == std::vector<int>{9, 11});
  CHECK(c.trailing_dims == std::vector<long long>{120, 128});
}

TEST_CASE("component structure at k = 12 has two components (K^2 = 24)") {
  ComponentStructure c = component_structure(12);
  CHECK(c.two_components);
  CHECK(c.component_one == std::vector<int>{0, 2, 4, 6});
  CHECK(c.component_two == std::vector<int>{8});
}

TEST_CASE("component structure routes k = 1, 4 to special handling") {
  CHECK_THROWS_AS(component_structure(4), domain_error);
  CHECK_THROWS_AS(component_structure(1), domain_error);
}

TEST_CASE("d-indexed lists agree with the derived ones for k >= 5") {
  for (int k = 5; k <= 40; ++k) {
    ComponentStructure c = component_structure(k);
    CHECK(c.warnings.empty());
    std::vector<int> derived = c.component_one;
    derived.insert(derived.end(), c.component_two.begin(), c.component_two.end());
    std::vector<int> d_indexed = c.d_index_one;
    d_indexed.insert(d_indexed.end(), c.d_index_two.begin(), c.d_index_two.end());
    std::sort(derived.begin(), derived.end());
    std::sort(d_indexed.begin(), d_indexed.end());
    CHECK(derived == d_indexed);
  }
  // The d-indexing overshoots existence at k = 2, 3.
  CHECK_FALSE(component_structure(2).warnings.empty());
  CHECK_FALSE(component_structure(3).warnings.empty());
}

TEST_CASE("trailing dimensions strictly increase") {
  for (int k = 5; k <= 40; ++k) {
    ComponentStructure c = component_structure(k);
    for (std::size_t i = 0; i + 1 < c.trailing_dims.size(); ++i)
      CHECK(c.trailing_dims[i] < c.trailing_dims[i + 1]);
    for (long long d : c.trailing_dims) CHECK(d > c.classical_dim);
  }
}

TEST_CASE("which branch cases occur per type") {
  std::map<int, std::set<BranchCase>> seen;
  for (int k = 1; k <= 60; ++k)
    for (int m = k % 2; m < k && m <= 12; m += 2) {
      if (!stratum_exists(k, m)) continue;
      seen[m].insert(stratum(k, m).branch);
    }
  for (int m = 0; m <= 3; ++m)
    CHECK(seen[m] == std::set<BranchCase>{BranchCase::BasePointFree});
  for (int m = 4; m <= 6; ++m) {
    CHECK(seen[m].count(BranchCase::SigmaOnce) == 1);
    CHECK(seen[m].count(BranchCase::SigmaTwice) == 0);
  }
  for (int m = 7; m <= 12; ++m) CHECK(seen[m].size() == 3);
}

TEST_CASE("the K^2 = 8 catalogue") {
  K8Catalogue cat = special_k8();
  REQUIRE(cat.component_one.size() == 2);
  REQUIRE(cat.component_two.size() == 2);
  CHECK(cat.component_one[0].dim == 56);   // m = 0
  CHECK(cat.component_one[1].dim == 55);   // m = 2
  CHECK(cat.component_two[0].dim == 57);   // type infinity
  CHECK(cat.component_two[1].dim == 56);   // type 4'
  CHECK(cat.dim_one == 56);
  CHECK(cat.dim_two == 57);
}

TEST_CASE("weighted monomial counts") {
  CHECK(weighted_monomial_count({1, 1, 1}, 10) == 66);
  CHECK(weighted_monomial_count({1, 1, 4, 10}, 20) == 88);
  CHECK(wps_aut_dim({1, 1, 1}) == 8);
  CHECK(wps_aut_dim({1, 1, 4, 10}) == 31);
}
