#include "horikawa/strata.hpp"

#include <algorithm>

#include "horikawa/errors.hpp"

namespace horikawa {

std::string to_string(BranchCase c) {
  switch (c) {
    case BranchCase::BasePointFree: return "BPF";
    case BranchCase::SigmaOnce: return "SIGMA1";
    case BranchCase::SigmaTwice: return "SIGMA2";
  }
  return "?";
}

bool stratum_exists(int k, int m) {
  return k >= 1 && m >= 0 && (k - m) % 2 == 0 && k > m;
}

StratumDescriptor stratum(int k, int m) {
  require(k >= 1, "requires k >= 1");
  require(m >= 0, "requires m >= 0");
  require((k - m) % 2 == 0, "requires m and k of the same parity");
  require(k > m, "requires k > m (equivalently a > 2m+2)");

  StratumDescriptor s;
  s.k = k;
  s.m = m;
  s.a = (static_cast<long long>(k) + 3LL * m + 4) / 2;
  s.k2 = 4 * s.a - 6LL * m - 8;
  s.pg = 2 * s.a - 3LL * m - 2;
  check_internal(s.k2 == 2LL * k && s.pg == k + 2, "stratum invariants K2 = 2k, p_g = k+2");

  const long long two_a = 2 * s.a;
  if (two_a >= 6LL * m) s.branch = BranchCase::BasePointFree;
  else if (two_a >= 5LL * m) s.branch = BranchCase::SigmaOnce;
  else s.branch = BranchCase::SigmaTwice;
  if (s.branch == BranchCase::SigmaTwice) s.pinch_points = 2 * (s.a - 2 * m);

  if (m == 0) s.dim = 7LL * k + 28;
  else if (3 * m <= k + 4) s.dim = 7LL * k + 29 - m;
  else if (2 * m <= k + 4) s.dim = 6LL * k + 2 * m + 24;
  else s.dim = 5LL * k + 4 * m + 19;

  s.classical = 2 * m <= k + 4;
  return s;
}

ComponentStructure component_structure(int k) {
  require(k >= 1, "requires k >= 1");
  require(k != 1 && k != 4, "k = 1 and k = 4 are routed to special handling");

  ComponentStructure c;
  c.k = k;
  c.two_components = (k % 4 == 0);
  c.classical_dim = 7LL * k + 28;

  std::vector<int> classical;
  for (int m = k % 2; m < k; m += 2) {
    if (!stratum_exists(k, m)) continue;
    StratumDescriptor s = stratum(k, m);
    if (s.classical) classical.push_back(m);
    else {
      c.trailing.push_back(m);
      c.trailing_dims.push_back(s.dim);
    }
  }
  // Trailing types already come sorted by m; their dimensions must strictly
  // increase with m.
  for (std::size_t i = 1; i < c.trailing_dims.size(); ++i)
    check_internal(c.trailing_dims[i - 1] < c.trailing_dims[i],
                   "trailing dimensions strictly increase");

  if (c.two_components) {
    const int special_type = (k + 4) / 2;
    for (int m : classical) {
      if (m == special_type) c.component_two.push_back(m);
      else c.component_one.push_back(m);
    }
    check_internal(c.component_two.size() == 1, "component II is the single type (k+4)/2");
  } else {
    c.component_one = classical;
  }

  // Horikawa's d-indexed unions.
  if (k % 2 == 1) {
    for (int d = 0; d <= (k + 2) / 4; ++d) c.d_index_one.push_back(2 * d + 1);
  } else if (k % 4 != 0) {
    for (int d = 0; d <= (k + 4) / 4; ++d) c.d_index_one.push_back(2 * d);
  } else {
    for (int d = 0; d <= k / 4; ++d) c.d_index_one.push_back(2 * d);
    c.d_index_two.push_back((k + 4) / 2);
  }
  std::vector<int> d_union = c.d_index_one;
  d_union.insert(d_union.end(), c.d_index_two.begin(), c.d_index_two.end());
  std::sort(d_union.begin(), d_union.end());
  if (d_union != classical)
    c.warnings.push_back(
        "d-indexed classical types differ from the existence-derived list "
        "(boundary type with a = 2m+2 is not a standard stable double cover)");
  return c;
}

long long weighted_monomial_count(const std::vector<int>& weights, long long degree) {
  if (degree < 0) return 0;
  if (weights.empty()) return degree == 0 ? 1 : 0;
  std::vector<int> rest(weights.begin(), weights.end() - 1);
  long long count = 0;
  const int w = weights.back();
  require(w > 0, "weighted count requires positive weights");
  for (long long e = 0; e * w <= degree; ++e)
    count += weighted_monomial_count(rest, degree - e * w);
  return count;
}

long long wps_aut_dim(const std::vector<int>& weights) {
  long long dim = 0;
  for (int w : weights) dim += weighted_monomial_count(weights, w);
  return dim - 1;  // the global scaling acts trivially
}

K8Catalogue special_k8() {
  K8Catalogue cat;
  cat.component_one.push_back({"m=0", stratum(4, 0).dim});
  cat.component_one.push_back({"m=2", stratum(4, 2).dim});

  // Type infinity: plane curves of degree ten modulo Aut P^2.
  const std::vector<int> plane{1, 1, 1};
  long long dim_infinity = weighted_monomial_count(plane, 10) - 1 - wps_aut_dim(plane);

  // Type 4': degree-20 hypersurfaces in P(1,1,4,10) modulo its automorphisms.
  const std::vector<int> wps{1, 1, 4, 10};
  long long dim_4prime = weighted_monomial_count(wps, 20) - 1 - wps_aut_dim(wps);

  cat.component_two.push_back({"infinity", dim_infinity});
  cat.component_two.push_back({"4'", dim_4prime});
  cat.dim_one = std::max(cat.component_one[0].dim, cat.component_one[1].dim);
  cat.dim_two = std::max(dim_infinity, dim_4prime);
  return cat;
}

}  // namespace horikawa
