#pragma once

#include <optional>
#include <string>
#include <vector>

namespace horikawa {

// The three shapes of the general branch divisor B in |6 sigma_inf + 2a Gamma|:
// base-point free, B = sigma_inf + B', B = 2 sigma_inf + B'.
enum class BranchCase { BasePointFree, SigmaOnce, SigmaTwice };

std::string to_string(BranchCase c);

struct StratumDescriptor {
  int k = 0;  // half of K^2
  int m = 0;  // type
  long long a = 0;  // 2a = k + 3m + 4
  long long k2 = 0;
  long long pg = 0;
  BranchCase branch = BranchCase::BasePointFree;
  long long dim = 0;
  bool classical = false;
  std::optional<long long> pinch_points;  // 2(a-2m) in the SigmaTwice case
};

// Throws domain_error when the stratum does not exist (parity or k > m).
StratumDescriptor stratum(int k, int m);

bool stratum_exists(int k, int m);

struct ComponentStructure {
  int k = 0;
  bool two_components = false;          // iff K^2 = 2k is divisible by 8
  std::vector<int> component_one;       // classical types (all of them if one component)
  std::vector<int> component_two;       // the single type (k+4)/2 when two_components
  std::vector<int> trailing;            // non-classical types, increasing dimension order
  std::vector<long long> trailing_dims;
  long long classical_dim = 0;          // 7k + 28
  // Horikawa's d-indexed unions, kept for comparison with the derived lists.
  std::vector<int> d_index_one;
  std::vector<int> d_index_two;
  std::vector<std::string> warnings;
};

// k = 1 and k = 4 are routed to special handling (see special_k8 for K^2 = 8).
ComponentStructure component_structure(int k);

// Number of monomials of the given weighted degree in variables of the given
// positive weights.
long long weighted_monomial_count(const std::vector<int>& weights, long long degree);

// dim Aut of a weighted projective space, as graded substitutions minus the
// global scaling.
long long wps_aut_dim(const std::vector<int>& weights);

struct K8Entry {
  std::string label;
  long long dim = 0;
};

struct K8Catalogue {
  std::vector<K8Entry> component_one;  // m=0, m=2
  std::vector<K8Entry> component_two;  // type infinity, type 4'
  long long dim_one = 0;               // 56
  long long dim_two = 0;               // 57
};

// The exceptional K^2 = 8 catalogue: double covers of F_0/F_2, the plane
// ten-fold cover (type infinity) and the P(1,1,4,10) hypersurface (type 4').
K8Catalogue special_k8();

}  // namespace horikawa
