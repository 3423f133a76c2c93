#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horikawa/strata.hpp"

namespace horikawa {

enum class RankSource { Exact, Formula };

std::string to_string(RankSource s);

// Dimension bookkeeping along the six-term exact sequence
// 0 -> H^0(T_W) -> H^0(O_B(B)) -> T^1_X -> H^1(T_W) --alpha--> H^1(O_B(B)) -> T^2_X -> 0.
struct TangentReport {
  int k = 0;
  int m = 0;
  long long a = 0;
  int xi_order = 0;        // multiplicity of sigma_inf in the chosen branch divisor
  long long h0_OB = 0;     // h^0(O_B(B)) = h^0(O_W(B)) - 1
  long long h0_T = 0;
  long long h1_T = 0;
  long long h1_OB = 0;
  long long rank_alpha = 0;
  RankSource rank_source = RankSource::Formula;
  long long dim_t1 = 0;
  long long dim_t2 = 0;
  long long stratum_dim = 0;
  long long gap = 0;       // dim T^1 - stratum dimension
  std::vector<std::string> warnings;
};

// Assembles the report for the stratum (k, m). The xi-order defaults to the
// generic branch shape for the stratum's case and may be overridden (the
// boundary 2a = 5m supports both shapes). Exact mode computes rank alpha as
// a matrix rank on seeded generic branch equations; Formula mode uses the
// piecewise predictions.
TangentReport tangent_report(int k, int m, RankSource source,
                             std::optional<int> xi_order = std::nullopt,
                             std::uint64_t seed = 20240901);

struct NonreducedEntry {
  int k = 0;
  int m = 0;
  long long gap = 0;
  long long gap_minus_predicted = 0;  // gap - (k - m + 3)
  TangentReport report;
};

struct NonreducedSweep {
  std::vector<NonreducedEntry> entries;
  bool all_positive = true;
  std::vector<std::string> warnings;
};

// Every trailing stratum (k > m > (k+4)/2) for k in [k_min, k_max], with the
// exact Cech rank as ground truth for the gap.
NonreducedSweep nonreduced_sweep(int k_min, int k_max, std::uint64_t seed = 20240901);

// Tangent-space excess over normal crossing for the K^2 = 8*ell intersection
// divisor: dim T^1_X - dim(classical component) - 1, which must be positive.
long long thmA_gap(int ell);

}  // namespace horikawa
