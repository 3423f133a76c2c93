#pragma once

#include <cstdint>
#include <vector>

#include "horikawa/binary_form.hpp"
#include "horikawa/rat_matrix.hpp"

namespace horikawa {

// Coprime pair of binary forms of one common degree, spanning the pencil V.
class PencilPair {
 public:
  PencilPair(BinaryForm p0, BinaryForm p1);

  int e() const { return p0_.degree(); }
  const BinaryForm& p0() const { return p0_; }
  const BinaryForm& p1() const { return p1_; }

 private:
  BinaryForm p0_, p1_;
};

// Matrix of Sym^i V (x) R_{(i-2)e} -> R_{(2i-2)e} in the bases
// {p0^alpha p1^{i-alpha}} (x) {t0^j t1^{(i-2)e-j}} and the monomials of the
// target. rows = (2i-2)e+1, cols = (i+1)((i-2)e+1).
RatMatrix mult_map(const PencilPair& pencil, int i);

struct MultMapTrial {
  int i = 0;
  int trial = 0;
  int rank = 0;
  int rows = 0;
  int cols = 0;
  bool surjective = false;
  BinaryForm p0, p1;
};

struct SweepReport {
  int e = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  long long rejections = 0;  // non-coprime random pairs discarded
  std::vector<MultMapTrial> results;
  int failure_count(int i_min, int i_max) const;  // non-surjective trials with i in range
};

// For `trials` seeded random coprime pairs of degree e, records the exact
// rank of the multiplication map for each i in [i_min, i_max].
SweepReport surjectivity_sweep(int e, int i_min, int i_max, int trials, std::uint64_t seed);

PencilPair random_pencil(int e, SmallRng& rng, long long* rejections = nullptr);

}  // namespace horikawa
