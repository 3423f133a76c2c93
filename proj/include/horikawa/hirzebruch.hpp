#pragma once

namespace horikawa {

// Divisor class s*sigma_inf + g*Gamma on the Hirzebruch surface F_m, where
// sigma_inf is the negative section (self-intersection -m) and Gamma a fibre.
struct DivisorClass {
  int m = 0;
  long long sigma = 0;  // coefficient of sigma_inf
  long long gamma = 0;  // coefficient of Gamma
};

DivisorClass canonical_class(int m);  // -2 sigma_inf - (m+2) Gamma

struct CohTriple {
  long long h0 = 0, h1 = 0, h2 = 0;
  long long chi() const { return h0 - h1 + h2; }
};

long long intersect(const DivisorClass& a, const DivisorClass& b);

// h^0 and h^1 for sigma >= 0 come from the pushforward sums over P^1; the
// remaining cases go through Serre duality with K. The triple always
// satisfies chi = 1 + D.(D-K)/2, checked internally.
CohTriple cohomology(const DivisorClass& d);

// (m+5, m-1, 0) for m >= 1 and (6, 0, 0) for m = 0, assembled from the
// relative tangent sequence pieces O(2 sigma_inf + m Gamma) and O(2 Gamma)
// with vanishing connecting map. The Cech computation in the cech module is
// the independent cross-check for that vanishing.
CohTriple tangent_cohomology(int m);

// The four vanishings behind the claim that every deformation of a double
// cover branched in |6 sigma_inf + 2a Gamma| comes from a deformation of the
// covering map, plus h^2 of the tangent sheaf.
bool def_preserves_map_check(int m, long long a);

}  // namespace horikawa
