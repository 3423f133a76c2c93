#include "horikawa/hirzebruch.hpp"

#include <algorithm>

#include "horikawa/errors.hpp"

namespace horikawa {

DivisorClass canonical_class(int m) { return {m, -2, -static_cast<long long>(m) - 2}; }

long long intersect(const DivisorClass& a, const DivisorClass& b) {
  require(a.m == b.m, "intersection requires divisors on the same F_m");
  return -static_cast<long long>(a.m) * a.sigma * b.sigma + a.sigma * b.gamma + b.sigma * a.gamma;
}

namespace {

// Pushforward to P^1 splits O(s sigma_inf + g Gamma) into O(g - i*m),
// i = 0..s, with no higher direct images when s >= -1.
long long push_h0(const DivisorClass& d) {
  long long total = 0;
  for (long long i = 0; i <= d.sigma; ++i) total += std::max(0LL, d.gamma - i * d.m + 1);
  return total;
}

long long push_h1(const DivisorClass& d) {
  long long total = 0;
  for (long long i = 0; i <= d.sigma; ++i) total += std::max(0LL, i * d.m - d.gamma - 1);
  return total;
}

DivisorClass serre_dual(const DivisorClass& d) {
  DivisorClass k = canonical_class(d.m);
  return {d.m, k.sigma - d.sigma, k.gamma - d.gamma};
}

}  // namespace

CohTriple cohomology(const DivisorClass& d) {
  CohTriple t;
  const DivisorClass dual = serre_dual(d);
  t.h0 = d.sigma >= 0 ? push_h0(d) : 0;
  t.h2 = dual.sigma >= 0 ? push_h0(dual) : 0;
  if (d.sigma >= 0) t.h1 = push_h1(d);
  else if (d.sigma == -1) t.h1 = 0;
  else t.h1 = push_h1(dual);

  // Riemann-Roch on a rational surface.
  DivisorClass d_minus_k{d.m, d.sigma - canonical_class(d.m).sigma,
                         d.gamma - canonical_class(d.m).gamma};
  long long chi = 1 + intersect(d, d_minus_k) / 2;
  check_internal(t.chi() == chi, "cohomology triple violates Riemann-Roch");
  return t;
}

CohTriple tangent_cohomology(int m) {
  require(m >= 0, "tangent cohomology requires m >= 0");
  // Relative tangent sequence: 0 -> O(2 sigma_inf + m Gamma) -> T -> O(2 Gamma) -> 0,
  // connecting map zero.
  CohTriple rel = cohomology({m, 2, m});
  CohTriple pull = cohomology({m, 0, 2});
  return {rel.h0 + pull.h0, rel.h1 + pull.h1, rel.h2 + pull.h2};
}

bool def_preserves_map_check(int m, long long a) {
  require(a > 2 * m + 2, "requires a > 2m+2");
  CohTriple first = cohomology({m, -1, m - a});
  CohTriple second = cohomology({m, -3, 2 - a});
  return first.h0 == 0 && first.h1 == 0 && second.h0 == 0 && second.h1 == 0 &&
         tangent_cohomology(m).h2 == 0;
}

}  // namespace horikawa
