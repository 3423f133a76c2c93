#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horikawa/cox.hpp"
#include "horikawa/multmap.hpp"
#include "horikawa/rat_matrix.hpp"

namespace horikawa {

// Bihomogeneous polynomial on a toric ambient: exponent vectors mapped to
// exact coefficients, all terms of one bidegree.
class ToricPoly {
 public:
  explicit ToricPoly(WeightMatrix ambient);

  const WeightMatrix& ambient() const { return ambient_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Rational& coeff);
  std::optional<Bidegree> bidegree() const;  // nullopt for the zero polynomial

  ToricPoly operator+(const ToricPoly& other) const;
  ToricPoly operator*(const ToricPoly& other) const;
  ToricPoly operator*(const Rational& c) const;
  bool operator==(const ToricPoly& other) const;

  static ToricPoly monomial(const WeightMatrix& ambient, const Monomial& mono,
                            const Rational& coeff = 1);
  // c(t0,t1) * (fibre monomial with the given exponents, t-part omitted).
  static ToricPoly from_form(const WeightMatrix& ambient, const BinaryForm& c,
                             const std::vector<int>& fibre_exponents);

  std::string to_string() const;

 private:
  WeightMatrix ambient_;
  std::map<Monomial, Rational> terms_;
};

enum class FamilyKind { Even, Odd, K8, Special };

std::string to_string(FamilyKind k);

// A pencil degeneration: the fourfold ambient, the coprime pencil (p0, p1)
// with the kind-specific degrees (equal for K8/Special, 2d+1 and 1 for Even,
// 2d and 1 for Odd), and the column surgery relating the general threefold
// (delete y0) to the central one (replace x0, x1 by y1).
class FamilyDescriptor {
 public:
  FamilyDescriptor(FamilyKind kind, int d, int n, BinaryForm p0, BinaryForm p1);

  FamilyKind kind() const { return kind_; }
  int d() const { return d_; }
  int n() const { return n_; }
  const WeightMatrix& ambient() const { return ambient_; }
  const BinaryForm& p0() const { return p0_; }
  const BinaryForm& p1() const { return p1_; }
  long long K2() const;  // computed from the general fibre's invariants

 private:
  FamilyKind kind_;
  int d_, n_;
  WeightMatrix ambient_;
  BinaryForm p0_, p1_;
};

FamilyDescriptor seeded_family(FamilyKind kind, int d, int n, std::uint64_t seed);

// Ambient with the y0 column deleted; equals the catalogue threefold
// verbatim (Even/Odd/Special) or up to GL2(Z) (K8).
WeightMatrix general_fiber(const FamilyDescriptor& f);

struct CentralFibre {
  WeightMatrix matrix;   // y0, y1, z threefold
  Bidegree y1_degree;
};

// Deletes the x0, x1 columns and adjoins y1 with
// deg y1 = deg x0 - (deg p0, 0); checks the two substitution equations give
// one consistent degree. Equals the catalogue target verbatim.
CentralFibre central_fiber(const FamilyDescriptor& f);

// Applies x0 -> p0 y1, x1 -> p1 y1 and expands exactly.
ToricPoly specialize(const FamilyDescriptor& f, const ToricPoly& poly);

struct StratumSpan {
  int i = 0;               // x-degree stratum on the ambient side
  long long ambient_dim = 0;
  long long span_dim = 0;
  long long target_dim = 0;
  std::vector<Monomial> missed;  // cokernel basis inside the stratum
};

struct SpanReport {
  Bidegree degree;
  long long span_dim = 0;
  long long target_dim = 0;
  std::vector<Monomial> missed;  // cokernel basis of the full span
  std::vector<StratumSpan> strata;
  WeightMatrix central;
};

// Specializes every ambient monomial of the given bidegree (the z-free ones
// plus z^2, matching the completed-square normal form) and measures the span
// inside the central fibre's graded piece, overall and per x-degree stratum.
SpanReport specialization_span(const FamilyDescriptor& f, Bidegree degree);

// Does the central-fibre equation z^2 - y1^2 (y0^4 p0 p1 + lower y0-terms)
// extend to the pencil family, i.e. lie in the specialization span together
// with every admissible lower-order term?
bool example34_membership(int n, const PencilPair& pencil);

}  // namespace horikawa
