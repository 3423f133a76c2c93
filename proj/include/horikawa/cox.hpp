#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "horikawa/int_matrix.hpp"

namespace horikawa {

struct Bidegree {
  long long d1 = 0;  // first grading ("deg1"); decides which monomials occur
  long long d2 = 0;  // second grading; nonnegative for monomials
  bool operator==(const Bidegree&) const = default;
};

// Exponent vector aligned with the ambient weight matrix's variables.
using Monomial = std::vector<int>;

// Bigraded Cox-ring presentation: named variables with Z^2-degrees and the
// two-group irrelevant ideal (t0,t1) cap (fibre variables). Base variables
// always come first and have bidegree (1,0).
class WeightMatrix {
 public:
  struct Var {
    std::string name;
    Bidegree deg;
  };

  WeightMatrix(std::string label, std::vector<Var> base, std::vector<Var> fibre);

  const std::string& label() const { return label_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  int base_count() const { return base_count_; }
  const Var& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  int find_var(const std::string& name) const;  // -1 if absent

  IntMatrix2xN degree_matrix() const;
  Bidegree monomial_degree(const Monomial& m) const;

  // Projections used by the degeneration families.
  WeightMatrix without_var(const std::string& name, std::string new_label) const;
  WeightMatrix with_fibre_var(const std::string& name, Bidegree deg, int position,
                              std::string new_label) const;

  bool same_degrees(const WeightMatrix& other) const;  // verbatim column-wise equality

 private:
  std::string label_;
  std::vector<Var> vars_;
  int base_count_;
};

// The verbatim weight matrices used throughout: Hirzebruch surfaces, the
// P(1,1,3)-bundle threefolds T(m,k), the degeneration fourfolds, the K^2=8
// central fibre and its weighted-projective-space projection target.
namespace catalogue {

WeightMatrix hirzebruch(int m);             // t0 t1 x0 x1 | (1,1,0,-m)
WeightMatrix threefold(int m, int k);       // T(m,k), both parities
WeightMatrix fourfold_even(int d, int n);   // needs n <= 2d < 2n-2
WeightMatrix fourfold_odd(int d, int n);    // needs n+2 <= 2d < 2n+2
WeightMatrix fourfold_special(int n);       // equal-degree pencil; n even
WeightMatrix fourfold_k8();
WeightMatrix central_k8();
WeightMatrix wps_1_1_4_10();                // deg1 row (1,1,4,10)

}  // namespace catalogue

// Divisor classes s*sigma_inf + g*Gamma on F_m convert to bidegrees through
// sigma_inf -> (-m, 1), Gamma -> (1, 0); the single conversion point for all
// catalogue entries.
Bidegree bidegree_of_class(int m, long long sigma_coeff, long long gamma_coeff);

using MonomialFilter = std::function<bool(const Monomial&)>;

// All monomials of exactly the given bidegree, ordered graded-lex on the
// fibre exponents and then by ascending t0-exponent.
std::vector<Monomial> enumerate_monomials(const WeightMatrix& w, Bidegree deg,
                                          const MonomialFilter& filter = nullptr);

long long graded_dim(const WeightMatrix& w, Bidegree deg);

std::string monomial_to_string(const WeightMatrix& w, const Monomial& m);

}  // namespace horikawa
