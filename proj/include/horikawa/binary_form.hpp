#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "horikawa/rational.hpp"

namespace horikawa {

// Homogeneous polynomial of fixed degree d in t0, t1 with exact rational
// coefficients. coeff(j) is the coefficient of t0^j t1^(d-j). The zero form
// keeps an explicit degree and all-zero coefficients.
class BinaryForm {
 public:
  explicit BinaryForm(int degree = 0);
  static BinaryForm from_coeffs(std::vector<Rational> coeffs);  // degree = size-1
  static BinaryForm monomial(int degree, int t0_exp, const Rational& c = 1);
  // t0^degree and t1^degree.
  static BinaryForm t0_power(int degree) { return monomial(degree, degree); }
  static BinaryForm t1_power(int degree) { return monomial(degree, 0); }

  int degree() const { return degree_; }
  bool is_zero() const;
  const Rational& coeff(int t0_exp) const;
  void set_coeff(int t0_exp, const Rational& c);

  // Order of vanishing along {t0 = 0} resp. {t1 = 0}; degree+1 for the zero form.
  int t0_order() const;
  int t1_order() const;

  BinaryForm operator+(const BinaryForm& other) const;  // same degree required
  BinaryForm operator-(const BinaryForm& other) const;
  BinaryForm operator*(const BinaryForm& other) const;
  BinaryForm operator*(const Rational& c) const;
  BinaryForm pow(int e) const;

  BinaryForm d_t0() const;  // partial derivatives
  BinaryForm d_t1() const;

  bool operator==(const BinaryForm& other) const;

  std::string to_string() const;  // e.g. "t0^2 - 3/2*t0*t1"

 private:
  int degree_;
  std::vector<Rational> coeffs_;  // coeffs_[j] = coefficient of t0^j t1^(degree_-j)
};

// Monic gcd (leading t0-coefficient 1). Factors out the common t1-power,
// dehomogenizes in tau = t0/t1, runs the Euclidean algorithm and
// rehomogenizes. Degree-0 result means coprime. Throws domain_error if both
// inputs are zero.
BinaryForm form_gcd(const BinaryForm& p, const BinaryForm& q);

// Exact divisibility of forms.
bool form_divides(const BinaryForm& divisor, const BinaryForm& dividend);

// No repeated linear factor (including t1, the root at infinity of tau).
bool form_squarefree(const BinaryForm& p);

// Random form of the given degree with coefficients in [-9, 9]; the
// constant and leading coefficients are forced nonzero so all roots are
// visible in the torus.
BinaryForm random_form(int degree, SmallRng& rng);

}  // namespace horikawa
