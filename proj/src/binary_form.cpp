#include "horikawa/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "horikawa/errors.hpp"

namespace horikawa {

BinaryForm::BinaryForm(int degree) : degree_(degree) {
  require(degree >= 0, "binary form requires degree >= 0");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

BinaryForm BinaryForm::from_coeffs(std::vector<Rational> coeffs) {
  require(!coeffs.empty(), "binary form requires at least one coefficient");
  BinaryForm f(static_cast<int>(coeffs.size()) - 1);
  f.coeffs_ = std::move(coeffs);
  return f;
}

BinaryForm BinaryForm::monomial(int degree, int t0_exp, const Rational& c) {
  BinaryForm f(degree);
  require(0 <= t0_exp && t0_exp <= degree, "monomial requires 0 <= t0 exponent <= degree");
  f.coeffs_[static_cast<std::size_t>(t0_exp)] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& BinaryForm::coeff(int t0_exp) const {
  static const Rational zero(0);
  if (t0_exp < 0 || t0_exp > degree_) return zero;
  return coeffs_[static_cast<std::size_t>(t0_exp)];
}

void BinaryForm::set_coeff(int t0_exp, const Rational& c) {
  require(0 <= t0_exp && t0_exp <= degree_, "coefficient index out of range");
  coeffs_[static_cast<std::size_t>(t0_exp)] = c;
}

int BinaryForm::t0_order() const {
  for (int j = 0; j <= degree_; ++j)
    if (coeffs_[static_cast<std::size_t>(j)] != 0) return j;
  return degree_ + 1;
}

int BinaryForm::t1_order() const {
  for (int j = degree_; j >= 0; --j)
    if (coeffs_[static_cast<std::size_t>(j)] != 0) return degree_ - j;
  return degree_ + 1;
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
  require(degree_ == other.degree_, "form addition requires equal degrees");
  BinaryForm r(degree_);
  for (int j = 0; j <= degree_; ++j) r.coeffs_[j] = coeffs_[j] + other.coeffs_[j];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& other) const {
  require(degree_ == other.degree_, "form subtraction requires equal degrees");
  BinaryForm r(degree_);
  for (int j = 0; j <= degree_; ++j) r.coeffs_[j] = coeffs_[j] - other.coeffs_[j];
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
  BinaryForm r(degree_ + other.degree_);
  for (int j = 0; j <= degree_; ++j) {
    if (coeffs_[j] == 0) continue;
    for (int l = 0; l <= other.degree_; ++l) {
      if (other.coeffs_[l] == 0) continue;
      r.coeffs_[static_cast<std::size_t>(j + l)] += coeffs_[j] * other.coeffs_[l];
    }
  }
  return r;
}

BinaryForm BinaryForm::operator*(const Rational& c) const {
  BinaryForm r(degree_);
  for (int j = 0; j <= degree_; ++j) r.coeffs_[j] = coeffs_[j] * c;
  return r;
}

BinaryForm BinaryForm::pow(int e) const {
  require(e >= 0, "form power requires exponent >= 0");
  BinaryForm r = monomial(0, 0, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BinaryForm BinaryForm::d_t0() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm r(degree_ - 1);
  for (int j = 1; j <= degree_; ++j) r.coeffs_[j - 1] = coeffs_[j] * j;
  return r;
}

BinaryForm BinaryForm::d_t1() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm r(degree_ - 1);
  for (int j = 0; j < degree_; ++j) r.coeffs_[j] = coeffs_[j] * (degree_ - j);
  return r;
}

bool BinaryForm::operator==(const BinaryForm& other) const {
  return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = degree_; j >= 0; --j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    int t1_exp = degree_ - j;
    bool unit = (abs_c == 1) && (j > 0 || t1_exp > 0);
    if (!unit) out << abs_c.str();
    bool star = !unit;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (star) out << "*";
      out << name;
      if (e > 1) out << "^" << e;
      star = true;
    };
    var("t0", j);
    var("t1", t1_exp);
  }
  return out.str();
}

namespace {

// Dense polynomial in tau = t0/t1, low degree first; trailing zeros trimmed.
using TauPoly = std::vector<Rational>;

TauPoly dehomogenize(const BinaryForm& f) {
  TauPoly p;
  for (int j = 0; j <= f.degree(); ++j) p.push_back(f.coeff(j));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int tau_deg(const TauPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

// Remainder of a by b, b nonzero.
TauPoly tau_mod(TauPoly a, const TauPoly& b) {
  while (tau_deg(a) >= tau_deg(b)) {
    Rational factor = a.back() / b.back();
    int shift = tau_deg(a) - tau_deg(b);
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
      a[static_cast<std::size_t>(j + shift)] -= factor * b[static_cast<std::size_t>(j)];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Quotient if b divides a exactly, else empty optional encoded as pair.
bool tau_divide(const TauPoly& a, const TauPoly& b, TauPoly* quotient) {
  TauPoly rem = a;
  TauPoly q(a.size(), Rational(0));
  while (tau_deg(rem) >= tau_deg(b)) {
    Rational factor = rem.back() / b.back();
    int shift = tau_deg(rem) - tau_deg(b);
    q[static_cast<std::size_t>(shift)] = factor;
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
      rem[static_cast<std::size_t>(j + shift)] -= factor * b[static_cast<std::size_t>(j)];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) return false;
  while (!q.empty() && q.back() == 0) q.pop_back();
  *quotient = q;
  return true;
}

BinaryForm rehomogenize(const TauPoly& p, int extra_t1) {
  int d = tau_deg(p);
  BinaryForm f(d + extra_t1);
  for (int j = 0; j <= d; ++j) f.set_coeff(j, p[static_cast<std::size_t>(j)]);
  return f;
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& p, const BinaryForm& q) {
  require(!(p.is_zero() && q.is_zero()), "form gcd requires inputs not both zero");
  if (p.is_zero()) return form_gcd(q, p);
  if (q.is_zero()) {
    TauPoly a = dehomogenize(p);
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return rehomogenize(a, p.t1_order());
  }
  int shared_t1 = std::min(p.t1_order(), q.t1_order());
  TauPoly a = dehomogenize(p);
  TauPoly b = dehomogenize(q);
  while (!b.empty()) {
    TauPoly r = tau_mod(a, b);
    a = b;
    b = r;
  }
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return rehomogenize(a, shared_t1);
}

bool form_divides(const BinaryForm& divisor, const BinaryForm& dividend) {
  require(!divisor.is_zero(), "form division requires a nonzero divisor");
  if (dividend.is_zero()) return true;
  if (dividend.degree() < divisor.degree()) return false;
  TauPoly a = dehomogenize(dividend);
  TauPoly b = dehomogenize(divisor);
  TauPoly q;
  if (!tau_divide(a, b, &q)) return false;
  // tau-divisibility plus enough room in the t1-order.
  return dividend.t1_order() >= divisor.t1_order();
}

bool form_squarefree(const BinaryForm& p) {
  require(!p.is_zero(), "squarefreeness requires a nonzero form");
  if (p.degree() == 0) return true;
  // A repeated factor (including at tau = infinity) is a common factor of
  // both partials.
  return form_gcd(p.d_t0(), p.d_t1()).degree() == 0;
}

BinaryForm random_form(int degree, SmallRng& rng) {
  BinaryForm f(degree);
  for (int j = 0; j <= degree; ++j) f.set_coeff(j, Rational(rng.uniform(-9, 9)));
  f.set_coeff(0, Rational(rng.nonzero(9)));
  if (degree > 0) f.set_coeff(degree, Rational(rng.nonzero(9)));
  return f;
}

}  // namespace horikawa
