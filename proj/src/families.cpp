#include "horikawa/families.hpp"

#include <algorithm>
#include <sstream>

#include "horikawa/errors.hpp"
#include "horikawa/int_matrix.hpp"

namespace horikawa {

ToricPoly::ToricPoly(WeightMatrix ambient) : ambient_(std::move(ambient)) {}

void ToricPoly::add_term(const Monomial& mono, const Rational& coeff) {
  check_internal(static_cast<int>(mono.size()) == ambient_.var_count(),
                 "term length matches ambient");
  if (coeff == 0) return;
  if (!terms_.empty()) {
    Bidegree expected = ambient_.monomial_degree(terms_.begin()->first);
    check_internal(ambient_.monomial_degree(mono) == expected, "polynomial stays homogeneous");
  }
  Rational& c = terms_[mono];
  c += coeff;
  if (c == 0) terms_.erase(mono);
}

std::optional<Bidegree> ToricPoly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  return ambient_.monomial_degree(terms_.begin()->first);
}

ToricPoly ToricPoly::operator+(const ToricPoly& other) const {
  ToricPoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

ToricPoly ToricPoly::operator*(const ToricPoly& other) const {
  ToricPoly out(ambient_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) {
      Monomial prod(m1);
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m2[i];
      out.add_term(prod, c1 * c2);
    }
  return out;
}

ToricPoly ToricPoly::operator*(const Rational& c) const {
  ToricPoly out(ambient_);
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * c);
  return out;
}

bool ToricPoly::operator==(const ToricPoly& other) const { return terms_ == other.terms_; }

ToricPoly ToricPoly::monomial(const WeightMatrix& ambient, const Monomial& mono,
                              const Rational& coeff) {
  ToricPoly p(ambient);
  p.add_term(mono, coeff);
  return p;
}

ToricPoly ToricPoly::from_form(const WeightMatrix& ambient, const BinaryForm& c,
                               const std::vector<int>& fibre_exponents) {
  check_internal(static_cast<int>(fibre_exponents.size()) == ambient.var_count() - 2,
                 "fibre exponent length matches ambient");
  ToricPoly p(ambient);
  for (int j = 0; j <= c.degree(); ++j) {
    if (c.coeff(j) == 0) continue;
    Monomial mono;
    mono.push_back(j);
    mono.push_back(c.degree() - j);
    mono.insert(mono.end(), fibre_exponents.begin(), fibre_exponents.end());
    p.add_term(mono, c.coeff(j));
  }
  return p;
}

std::string ToricPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    Rational abs_c = coeff < 0 ? Rational(-coeff) : coeff;
    std::string mono_str = monomial_to_string(ambient_, mono);
    if (abs_c != 1 || mono_str == "1") {
      out << abs_c.str();
      if (mono_str != "1") out << "*";
    }
    if (mono_str != "1") out << mono_str;
    first = false;
  }
  return out.str();
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Even: return "even";
    case FamilyKind::Odd: return "odd";
    case FamilyKind::K8: return "k8";
    case FamilyKind::Special: return "special";
  }
  return "?";
}

namespace {

WeightMatrix ambient_for(FamilyKind kind, int d, int n) {
  switch (kind) {
    case FamilyKind::Even: return catalogue::fourfold_even(d, n);
    case FamilyKind::Odd: return catalogue::fourfold_odd(d, n);
    case FamilyKind::K8: return catalogue::fourfold_k8();
    case FamilyKind::Special: return catalogue::fourfold_special(n);
  }
  throw domain_error("unknown family kind");
}

void required_pencil_degrees(FamilyKind kind, int d, int n, int* deg0, int* deg1) {
  switch (kind) {
    case FamilyKind::Even: *deg0 = 2 * d + 1; *deg1 = 1; return;
    case FamilyKind::Odd: *deg0 = 2 * d; *deg1 = 1; return;
    case FamilyKind::K8: *deg0 = 2; *deg1 = 2; return;
    case FamilyKind::Special: *deg0 = n / 2 + 1; *deg1 = n / 2 + 1; return;
  }
  throw domain_error("unknown family kind");
}

}  // namespace

FamilyDescriptor::FamilyDescriptor(FamilyKind kind, int d, int n, BinaryForm p0, BinaryForm p1)
    : kind_(kind), d_(d), n_(n), ambient_(ambient_for(kind, d, n)),
      p0_(std::move(p0)), p1_(std::move(p1)) {
  int deg0 = 0, deg1 = 0;
  required_pencil_degrees(kind, d, n, &deg0, &deg1);
  require(p0_.degree() == deg0 && p1_.degree() == deg1,
          "pencil degrees must be (" + std::to_string(deg0) + ", " + std::to_string(deg1) +
              ") for this family kind");
  require(!p0_.is_zero() && !p1_.is_zero(), "pencil requires nonzero forms");
  require(form_gcd(p0_, p1_).degree() == 0, "requires gcd(p0, p1) = 1");
  if (kind == FamilyKind::K8)
    require(form_squarefree(p0_ * p1_), "requires p0*p1 without multiple zeros");
}

long long FamilyDescriptor::K2() const {
  switch (kind_) {
    case FamilyKind::Even:
    case FamilyKind::Special: return 4LL * n_;
    case FamilyKind::Odd: return 4LL * n_ - 2;
    case FamilyKind::K8: return 8;
  }
  return 0;
}

FamilyDescriptor seeded_family(FamilyKind kind, int d, int n, std::uint64_t seed) {
  int deg0 = 0, deg1 = 0;
  required_pencil_degrees(kind, d, n, &deg0, &deg1);
  SmallRng rng(seed);
  for (;;) {
    BinaryForm p0 = random_form(deg0, rng);
    BinaryForm p1 = random_form(deg1, rng);
    if (form_gcd(p0, p1).degree() != 0) continue;
    if (kind == FamilyKind::K8 && !form_squarefree(p0 * p1)) continue;
    return FamilyDescriptor(kind, d, n, std::move(p0), std::move(p1));
  }
}

WeightMatrix general_fiber(const FamilyDescriptor& f) {
  WeightMatrix eliminated = f.ambient().without_var("y0", "general fibre");
  switch (f.kind()) {
    case FamilyKind::Even: {
      WeightMatrix target = catalogue::threefold(2 * f.d(), 2 * f.n());
      check_internal(eliminated.same_degrees(target), "general fibre equals the catalogue matrix");
      return target;
    }
    case FamilyKind::Odd: {
      WeightMatrix target = catalogue::threefold(2 * f.d() - 1, 2 * f.n() - 1);
      check_internal(eliminated.same_degrees(target), "general fibre equals the catalogue matrix");
      return target;
    }
    case FamilyKind::Special: {
      WeightMatrix target = catalogue::threefold(0, 2 * f.n());
      check_internal(eliminated.same_degrees(target), "general fibre equals the catalogue matrix");
      return target;
    }
    case FamilyKind::K8: {
      WeightMatrix target = catalogue::threefold(0, 4);
      check_internal(gl2z_equivalent(eliminated.degree_matrix(), target.degree_matrix()),
                     "general fibre is GL2(Z)-equivalent to T(0,4)");
      return f.ambient().without_var("y0", "T(0,4) up to GL2(Z)");
    }
  }
  throw domain_error("unknown family kind");
}

CentralFibre central_fiber(const FamilyDescriptor& f) {
  const WeightMatrix& ambient = f.ambient();
  const Bidegree x0_deg = ambient.var(ambient.find_var("x0")).deg;
  const Bidegree x1_deg = ambient.var(ambient.find_var("x1")).deg;
  const Bidegree from_x0{x0_deg.d1 - f.p0().degree(), x0_deg.d2};
  const Bidegree from_x1{x1_deg.d1 - f.p1().degree(), x1_deg.d2};
  require(from_x0 == from_x1,
          "requires deg(x0) - deg(p0) = deg(x1) - deg(p1) (consistent pencil degrees)");

  WeightMatrix target = [&] {
    switch (f.kind()) {
      case FamilyKind::Even: return catalogue::threefold(2 * f.d() + 2, 2 * f.n());
      case FamilyKind::Odd: return catalogue::threefold(2 * f.d() + 1, 2 * f.n() - 1);
      case FamilyKind::Special: return catalogue::threefold(f.n() + 2, 2 * f.n());
      case FamilyKind::K8: return catalogue::central_k8();
    }
    throw domain_error("unknown family kind");
  }();
  WeightMatrix reduced = ambient.without_var("x0", "tmp").without_var("x1", "tmp");
  WeightMatrix central = reduced.with_fibre_var("y1", from_x0, 1, target.label());
  check_internal(central.same_degrees(target), "central fibre equals the catalogue matrix");
  return CentralFibre{central, from_x0};
}

ToricPoly specialize(const FamilyDescriptor& f, const ToricPoly& poly) {
  const WeightMatrix& ambient = f.ambient();
  check_internal(poly.ambient().same_degrees(ambient), "polynomial lives on the family ambient");
  const CentralFibre central = central_fiber(f);
  const int xi0 = ambient.find_var("x0");
  const int xi1 = ambient.find_var("x1");
  const int yi0 = ambient.find_var("y0");
  const int zi = ambient.find_var("z");
  const int c_y0 = central.matrix.find_var("y0");
  const int c_y1 = central.matrix.find_var("y1");
  const int c_z = central.matrix.find_var("z");

  ToricPoly out(central.matrix);
  for (const auto& [mono, coeff] : poly.terms()) {
    const int alpha = mono[static_cast<std::size_t>(xi0)];
    const int beta = mono[static_cast<std::size_t>(xi1)];
    BinaryForm t_part = BinaryForm::monomial(mono[0] + mono[1], mono[0], coeff);
    BinaryForm expanded = t_part * f.p0().pow(alpha) * f.p1().pow(beta);
    for (int j = 0; j <= expanded.degree(); ++j) {
      if (expanded.coeff(j) == 0) continue;
      Monomial central_mono(static_cast<std::size_t>(central.matrix.var_count()), 0);
      central_mono[0] = j;
      central_mono[1] = expanded.degree() - j;
      central_mono[static_cast<std::size_t>(c_y0)] = mono[static_cast<std::size_t>(yi0)];
      central_mono[static_cast<std::size_t>(c_y1)] = alpha + beta;
      central_mono[static_cast<std::size_t>(c_z)] = mono[static_cast<std::size_t>(zi)];
      out.add_term(central_mono, expanded.coeff(j));
    }
  }
  if (auto in_deg = poly.bidegree(); in_deg && !out.is_zero())
    check_internal(*out.bidegree() == *in_deg, "specialization preserves the bidegree");
  return out;
}

namespace {

// z-free monomials plus the pure z^2 monomial, the completed-square shape of
// the hypersurface equations.
bool admissible(const Monomial& mono, int z_index) {
  const int z_exp = mono[static_cast<std::size_t>(z_index)];
  if (z_exp == 0) return true;
  if (z_exp != 2) return false;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (static_cast<int>(i) != z_index && mono[i] != 0) return false;
  return true;
}

}  // namespace

SpanReport specialization_span(const FamilyDescriptor& f, Bidegree degree) {
  const WeightMatrix& ambient = f.ambient();
  const CentralFibre central = central_fiber(f);
  const int az = ambient.find_var("z");
  const int cz = central.matrix.find_var("z");
  const int cy1 = central.matrix.find_var("y1");
  const int ax0 = ambient.find_var("x0");
  const int ax1 = ambient.find_var("x1");

  auto ambient_filter = [&](const Monomial& m) { return admissible(m, az); };
  auto central_filter = [&](const Monomial& m) { return admissible(m, cz); };
  const std::vector<Monomial> sources = enumerate_monomials(ambient, degree, ambient_filter);
  const std::vector<Monomial> targets = enumerate_monomials(central.matrix, degree, central_filter);

  std::map<Monomial, int> target_index;
  for (int j = 0; j < static_cast<int>(targets.size()); ++j)
    target_index[targets[static_cast<std::size_t>(j)]] = j;

  RatMatrix span(static_cast<int>(sources.size()), static_cast<int>(targets.size()));
  std::vector<int> source_stratum(sources.size(), -1);
  for (int r = 0; r < static_cast<int>(sources.size()); ++r) {
    const Monomial& mono = sources[static_cast<std::size_t>(r)];
    ToricPoly image = specialize(f, ToricPoly::monomial(ambient, mono));
    for (const auto& [cm, coeff] : image.terms()) {
      auto it = target_index.find(cm);
      check_internal(it != target_index.end(), "specialized monomial lands in the graded piece");
      span.at(r, it->second) = coeff;
    }
    if (mono[static_cast<std::size_t>(az)] == 0)
      source_stratum[static_cast<std::size_t>(r)] =
          mono[static_cast<std::size_t>(ax0)] + mono[static_cast<std::size_t>(ax1)];
  }

  SpanReport report{degree, 0, static_cast<long long>(targets.size()), {}, {}, central.matrix};
  Rref reduced = rref(span);
  report.span_dim = reduced.rank();
  std::vector<bool> is_pivot(targets.size(), false);
  for (int c : reduced.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t j = 0; j < targets.size(); ++j)
    if (!is_pivot[j]) report.missed.push_back(targets[j]);

  // Per x-degree stratum: sources with x0+x1 = i map into targets with
  // y1-exponent i, z-free on both sides.
  for (int i = 0; i <= 6; ++i) {
    std::vector<int> rows, cols;
    for (int r = 0; r < static_cast<int>(sources.size()); ++r)
      if (source_stratum[static_cast<std::size_t>(r)] == i) rows.push_back(r);
    for (int c = 0; c < static_cast<int>(targets.size()); ++c) {
      const Monomial& t = targets[static_cast<std::size_t>(c)];
      if (t[static_cast<std::size_t>(cz)] == 0 && t[static_cast<std::size_t>(cy1)] == i)
        cols.push_back(c);
    }
    if (rows.empty() && cols.empty()) continue;
    RatMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        sub.at(r, c) = span.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
    Rref sub_reduced = rref(sub);
    StratumSpan stratum;
    stratum.i = i;
    stratum.ambient_dim = static_cast<long long>(rows.size());
    stratum.span_dim = sub_reduced.rank();
    stratum.target_dim = static_cast<long long>(cols.size());
    std::vector<bool> sub_pivot(cols.size(), false);
    for (int c : sub_reduced.pivot_cols) sub_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!sub_pivot[c])
        stratum.missed.push_back(targets[static_cast<std::size_t>(cols[c])]);
    report.strata.push_back(std::move(stratum));
  }
  return report;
}

bool example34_membership(int n, const PencilPair& pencil) {
  require(n % 2 == 0 && n >= 2, "requires n even and n >= 2");
  require(pencil.e() == n / 2 + 1, "requires pencil degrees n/2+1");
  FamilyDescriptor f(FamilyKind::Special, 0, n, pencil.p0(), pencil.p1());
  const WeightMatrix& ambient = f.ambient();
  const CentralFibre central = central_fiber(f);
  const int az = ambient.find_var("z");
  const long long z_deg1 = ambient.var(az).deg.d1;
  const Bidegree hypersurface{2 * z_deg1, 6};

  // Span of the family's global monomials inside the central graded piece.
  const int cz = central.matrix.find_var("z");
  const int cy1 = central.matrix.find_var("y1");
  auto central_filter = [&](const Monomial& m) { return admissible(m, cz); };
  const std::vector<Monomial> targets =
      enumerate_monomials(central.matrix, hypersurface, central_filter);
  std::map<Monomial, int> target_index;
  for (int j = 0; j < static_cast<int>(targets.size()); ++j)
    target_index[targets[static_cast<std::size_t>(j)]] = j;
  auto coordinates = [&](const ToricPoly& p) {
    std::vector<Rational> v(targets.size(), Rational(0));
    for (const auto& [cm, coeff] : p.terms()) {
      auto it = target_index.find(cm);
      check_internal(it != target_index.end(), "vector lies in the graded piece");
      v[static_cast<std::size_t>(it->second)] = coeff;
    }
    return v;
  };

  auto ambient_filter = [&](const Monomial& m) { return admissible(m, az); };
  const std::vector<Monomial> sources = enumerate_monomials(ambient, hypersurface, ambient_filter);
  RatMatrix span(static_cast<int>(sources.size()), static_cast<int>(targets.size()));
  for (int r = 0; r < static_cast<int>(sources.size()); ++r) {
    ToricPoly image = specialize(f, ToricPoly::monomial(ambient, sources[static_cast<std::size_t>(r)]));
    const std::vector<Rational> v = coordinates(image);
    for (int c = 0; c < static_cast<int>(targets.size()); ++c) span.at(r, c) = v[static_cast<std::size_t>(c)];
  }
  const Rref reduced = rref(span);

  // The specific equation z^2 - y1^2 (y0^4 p0 p1 + ...): the leading
  // combination plus every admissible lower-order term must extend.
  ToricPoly leading(central.matrix);
  Monomial z2(static_cast<std::size_t>(central.matrix.var_count()), 0);
  z2[static_cast<std::size_t>(cz)] = 2;
  leading.add_term(z2, 1);
  const BinaryForm product = pencil.p0() * pencil.p1();
  std::vector<int> fibre(static_cast<std::size_t>(central.matrix.var_count() - 2), 0);
  fibre[static_cast<std::size_t>(central.matrix.find_var("y0") - 2)] = 4;
  fibre[static_cast<std::size_t>(cy1 - 2)] = 2;
  leading = leading + ToricPoly::from_form(central.matrix, product, fibre) * Rational(-1);
  if (!in_row_span(reduced, coordinates(leading))) return false;

  for (const Monomial& t : targets) {
    if (t[static_cast<std::size_t>(cz)] != 0) continue;
    if (t[static_cast<std::size_t>(cy1)] < 3) continue;
    if (!in_row_span(reduced, coordinates(ToricPoly::monomial(central.matrix, t)))) return false;
  }
  return true;
}

}  // namespace horikawa
