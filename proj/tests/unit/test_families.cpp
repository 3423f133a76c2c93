#include <doctest.h>

#include "horikawa/errors.hpp"
#include "horikawa/families.hpp"
#include "horikawa/int_matrix.hpp"

using namespace horikawa;

namespace {

ToricPoly linear_section(const WeightMatrix& fourfold, const BinaryForm& a, const BinaryForm& b) {
  // y0 + a(t) x0 + b(t) x1 as a polynomial on the fourfold.
  ToricPoly p = ToricPoly::from_form(fourfold, BinaryForm::monomial(0, 0), {1, 0, 0, 0});
  p = p + ToricPoly::from_form(fourfold, a, {0, 1, 0, 0});
  p = p + ToricPoly::from_form(fourfold, b, {0, 0, 1, 0});
  return p;
}

}  // namespace

TEST_CASE("even family (d,n) = (3,6): eliminations match the catalogue") {
  FamilyDescriptor f = seeded_family(FamilyKind::Even, 3, 6, 1);
  WeightMatrix general = general_fiber(f);
  CHECK(general.same_degrees(catalogue::threefold(6, 12)));
  CentralFibre central = central_fiber(f);
  CHECK(central.y1_degree == Bidegree{-12, 1});
  CHECK(central.matrix.same_degrees(catalogue::threefold(8, 12)));
  CHECK(f.K2() == 24);
}

TEST_CASE("odd family (d,n) = (7,8): eliminations match the catalogue") {
  FamilyDescriptor f = seeded_family(FamilyKind::Odd, 7, 8, 1);
  CHECK(general_fiber(f).same_degrees(catalogue::threefold(13, 15)));
  CHECK(central_fiber(f).matrix.same_degrees(catalogue::threefold(15, 15)));
  CHECK(f.K2() == 30);
}

TEST_CASE("equal-degree family at n = 4 recovers the special threefold") {
  FamilyDescriptor f = seeded_family(FamilyKind::Special, 0, 4, 1);
  CHECK(general_fiber(f).same_degrees(catalogue::threefold(0, 8)));
  CHECK(central_fiber(f).matrix.same_degrees(catalogue::threefold(6, 8)));
}

TEST_CASE("K8 family: general fibre up to GL2(Z), central fibre verbatim") {
  FamilyDescriptor f = seeded_family(FamilyKind::K8, 0, 0, 7);
  WeightMatrix general = general_fiber(f);
  CHECK(gl2z_equivalent(general.degree_matrix(), catalogue::threefold(0, 4).degree_matrix()));
  CentralFibre central = central_fiber(f);
  CHECK(central.matrix.same_degrees(catalogue::central_k8()));
  CHECK(central.y1_degree == Bidegree{0, 1});

  // Deleting y1 projects onto P(1,1,4,10).
  WeightMatrix projected = central.matrix.without_var("y1", "projection");
  CHECK(projected.same_degrees(catalogue::wps_1_1_4_10()));
  for (int i = 0; i < projected.var_count(); ++i)
    CHECK(projected.var(i).deg.d1 == std::vector<long long>{1, 1, 4, 10}[static_cast<std::size_t>(i)]);
}

TEST_CASE("specializing the K8 equation") {
  FamilyDescriptor f = seeded_family(FamilyKind::K8, 0, 0, 9);
  const WeightMatrix& ambient = f.ambient();
  // z^2 + x0 x1 y0^4
  ToricPoly eq(ambient);
  Monomial z2{0, 0, 0, 0, 0, 2};
  Monomial mixed{0, 0, 4, 1, 1, 0};
  eq.add_term(z2, 1);
  eq.add_term(mixed, 1);

  ToricPoly specialized = specialize(f, eq);

  const WeightMatrix central = central_fiber(f).matrix;
  ToricPoly expected(central);
  expected.add_term({0, 0, 0, 0, 2}, 1);  // z^2
  expected = expected + ToricPoly::from_form(central, f.p0() * f.p1(), {4, 2, 0});
  CHECK(specialized == expected);
}

TEST_CASE("specialization keeps z^2 and bidegrees") {
  FamilyDescriptor f = seeded_family(FamilyKind::Special, 0, 4, 3);
  ToricPoly z2 = ToricPoly::monomial(f.ambient(), {0, 0, 0, 0, 0, 2});
  ToricPoly image = specialize(f, z2);
  CHECK(image == ToricPoly::monomial(central_fiber(f).matrix, {0, 0, 0, 0, 2}));
  CHECK(*image.bidegree() == *z2.bidegree());
}

TEST_CASE("the product equation specializes to the stated form") {
  // f = g(t) x1^2 prod_i (y0 + a_i x0 + b_i x1) on the even-type fourfold.
  const int d = 3, n = 6;
  FamilyDescriptor fam = seeded_family(FamilyKind::Even, d, n, 11);
  const WeightMatrix& fourfold = fam.ambient();
  SmallRng rng(19);
  BinaryForm g = random_form(2 * n - 2 * d, rng);

  ToricPoly f = ToricPoly::from_form(fourfold, g, {0, 0, 2, 0});
  std::vector<BinaryForm> a_coeffs, b_coeffs;
  for (int i = 0; i < 4; ++i) {
    a_coeffs.push_back(random_form(1, rng));
    b_coeffs.push_back(random_form(2 * d + 1, rng));
    f = f * linear_section(fourfold, a_coeffs.back(), b_coeffs.back());
  }
  REQUIRE(f.bidegree().has_value());
  CHECK(*f.bidegree() == Bidegree{-4 * (n + 2), 6});

  ToricPoly specialized = specialize(fam, f);

  // g(t) p1^2 y1^2 prod_i (y0 + (a_i p0 + b_i p1) y1) on the central fibre.
  const WeightMatrix central = central_fiber(fam).matrix;
  ToricPoly expected = ToricPoly::from_form(central, g * fam.p1() * fam.p1(), {0, 2, 0});
  for (int i = 0; i < 4; ++i) {
    BinaryForm c = a_coeffs[static_cast<std::size_t>(i)] * fam.p0() +
                   b_coeffs[static_cast<std::size_t>(i)] * fam.p1();
    ToricPoly section = ToricPoly::from_form(central, BinaryForm::monomial(0, 0), {1, 0, 0});
    section = section + ToricPoly::from_form(central, c, {0, 1, 0});
    expected = expected * section;
  }
  CHECK(specialized == expected);

  // Branch bookkeeping: y1-order exactly 2, pure-t factor of degree 2n-2d+2.
  int min_y1 = 100;
  const int y1_index = central.find_var("y1");
  for (const auto& [mono, coeff] : specialized.terms())
    min_y1 = std::min(min_y1, mono[static_cast<std::size_t>(y1_index)]);
  CHECK(min_y1 == 2);
  CHECK((g * fam.p1() * fam.p1()).degree() == 2 * n - 2 * d + 2);
}

TEST_CASE("specialization span at n = 4") {
  FamilyDescriptor f = seeded_family(FamilyKind::Special, 0, 4, 21);
  const long long d1 = 2 * f.ambient().var(f.ambient().find_var("z")).deg.d1;
  SpanReport report = specialization_span(f, {d1, 6});
  const int u = 4 / 2 + 1;

  for (const StratumSpan& s : report.strata) {
    if (s.i >= 3) {
      CHECK(s.span_dim == s.target_dim);  // multiplication maps surjective
      CHECK(s.missed.empty());
    }
    if (s.i == 2) {
      CHECK(s.target_dim == 2 * u + 1);
      CHECK(s.span_dim == 3);
      CHECK(static_cast<long long>(s.missed.size()) == 2 * u - 2);
    }
  }

  // z^2 is lambda-independent, so never among the missed monomials.
  const int zi = central_fiber(f).matrix.find_var("z");
  for (const Monomial& m : report.missed) CHECK(m[static_cast<std::size_t>(zi)] == 0);
}

TEST_CASE("re-sampling the pencil never changes the generic span dimension") {
  long long dims[3];
  for (std::uint64_t seed : {101, 202, 303}) {
    FamilyDescriptor f = seeded_family(FamilyKind::Special, 0, 4, seed);
    const long long d1 = 2 * f.ambient().var(f.ambient().find_var("z")).deg.d1;
    dims[seed / 101 - 1] = specialization_span(f, {d1, 6}).span_dim;
  }
  CHECK(dims[0] == dims[1]);
  CHECK(dims[1] == dims[2]);
}

TEST_CASE("span dimension is invariant under a GL2 change of the pencil") {
  FamilyDescriptor f = seeded_family(FamilyKind::Special, 0, 4, 33);
  const long long d1 = 2 * f.ambient().var(f.ambient().find_var("z")).deg.d1;
  long long base = specialization_span(f, {d1, 6}).span_dim;
  BinaryForm q0 = f.p0() + f.p1();
  FamilyDescriptor changed(FamilyKind::Special, 0, 4, q0, f.p1());
  CHECK(specialization_span(changed, {d1, 6}).span_dim == base);
}

TEST_CASE("membership of the smoothing equation") {
  CHECK(example34_membership(4, PencilPair(BinaryForm::t0_power(3), BinaryForm::t1_power(3))));
  SmallRng rng(1);
  long long rejections = 0;
  CHECK(example34_membership(6, random_pencil(4, rng, &rejections)));
  CHECK_THROWS_AS(example34_membership(4, PencilPair(BinaryForm::t0_power(3),
                                                     BinaryForm::t0_power(3))),
                  domain_error);
}

TEST_CASE("pencil degree validation") {
  CHECK_THROWS_AS(FamilyDescriptor(FamilyKind::Even, 3, 6, BinaryForm::t0_power(3),
                                   BinaryForm::t1_power(1)),
                  domain_error);  // deg p0 must be 2d+1 = 7
  SmallRng rng(2);
  // K8 needs p0 p1 squarefree.
  CHECK_THROWS_AS(FamilyDescriptor(FamilyKind::K8, 0, 0, BinaryForm::t0_power(2),
                                   random_form(2, rng)),
                  domain_error);
}
