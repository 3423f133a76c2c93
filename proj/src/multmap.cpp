#include "horikawa/multmap.hpp"

#include "horikawa/errors.hpp"

namespace horikawa {

PencilPair::PencilPair(BinaryForm p0, BinaryForm p1) : p0_(std::move(p0)), p1_(std::move(p1)) {
  require(!p0_.is_zero() && !p1_.is_zero(), "pencil requires nonzero forms");
  require(p0_.degree() == p1_.degree(), "pencil requires forms of one common degree");
  require(p0_.degree() >= 1, "requires degree e >= 1 (equal-degree constants are proportional)");
  require(form_gcd(p0_, p1_).degree() == 0, "requires gcd(p0, p1) = 1");
}

RatMatrix mult_map(const PencilPair& pencil, int i) {
  require(i >= 2, "multiplication map requires i >= 2");
  const int e = pencil.e();
  const int rows = (2 * i - 2) * e + 1;
  const int src_t = (i - 2) * e;  // degree of the R factor
  const int cols = (i + 1) * (src_t + 1);
  RatMatrix m(rows, cols);

  std::vector<BinaryForm> p0_pow(static_cast<std::size_t>(i) + 1, BinaryForm(0));
  std::vector<BinaryForm> p1_pow(static_cast<std::size_t>(i) + 1, BinaryForm(0));
  for (int a = 0; a <= i; ++a) {
    p0_pow[static_cast<std::size_t>(a)] = pencil.p0().pow(a);
    p1_pow[static_cast<std::size_t>(a)] = pencil.p1().pow(a);
  }

  int col = 0;
  for (int alpha = 0; alpha <= i; ++alpha) {
    const BinaryForm base = p0_pow[static_cast<std::size_t>(alpha)] *
                            p1_pow[static_cast<std::size_t>(i - alpha)];
    for (int j = 0; j <= src_t; ++j, ++col) {
      // base * t0^j t1^{src_t - j}: a shift of the coefficient vector.
      for (int l = 0; l <= base.degree(); ++l) {
        if (base.coeff(l) == 0) continue;
        m.at(l + j, col) = base.coeff(l);
      }
    }
  }
  return m;
}

int SweepReport::failure_count(int i_min, int i_max) const {
  int failures = 0;
  for (const MultMapTrial& t : results)
    if (t.i >= i_min && t.i <= i_max && !t.surjective) ++failures;
  return failures;
}

PencilPair random_pencil(int e, SmallRng& rng, long long* rejections) {
  require(e >= 1, "random pencil requires degree e >= 1");
  for (;;) {
    BinaryForm p0 = random_form(e, rng);
    BinaryForm p1 = random_form(e, rng);
    if (form_gcd(p0, p1).degree() == 0) return PencilPair(std::move(p0), std::move(p1));
    if (rejections) ++*rejections;
  }
}

SweepReport surjectivity_sweep(int e, int i_min, int i_max, int trials, std::uint64_t seed) {
  require(trials >= 1, "sweep requires trials >= 1");
  require(2 <= i_min && i_min <= i_max, "sweep requires 2 <= i_min <= i_max");
  SweepReport report;
  report.e = e;
  report.seed = seed;
  report.trials = trials;
  SmallRng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    PencilPair pencil = random_pencil(e, rng, &report.rejections);
    for (int i = i_min; i <= i_max; ++i) {
      RatMatrix m = mult_map(pencil, i);
      MultMapTrial t;
      t.i = i;
      t.trial = trial;
      t.rows = m.rows();
      t.cols = m.cols();
      t.rank = m.rank();
      t.surjective = (t.rank == t.rows);
      t.p0 = pencil.p0();
      t.p1 = pencil.p1();
      report.results.push_back(std::move(t));
    }
  }
  return report;
}

}  // namespace horikawa
