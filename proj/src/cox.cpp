#include "horikawa/cox.hpp"

#include <algorithm>
#include <sstream>

#include "horikawa/errors.hpp"

namespace horikawa {

WeightMatrix::WeightMatrix(std::string label, std::vector<Var> base, std::vector<Var> fibre)
    : label_(std::move(label)), base_count_(static_cast<int>(base.size())) {
  require(base.size() == 2, "weight matrix requires exactly two base variables");
  for (const Var& v : base)
    require(v.deg.d1 == 1 && v.deg.d2 == 0, "base variables require bidegree (1,0)");
  // A fibre variable with positive second grading makes the grading rank 2.
  require(!fibre.empty(), "weight matrix requires a fibre variable");
  for (const Var& v : fibre)
    require(v.deg.d2 > 0, "fibre variables require positive second grading");
  vars_ = std::move(base);
  vars_.insert(vars_.end(), fibre.begin(), fibre.end());
}

int WeightMatrix::find_var(const std::string& name) const {
  for (int i = 0; i < var_count(); ++i)
    if (vars_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

IntMatrix2xN WeightMatrix::degree_matrix() const {
  IntMatrix2xN m;
  for (const Var& v : vars_) m.push_col(v.deg.d1, v.deg.d2);
  return m;
}

Bidegree WeightMatrix::monomial_degree(const Monomial& m) const {
  check_internal(static_cast<int>(m.size()) == var_count(), "monomial length matches ambient");
  Bidegree d;
  for (int i = 0; i < var_count(); ++i) {
    d.d1 += static_cast<long long>(m[static_cast<std::size_t>(i)]) * vars_[static_cast<std::size_t>(i)].deg.d1;
    d.d2 += static_cast<long long>(m[static_cast<std::size_t>(i)]) * vars_[static_cast<std::size_t>(i)].deg.d2;
  }
  return d;
}

WeightMatrix WeightMatrix::without_var(const std::string& name, std::string new_label) const {
  int idx = find_var(name);
  require(idx >= base_count_, "can only delete a fibre variable");
  std::vector<Var> base(vars_.begin(), vars_.begin() + base_count_);
  std::vector<Var> fibre;
  for (int i = base_count_; i < var_count(); ++i)
    if (i != idx) fibre.push_back(vars_[static_cast<std::size_t>(i)]);
  return WeightMatrix(std::move(new_label), std::move(base), std::move(fibre));
}

WeightMatrix WeightMatrix::with_fibre_var(const std::string& name, Bidegree deg, int position,
                                          std::string new_label) const {
  std::vector<Var> base(vars_.begin(), vars_.begin() + base_count_);
  std::vector<Var> fibre(vars_.begin() + base_count_, vars_.end());
  require(0 <= position && position <= static_cast<int>(fibre.size()),
          "fibre insertion position out of range");
  fibre.insert(fibre.begin() + position, Var{name, deg});
  return WeightMatrix(std::move(new_label), std::move(base), std::move(fibre));
}

bool WeightMatrix::same_degrees(const WeightMatrix& other) const {
  return degree_matrix() == other.degree_matrix();
}

namespace catalogue {

namespace {
WeightMatrix::Var t0() { return {"t0", {1, 0}}; }
WeightMatrix::Var t1() { return {"t1", {1, 0}}; }
}  // namespace

WeightMatrix hirzebruch(int m) {
  require(m >= 0, "Hirzebruch surface requires m >= 0");
  return WeightMatrix("F(" + std::to_string(m) + ")", {t0(), t1()},
                      {{"x0", {0, 1}}, {"x1", {-m, 1}}});
}

// No upper bound on m: the degeneration central fibres instantiate T(m,k)
// beyond the classical range (up to m = k+2 in the odd case), so only
// parity and signs are constraints of the presentation itself.
WeightMatrix threefold(int m, int k) {
  require(m >= 0, "T(m,k) requires m >= 0");
  require(k >= 1, "T(m,k) requires k >= 1");
  require((k - m) % 2 == 0, "T(m,k) requires m and k of equal parity");
  std::string label = "T(" + std::to_string(m) + "," + std::to_string(k) + ")";
  if (m % 2 == 0) {
    // m = 2d, k = 2n
    int d = m / 2, n = k / 2;
    return WeightMatrix(label, {t0(), t1()},
                        {{"x0", {d - n - 2, 1}},
                         {"x1", {-d - n - 2, 1}},
                         {"z", {-2 * (n + 2), 3}}});
  }
  // m = 2d-1, k = 2n-1
  int d = (m + 1) / 2, n = (k + 1) / 2;
  return WeightMatrix(label, {t0(), t1()},
                      {{"x0", {d - n - 1, 1}}, {"x1", {-d - n, 1}}, {"z", {-2 * n, 3}}});
}

WeightMatrix fourfold_even(int d, int n) {
  require(n <= 2 * d, "even-type fourfold requires n <= 2d");
  require(2 * d < 2 * n - 2, "even-type fourfold requires 2d < 2n-2");
  return WeightMatrix("T4even(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")",
                      {t0(), t1()},
                      {{"y0", {d - n - 1, 1}},
                       {"x0", {d - n - 2, 1}},
                       {"x1", {-d - n - 2, 1}},
                       {"z", {-2 * (n + 2), 3}}});
}

WeightMatrix fourfold_odd(int d, int n) {
  require(n + 2 <= 2 * d, "odd-type fourfold requires n+2 <= 2d");
  require(2 * d < 2 * n + 2, "odd-type fourfold requires 2d < 2n+2");
  return WeightMatrix("T4odd(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")",
                      {t0(), t1()},
                      {{"y0", {d - n, 1}},
                       {"x0", {d - n - 1, 1}},
                       {"x1", {-d - n, 1}},
                       {"z", {-2 * n, 3}}});
}

WeightMatrix fourfold_special(int n) {
  require(n % 2 == 0, "equal-degree-pencil fourfold requires n even");
  require(n >= 2, "equal-degree-pencil fourfold requires n >= 2");
  int u = n / 2 + 1;
  return WeightMatrix("T4special(n=" + std::to_string(n) + ")", {t0(), t1()},
                      {{"y0", {-u, 1}},
                       {"x0", {-n - 2, 1}},
                       {"x1", {-n - 2, 1}},
                       {"z", {-2 * (n + 2), 3}}});
}

WeightMatrix fourfold_k8() {
  return WeightMatrix("T4k8", {t0(), t1()},
                      {{"y0", {4, 1}}, {"x0", {2, 1}}, {"x1", {2, 1}}, {"z", {10, 3}}});
}

WeightMatrix central_k8() {
  return WeightMatrix("T0k8", {t0(), t1()},
                      {{"y0", {4, 1}}, {"y1", {0, 1}}, {"z", {10, 3}}});
}

WeightMatrix wps_1_1_4_10() {
  return WeightMatrix("P(1,1,4,10)", {t0(), t1()}, {{"y0", {4, 1}}, {"z", {10, 3}}});
}

}  // namespace catalogue

Bidegree bidegree_of_class(int m, long long sigma_coeff, long long gamma_coeff) {
  return Bidegree{gamma_coeff - m * sigma_coeff, sigma_coeff};
}

std::vector<Monomial> enumerate_monomials(const WeightMatrix& w, Bidegree deg,
                                          const MonomialFilter& filter) {
  std::vector<Monomial> out;
  if (deg.d2 < 0) return out;
  const int nf = w.var_count() - w.base_count();

  // All fibre exponent tuples with second grading deg.d2.
  std::vector<std::vector<int>> fibre_tuples;
  std::vector<int> current(static_cast<std::size_t>(nf), 0);
  auto recurse = [&](auto&& self, int var, long long remaining) -> void {
    if (var == nf) {
      if (remaining == 0) fibre_tuples.push_back(current);
      return;
    }
    long long weight = w.var(w.base_count() + var).deg.d2;
    for (long long e = 0; e * weight <= remaining; ++e) {
      current[static_cast<std::size_t>(var)] = static_cast<int>(e);
      self(self, var + 1, remaining - e * weight);
    }
    current[static_cast<std::size_t>(var)] = 0;
  };
  recurse(recurse, 0, deg.d2);

  auto grade = [](const std::vector<int>& t) {
    long long s = 0;
    for (int e : t) s += e;
    return s;
  };
  std::sort(fibre_tuples.begin(), fibre_tuples.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              long long ga = grade(a), gb = grade(b);
              if (ga != gb) return ga < gb;
              return a < b;
            });

  for (const auto& tuple : fibre_tuples) {
    long long fibre_d1 = 0;
    for (int i = 0; i < nf; ++i)
      fibre_d1 += static_cast<long long>(tuple[static_cast<std::size_t>(i)]) *
                  w.var(w.base_count() + i).deg.d1;
    long long t_degree = deg.d1 - fibre_d1;
    if (t_degree < 0) continue;
    for (long long j = 0; j <= t_degree; ++j) {
      Monomial m(static_cast<std::size_t>(w.var_count()), 0);
      m[0] = static_cast<int>(j);
      m[1] = static_cast<int>(t_degree - j);
      for (int i = 0; i < nf; ++i) m[static_cast<std::size_t>(w.base_count() + i)] = tuple[static_cast<std::size_t>(i)];
      if (!filter || filter(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

long long graded_dim(const WeightMatrix& w, Bidegree deg) {
  return static_cast<long long>(enumerate_monomials(w, deg).size());
}

std::string monomial_to_string(const WeightMatrix& w, const Monomial& m) {
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < w.var_count(); ++i) {
    int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (any) out << "*";
    out << w.var(i).name;
    if (e > 1) out << "^" << e;
    any = true;
  }
  return any ? out.str() : "1";
}

}  // namespace horikawa
