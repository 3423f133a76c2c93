// Command-line front-end: strata tables, cohomology triples, multiplication
// map ranks, alpha-map ranks, deformation reports, degeneration families and
// the component-adjacency graph, as text or JSON envelopes.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (the message names
// the violated condition), 3 internal consistency failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "horikawa/cech.hpp"
#include "horikawa/cox.hpp"
#include "horikawa/deformation.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/families.hpp"
#include "horikawa/hirzebruch.hpp"
#include "horikawa/multmap.hpp"
#include "horikawa/strata.hpp"

using nlohmann::json;
using namespace horikawa;

namespace {

json envelope(const std::string& command, json inputs, json result,
              const std::vector<std::string>& warnings) {
  json env;
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["warnings"] = warnings;
  return env;
}

void emit(const json& env) { std::cout << env.dump(2) << "\n"; }

json form_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (int j = 0; j <= f.degree(); ++j) coeffs.push_back(repr(f.coeff(j)));
  return json{{"degree", f.degree()}, {"coeffs", coeffs}, {"text", f.to_string()}};
}

BinaryForm parse_form_csv(const std::string& csv) {
  std::vector<Rational> coeffs;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
  require(!coeffs.empty(), "polynomial literal requires at least one coefficient");
  return BinaryForm::from_coeffs(std::move(coeffs));
}

json weight_matrix_json(const WeightMatrix& w) {
  json vars = json::array();
  for (int i = 0; i < w.var_count(); ++i)
    vars.push_back(json{{"name", w.var(i).name},
                        {"deg1", w.var(i).deg.d1},
                        {"deg2", w.var(i).deg.d2}});
  return json{{"label", w.label()}, {"vars", vars}};
}

std::string weight_matrix_text(const WeightMatrix& w) {
  std::ostringstream out;
  out << w.label() << ":";
  for (int i = 0; i < w.var_count(); ++i)
    out << " " << w.var(i).name << "(" << w.var(i).deg.d1 << "," << w.var(i).deg.d2 << ")";
  return out.str();
}

int parse_k2(long long k2) {
  require(k2 >= 2, "requires K^2 >= 2");
  require(k2 % 2 == 0, "requires K^2 = 2k even");
  return static_cast<int>(k2 / 2);
}

// ---------------------------------------------------------------- strata --

json stratum_json(const StratumDescriptor& s) {
  json j{{"m", s.m},        {"a", s.a},         {"K2", s.k2},
         {"p_g", s.pg},     {"case", to_string(s.branch)},
         {"dim", s.dim},    {"classical", s.classical}};
  if (s.pinch_points) j["pinch_points"] = *s.pinch_points;
  return j;
}

int run_strata(long long k2, bool as_json) {
  const int k = parse_k2(k2);
  std::vector<std::string> warnings;
  json result;
  std::ostringstream text;

  if (k == 4) {
    K8Catalogue cat = special_k8();
    json one = json::array(), two = json::array();
    text << "K^2 = 8 strata (exceptional catalogue)\n";
    text << "  component I  (dim " << cat.dim_one << "):";
    for (const K8Entry& e : cat.component_one) {
      one.push_back(json{{"label", e.label}, {"dim", e.dim}});
      text << "  " << e.label << " (dim " << e.dim << ")";
    }
    text << "\n  component II (dim " << cat.dim_two << "):";
    for (const K8Entry& e : cat.component_two) {
      two.push_back(json{{"label", e.label}, {"dim", e.dim}});
      text << "  " << e.label << " (dim " << e.dim << ")";
    }
    text << "\n";
    result = json{{"k", 4},
                  {"component_I", one},
                  {"component_II", two},
                  {"dim_I", cat.dim_one},
                  {"dim_II", cat.dim_two}};
  } else if (k == 1) {
    warnings.push_back("K^2 = 2 surfaces are double covers of the plane; no standard strata");
    result = json{{"k", 1}, {"strata", json::array()}};
    text << "K^2 = 2: no standard strata (double covers of the plane)\n";
  } else {
    ComponentStructure c = component_structure(k);
    warnings.insert(warnings.end(), c.warnings.begin(), c.warnings.end());
    json strata = json::array();
    text << "K^2 = " << k2 << " Horikawa strata (k = " << k << ")\n";
    text << "  m    a     case    dim   classical  pinch_points\n";
    for (int m = k % 2; m < k; m += 2) {
      if (!stratum_exists(k, m)) continue;
      StratumDescriptor s = stratum(k, m);
      strata.push_back(stratum_json(s));
      text << "  " << std::left << std::setw(4) << m << " " << std::setw(5) << s.a << " "
           << std::setw(7) << to_string(s.branch) << " " << std::setw(5) << s.dim << " "
           << std::setw(10) << (s.classical ? "yes" : "no") << " "
           << (s.pinch_points ? std::to_string(*s.pinch_points) : std::string("-")) << "\n";
    }
    json components;
    if (c.two_components) {
      components["I"] = c.component_one;
      components["II"] = c.component_two;
      text << "  component I:  m in {";
      for (std::size_t i = 0; i < c.component_one.size(); ++i)
        text << (i ? ", " : "") << c.component_one[i];
      text << "}\n  component II: m in {";
      for (std::size_t i = 0; i < c.component_two.size(); ++i)
        text << (i ? ", " : "") << c.component_two[i];
      text << "}\n";
    } else {
      components["classical"] = c.component_one;
      text << "  classical component: m in {";
      for (std::size_t i = 0; i < c.component_one.size(); ++i)
        text << (i ? ", " : "") << c.component_one[i];
      text << "}\n";
    }
    components["classical_dim"] = c.classical_dim;
    components["trailing"] = c.trailing;
    if (!c.trailing.empty()) {
      text << "  trailing components (generically non-reduced):";
      for (std::size_t i = 0; i < c.trailing.size(); ++i)
        text << " m=" << c.trailing[i] << " (dim " << c.trailing_dims[i] << ")";
      text << "\n";
    }
    result = json{{"k", k}, {"strata", strata}, {"components", components}};
  }

  if (as_json) {
    emit(envelope("strata", json{{"k2", k2}}, result, warnings));
  } else {
    std::cout << text.str();
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ cohomology --

int run_cohomology(int m, long long sigma, long long gamma, bool as_json) {
  CohTriple t = cohomology({m, sigma, gamma});
  if (as_json) {
    json result{{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", t.chi()}};
    emit(envelope("cohomology", json{{"m", m}, {"sigma", sigma}, {"gamma", gamma}}, result, {}));
  } else {
    std::cout << "O(" << sigma << " sigma_inf + " << gamma << " Gamma) on F(" << m << "): "
              << "h0 = " << t.h0 << ", h1 = " << t.h1 << ", h2 = " << t.h2
              << ", chi = " << t.chi() << "\n";
  }
  return 0;
}

int run_tangent(int m, bool as_json) {
  CohTriple t = tangent_cohomology(m);
  const auto basis = tangent_h1_basis(m);
  check_internal(static_cast<long long>(basis.size()) == t.h1,
                 "Cech tangent basis size equals h^1");
  if (as_json) {
    json result{{"h0", t.h0},
                {"h1", t.h1},
                {"h2", t.h2},
                {"cech_basis_exponents", basis}};
    emit(envelope("tangent", json{{"m", m}}, result, {}));
  } else {
    std::cout << "tangent sheaf of F(" << m << "): h0 = " << t.h0 << ", h1 = " << t.h1
              << ", h2 = " << t.h2 << " (Cech basis size " << basis.size() << ")\n";
  }
  return 0;
}

// --------------------------------------------------------------- multmap --

int run_multmap(int e, std::optional<int> i_single, const std::string& p0_csv,
                const std::string& p1_csv, int trials, std::uint64_t seed, int i_min, int i_max,
                bool as_json) {
  if (!p0_csv.empty() || !p1_csv.empty()) {
    require(!p0_csv.empty() && !p1_csv.empty(), "explicit pencils require both --p0 and --p1");
    require(i_single.has_value(), "explicit pencils require --i");
    BinaryForm p0 = parse_form_csv(p0_csv);
    BinaryForm p1 = parse_form_csv(p1_csv);
    require(p0.degree() == e && p1.degree() == e,
            "coefficient count must match degree e (e+1 values)");
    PencilPair pencil(p0, p1);
    RatMatrix m = mult_map(pencil, *i_single);
    int rank = m.rank();
    json result{{"i", *i_single},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"rank", rank},
                {"surjective", rank == m.rows()},
                {"cokernel_dim", m.rows() - rank},
                {"p0", form_json(p0)},
                {"p1", form_json(p1)}};
    if (as_json) {
      emit(envelope("multmap", json{{"e", e}, {"i", *i_single}}, result, {}));
    } else {
      std::cout << "multiplication map at e = " << e << ", i = " << *i_single << ": rank "
                << rank << " of " << m.rows() << " (cols " << m.cols() << "), "
                << (rank == m.rows() ? "surjective" : "not surjective") << "\n";
    }
    return 0;
  }

  SweepReport report = surjectivity_sweep(e, i_min, i_max, trials, seed);
  json rows = json::array();
  for (const MultMapTrial& t : report.results)
    rows.push_back(json{{"i", t.i},
                        {"trial", t.trial},
                        {"rank", t.rank},
                        {"rows", t.rows},
                        {"cols", t.cols},
                        {"surjective", t.surjective},
                        {"p0", form_json(t.p0)},
                        {"p1", form_json(t.p1)}});
  const int failures = report.failure_count(std::max(3, i_min), i_max);
  json result{{"rejections", report.rejections},
              {"results", rows},
              {"failures_i_ge_3", failures}};
  std::vector<std::string> warnings;
  if (failures > 0) warnings.push_back("surjectivity failed for some i >= 3 (unexpected)");
  if (as_json) {
    emit(envelope("multmap",
                  json{{"e", e}, {"i_min", i_min}, {"i_max", i_max}, {"trials", trials},
                       {"seed", seed}},
                  result, warnings));
  } else {
    std::cout << "surjectivity sweep at e = " << e << ", i in [" << i_min << ", " << i_max
              << "], " << trials << " seeded coprime pairs (seed " << seed << ", "
              << report.rejections << " rejections)\n";
    for (int i = i_min; i <= i_max; ++i) {
      int surjective = 0;
      for (const MultMapTrial& t : report.results)
        if (t.i == i && t.surjective) ++surjective;
      std::cout << "  i = " << i << ": " << surjective << "/" << trials << " surjective\n";
    }
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- alpha --

int run_alpha(int m, long long a, int xi_order, std::uint64_t seed, bool as_json) {
  SmallRng rng(seed);
  BranchEquation b = random_branch_equation(m, a, xi_order, rng);
  RatMatrix alpha = alpha_matrix(b);
  const long long exact = alpha.rank();
  const long long predicted = alpha_formula_rank(m, a, xi_order);
  const H1Model model = h1_linebundle_model(m, a);

  std::vector<std::string> warnings;
  if (xi_order == 2 && (2 * a == 5LL * m - 1 || 2 * a == 5LL * m))
    warnings.push_back("2a in {5m-1, 5m}: boundary of the vanishing/rank statements; "
                       "the exact rank is the arbiter");
  if (exact != predicted)
    warnings.push_back("exact rank differs from the piecewise prediction");

  json matrix = json::array();
  for (int r = 0; r < alpha.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < alpha.cols(); ++c) row.push_back(repr(alpha.at(r, c)));
    matrix.push_back(row);
  }
  json result{{"window0_dim", model.dim0()},
              {"window1_dim", model.dim1()},
              {"target_dim", model.dim()},
              {"source_dim", std::max(0, m - 1)},
              {"exact_rank", exact},
              {"formula_rank", predicted},
              {"surjective", exact == model.dim()},
              {"matrix", matrix},
              {"g_k", form_json(b.g(xi_order))}};
  if (as_json) {
    emit(envelope("alpha", json{{"m", m}, {"a", a}, {"k", xi_order}, {"seed", seed}}, result,
                  warnings));
  } else {
    std::cout << "alpha map at m = " << m << ", a = " << a << ", xi-order " << xi_order
              << ": exact rank " << exact << " (prediction " << predicted << "), target dim "
              << model.dim() << ", source dim " << std::max(0, m - 1) << "\n";
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- deform --

int run_deform(int k, int m, RankSource source, std::optional<int> xi_order, std::uint64_t seed,
               bool as_json) {
  TangentReport r = tangent_report(k, m, source, xi_order, seed);
  json result{{"k", r.k},
              {"m", r.m},
              {"a", r.a},
              {"xi_order", r.xi_order},
              {"rank_source", to_string(r.rank_source)},
              {"h0_OB", r.h0_OB},
              {"h0_T", r.h0_T},
              {"h1_T", r.h1_T},
              {"h1_OB", r.h1_OB},
              {"rank_alpha", r.rank_alpha},
              {"dim_T1", r.dim_t1},
              {"dim_T2", r.dim_t2},
              {"stratum_dim", r.stratum_dim},
              {"gap", r.gap}};
  if (as_json) {
    json inputs{{"k", k}, {"m", m}, {"mode", to_string(source)}, {"seed", seed}};
    if (xi_order) inputs["xi_order"] = *xi_order;
    emit(envelope("deform", inputs, result, r.warnings));
  } else {
    std::cout << "deformations of the type-(" << m << ") stratum at K^2 = " << 2 * k << " ("
              << to_string(r.rank_source) << " mode, xi-order " << r.xi_order << ")\n"
              << "  h0(O_B(B)) = " << r.h0_OB << ", h0(T) = " << r.h0_T
              << ", h1(T) = " << r.h1_T << ", h1(O_B(B)) = " << r.h1_OB << "\n"
              << "  rank alpha = " << r.rank_alpha << ", dim T^1 = " << r.dim_t1
              << ", dim T^2 = " << r.dim_t2 << "\n"
              << "  stratum dim = " << r.stratum_dim << ", gap = " << r.gap << "\n";
    for (const std::string& w : r.warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- family --

int run_family(const std::string& kind_name, int d, int n, bool check_limit, std::uint64_t seed,
               bool as_json) {
  FamilyKind kind;
  if (kind_name == "even") kind = FamilyKind::Even;
  else if (kind_name == "odd") kind = FamilyKind::Odd;
  else if (kind_name == "k8") kind = FamilyKind::K8;
  else if (kind_name == "special") kind = FamilyKind::Special;
  else throw domain_error("kind must be one of even|odd|k8|special");

  FamilyDescriptor f = seeded_family(kind, d, n, seed);
  WeightMatrix general = general_fiber(f);
  CentralFibre central = central_fiber(f);

  std::vector<std::string> warnings;
  json result{{"kind", to_string(kind)},
              {"K2", f.K2()},
              {"ambient", weight_matrix_json(f.ambient())},
              {"general_fibre", weight_matrix_json(general)},
              {"central_fibre", weight_matrix_json(central.matrix)},
              {"y1_deg1", central.y1_degree.d1},
              {"p0", form_json(f.p0())},
              {"p1", form_json(f.p1())}};
  if (kind == FamilyKind::Odd)
    warnings.push_back("stated ambient moduli label K^2 = 4n+2 vs computed K^2 = " +
                       std::to_string(f.K2()) + " (recorded; families indexed by invariants)");

  std::ostringstream text;
  text << "family kind " << to_string(kind) << " (K^2 = " << f.K2() << ")\n"
       << "  ambient:       " << weight_matrix_text(f.ambient()) << "\n"
       << "  general fibre: " << weight_matrix_text(general) << "\n"
       << "  central fibre: " << weight_matrix_text(central.matrix) << " (deg1 y1 = "
       << central.y1_degree.d1 << ")\n"
       << "  pencil: p0 = " << f.p0().to_string() << ", p1 = " << f.p1().to_string() << "\n";

  if (check_limit) {
    json limit;
    if (kind == FamilyKind::K8) {
      ToricPoly eq(f.ambient());
      Monomial z2(6, 0), mixed(6, 0);
      z2[5] = 2;
      mixed[2] = 4;
      mixed[3] = 1;
      mixed[4] = 1;
      eq.add_term(z2, 1);
      eq.add_term(mixed, 1);
      ToricPoly specialized = specialize(f, eq);
      ToricPoly expected(central.matrix);
      Monomial cz2(5, 0);
      cz2[4] = 2;
      expected.add_term(cz2, 1);
      expected = expected + ToricPoly::from_form(central.matrix, f.p0() * f.p1(), {4, 2, 0});
      const bool identity = specialized == expected;
      check_internal(identity, "z^2 + x0 x1 y0^4 specializes to z^2 + p0 p1 y0^4 y1^2");
      WeightMatrix projected = central.matrix.without_var("y1", "projection");
      const bool degrees_ok = projected.same_degrees(catalogue::wps_1_1_4_10());
      check_internal(degrees_ok, "deleting y1 projects onto P(1,1,4,10)");
      limit = json{{"specialization_identity", identity}, {"wps_projection", degrees_ok}};
      text << "  limit checks: specialization identity ok, P(1,1,4,10) projection ok\n";
    } else if (kind == FamilyKind::Special) {
      const long long d1 = 2 * f.ambient().var(f.ambient().find_var("z")).deg.d1;
      SpanReport span = specialization_span(f, {d1, 6});
      PencilPair pencil(f.p0(), f.p1());
      const bool member = example34_membership(n, pencil);
      json strata = json::array();
      for (const StratumSpan& s : span.strata)
        strata.push_back(json{{"i", s.i},
                              {"ambient_dim", s.ambient_dim},
                              {"span_dim", s.span_dim},
                              {"target_dim", s.target_dim},
                              {"cokernel_dim", s.target_dim - s.span_dim}});
      limit = json{{"span_dim", span.span_dim},
                   {"target_dim", span.target_dim},
                   {"strata", strata},
                   {"smoothing_membership", member}};
      text << "  limit checks: span " << span.span_dim << "/" << span.target_dim
           << ", smoothing membership " << (member ? "true" : "false") << "\n";
    } else {
      // Product equation g(t) x1^2 prod(y0 + a_i x0 + b_i x1) and its limit.
      SmallRng rng(seed + 1);
      const int g_degree = 2 * n - 2 * d;
      BinaryForm g = random_form(g_degree, rng);
      ToricPoly eq = ToricPoly::from_form(f.ambient(), g, {0, 0, 2, 0});
      std::vector<BinaryForm> a_coeffs, b_coeffs;
      const int b_degree = (kind == FamilyKind::Even) ? 2 * d + 1 : 2 * d;
      for (int i = 0; i < 4; ++i) {
        a_coeffs.push_back(random_form(1, rng));
        b_coeffs.push_back(random_form(b_degree, rng));
        ToricPoly section = ToricPoly::from_form(f.ambient(), BinaryForm::monomial(0, 0),
                                                 {1, 0, 0, 0});
        section = section + ToricPoly::from_form(f.ambient(), a_coeffs.back(), {0, 1, 0, 0});
        section = section + ToricPoly::from_form(f.ambient(), b_coeffs.back(), {0, 0, 1, 0});
        eq = eq * section;
      }
      ToricPoly specialized = specialize(f, eq);
      ToricPoly expected = ToricPoly::from_form(central.matrix, g * f.p1() * f.p1(), {0, 2, 0});
      for (int i = 0; i < 4; ++i) {
        BinaryForm c = a_coeffs[static_cast<std::size_t>(i)] * f.p0() +
                       b_coeffs[static_cast<std::size_t>(i)] * f.p1();
        ToricPoly section = ToricPoly::from_form(central.matrix, BinaryForm::monomial(0, 0),
                                                 {1, 0, 0});
        section = section + ToricPoly::from_form(central.matrix, c, {0, 1, 0});
        expected = expected * section;
      }
      const bool identity = specialized == expected;
      check_internal(identity, "product equation specializes to the stated limit form");
      int min_y1 = 1 << 20;
      const int y1_index = central.matrix.find_var("y1");
      for (const auto& [mono, coeff] : specialized.terms())
        min_y1 = std::min(min_y1, mono[static_cast<std::size_t>(y1_index)]);
      check_internal(min_y1 == 2, "branch contains the negative section twice");
      limit = json{{"specialization_identity", identity},
                   {"sigma_multiplicity", min_y1},
                   {"fibre_factor_degree", (g * f.p1() * f.p1()).degree()}};
      text << "  limit checks: specialization identity ok, sigma_inf multiplicity 2, "
           << "fibre factor degree " << (g * f.p1() * f.p1()).degree() << "\n";
    }
    result["limit"] = limit;
  }

  if (as_json) {
    json inputs{{"kind", kind_name}, {"d", d}, {"n", n}, {"seed", seed},
                {"check_limit", check_limit}};
    emit(envelope("family", inputs, result, warnings));
  } else {
    std::cout << text.str();
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- report --

struct GraphNode {
  std::string id;
  std::string label;
  long long dim = 0;
  bool classical = false;
};

struct GraphEdge {
  std::string from, to, label;
};

void component_graph(int k, std::vector<GraphNode>* nodes, std::vector<GraphEdge>* edges) {
  if (k == 4) {
    K8Catalogue cat = special_k8();
    nodes->push_back({"m=0", "stratum m=0", cat.component_one[0].dim, true});
    nodes->push_back({"m=2", "stratum m=2", cat.component_one[1].dim, true});
    nodes->push_back({"infinity", "type infinity", cat.component_two[0].dim, true});
    nodes->push_back({"4'", "type 4'", cat.component_two[1].dim, true});
    edges->push_back({"m=0", "m=2", "classical deformation"});
    edges->push_back({"infinity", "4'", "QG-smoothing of the cone"});
    edges->push_back({"m=0", "4'", "elliptic-singularity limit"});
    return;
  }
  ComponentStructure c = component_structure(k);
  std::string last_classical;
  if (c.two_components) {
    nodes->push_back({"I", "component I (classical)", c.classical_dim, true});
    nodes->push_back({"II", "component II (classical)", c.classical_dim, true});
    edges->push_back({"I", "II", "semi-smooth divisor"});
    last_classical = "II";
  } else {
    nodes->push_back({"classical", "classical component", c.classical_dim, true});
    last_classical = "classical";
  }
  std::string previous = last_classical;
  for (std::size_t i = 0; i < c.trailing.size(); ++i) {
    std::string id = "m=" + std::to_string(c.trailing[i]);
    nodes->push_back({id, "stratum " + id, c.trailing_dims[i], false});
    edges->push_back({previous, id, "pencil degeneration"});
    previous = id;
  }
}

int run_report(long long k2, bool dot, bool as_json) {
  const int k = parse_k2(k2);
  require(k != 1, "K^2 = 2 has no standard component graph");
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  component_graph(k, &nodes, &edges);

  if (dot) {
    std::cout << "graph moduli_k2_" << k2 << " {\n  node [shape=box];\n";
    for (const GraphNode& n : nodes)
      std::cout << "  \"" << n.id << "\" [label=\"" << n.label << "\", dim=" << n.dim
                << ", classical=" << (n.classical ? "true" : "false") << "];\n";
    for (const GraphEdge& e : edges)
      std::cout << "  \"" << e.from << "\" -- \"" << e.to << "\" [label=\"" << e.label
                << "\"];\n";
    std::cout << "}\n";
    return 0;
  }
  json jnodes = json::array(), jedges = json::array();
  for (const GraphNode& n : nodes)
    jnodes.push_back(json{{"id", n.id}, {"label", n.label}, {"dim", n.dim},
                          {"classical", n.classical}});
  for (const GraphEdge& e : edges)
    jedges.push_back(json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
  json result{{"nodes", jnodes}, {"edges", jedges}};
  if (as_json) {
    emit(envelope("report", json{{"k2", k2}}, result, {}));
  } else {
    std::cout << "component adjacency at K^2 = " << k2 << "\n";
    for (const GraphNode& n : nodes)
      std::cout << "  node " << n.id << " (dim " << n.dim << ", "
                << (n.classical ? "classical" : "non-classical") << ")\n";
    for (const GraphEdge& e : edges)
      std::cout << "  edge " << e.from << " -- " << e.to << " [" << e.label << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic computations for stable Horikawa surfaces"};
  app.require_subcommand(1);

  // strata
  auto* strata_cmd = app.add_subcommand("strata", "list the strata for one K^2");
  long long strata_k2 = 0;
  bool strata_json = false;
  strata_cmd->add_option("--k2", strata_k2, "K^2 = 2k")->required();
  strata_cmd->add_flag("--json", strata_json, "emit a JSON envelope");

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "line bundle cohomology on F_m");
  int coh_m = 0;
  long long coh_sigma = 0, coh_gamma = 0;
  bool coh_json = false;
  coh_cmd->add_option("--m", coh_m, "Hirzebruch index")->required();
  coh_cmd->add_option("--sigma", coh_sigma, "coefficient of sigma_inf")->required();
  coh_cmd->add_option("--gamma", coh_gamma, "coefficient of Gamma")->required();
  coh_cmd->add_flag("--json", coh_json, "emit a JSON envelope");

  // tangent
  auto* tan_cmd = app.add_subcommand("tangent", "tangent sheaf cohomology of F_m");
  int tan_m = 0;
  bool tan_json = false;
  tan_cmd->add_option("--m", tan_m, "Hirzebruch index")->required();
  tan_cmd->add_flag("--json", tan_json, "emit a JSON envelope");

  // multmap
  auto* mm_cmd = app.add_subcommand("multmap", "multiplication map ranks");
  int mm_e = 0, mm_trials = 20, mm_imin = 2, mm_imax = 6;
  int mm_i_value = -1;
  std::string mm_p0, mm_p1;
  std::uint64_t mm_seed = 1;
  bool mm_json = false;
  mm_cmd->add_option("--e", mm_e, "pencil degree")->required();
  auto* mm_i_opt = mm_cmd->add_option("--i", mm_i_value, "symmetric power");
  mm_cmd->add_option("--p0", mm_p0, "comma-separated rational coefficients, ascending t0 power");
  mm_cmd->add_option("--p1", mm_p1, "comma-separated rational coefficients, ascending t0 power");
  mm_cmd->add_option("--trials", mm_trials, "seeded random pairs (sweep mode)");
  mm_cmd->add_option("--seed", mm_seed, "random seed");
  mm_cmd->add_option("--i-min", mm_imin, "sweep lower bound");
  mm_cmd->add_option("--i-max", mm_imax, "sweep upper bound");
  mm_cmd->add_flag("--json", mm_json, "emit a JSON envelope");

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "exact rank of the alpha map");
  int alpha_m = 0, alpha_k = 1;
  long long alpha_a = 0;
  std::uint64_t alpha_seed = 20240901;
  bool alpha_json = false;
  alpha_cmd->add_option("--m", alpha_m, "Hirzebruch index")->required();
  alpha_cmd->add_option("--a", alpha_a, "half the Gamma coefficient of the branch class")
      ->required();
  alpha_cmd->add_option("--k", alpha_k, "xi-vanishing order (1 or 2)")->required();
  alpha_cmd->add_option("--seed", alpha_seed, "random seed");
  alpha_cmd->add_flag("--json", alpha_json, "emit a JSON envelope");

  // deform
  auto* def_cmd = app.add_subcommand("deform", "tangent-space bookkeeping for a stratum");
  int def_k = 0, def_m = 0;
  bool def_exact = false, def_formula = false, def_json = false;
  int def_xi_value = -1;
  std::uint64_t def_seed = 20240901;
  def_cmd->add_option("--k", def_k, "half of K^2")->required();
  def_cmd->add_option("--m", def_m, "type")->required();
  def_cmd->add_flag("--exact", def_exact, "exact Cech rank (default)");
  def_cmd->add_flag("--formula", def_formula, "piecewise formula rank");
  auto* def_xi_opt = def_cmd->add_option("--xi-order", def_xi_value,
                                         "override the branch shape (0, 1 or 2)");
  def_cmd->add_option("--seed", def_seed, "random seed");
  def_cmd->add_flag("--json", def_json, "emit a JSON envelope");

  // family
  auto* fam_cmd = app.add_subcommand("family", "toric degeneration families");
  std::string fam_kind;
  int fam_d = 0, fam_n = 0;
  bool fam_check = false, fam_json = false;
  std::uint64_t fam_seed = 1;
  fam_cmd->add_option("--kind", fam_kind, "even|odd|k8|special")->required();
  fam_cmd->add_option("--d", fam_d, "pencil parameter d");
  fam_cmd->add_option("--n", fam_n, "family parameter n");
  fam_cmd->add_flag("--check-limit", fam_check, "verify the limit identities");
  fam_cmd->add_option("--seed", fam_seed, "random seed");
  fam_cmd->add_flag("--json", fam_json, "emit a JSON envelope");

  // report
  auto* rep_cmd = app.add_subcommand("report", "component adjacency graph");
  long long rep_k2 = 0;
  bool rep_dot = false, rep_json = false;
  rep_cmd->add_option("--k2", rep_k2, "K^2 = 2k")->required();
  rep_cmd->add_flag("--dot", rep_dot, "emit DOT");
  rep_cmd->add_flag("--json", rep_json, "emit a JSON envelope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*strata_cmd) return run_strata(strata_k2, strata_json);
    if (*coh_cmd) return run_cohomology(coh_m, coh_sigma, coh_gamma, coh_json);
    if (*tan_cmd) return run_tangent(tan_m, tan_json);
    if (*mm_cmd) {
      std::optional<int> i_single;
      if (mm_i_opt->count() > 0) i_single = mm_i_value;
      return run_multmap(mm_e, i_single, mm_p0, mm_p1, mm_trials, mm_seed, mm_imin, mm_imax,
                         mm_json);
    }
    if (*alpha_cmd) return run_alpha(alpha_m, alpha_a, alpha_k, alpha_seed, alpha_json);
    if (*def_cmd) {
      require(!(def_exact && def_formula), "choose one of --exact or --formula");
      RankSource src = def_formula ? RankSource::Formula : RankSource::Exact;
      std::optional<int> xi;
      if (def_xi_opt->count() > 0) xi = def_xi_value;
      return run_deform(def_k, def_m, src, xi, def_seed, def_json);
    }
    if (*fam_cmd) return run_family(fam_kind, fam_d, fam_n, fam_check, fam_seed, fam_json);
    if (*rep_cmd) return run_report(rep_k2, rep_dot, rep_json);
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
