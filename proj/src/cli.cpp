#include "superflow/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "superflow/catalog_groups.hpp"
#include "superflow/curve_lab.hpp"
#include "superflow/errors.hpp"
#include "superflow/fixed_points.hpp"
#include "superflow/flow_engine.hpp"
#include "superflow/invariant_solver.hpp"
#include "superflow/projection_lab.hpp"
#include "superflow/serialize.hpp"
#include "superflow/superflows.hpp"

namespace superflow {
namespace {

/// Bad flag values detected before any computation.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string format_double(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

std::string bound_text(const char* op, double bound) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s %g", op, bound);
  return buf;
}

/// Structured report: named checks with expected value, observed value, verdict.
class Report {
 public:
  explicit Report(const std::string& command) { doc_["command"] = command; }

  Json& operator[](const char* key) { return doc_[key]; }

  void check(const std::string& name, Json expected, Json got, bool pass) {
    checks_.push_back(Json{{"name", name}, {"expected", std::move(expected)}, {"got", std::move(got)}, {"pass", pass}});
    passed_ = passed_ && pass;
  }
  void check_le(const std::string& name, double got, double bound) {
    check(name, bound_text("<=", bound), got, std::isfinite(got) && got <= bound);
  }
  void check_eq(const std::string& name, long long expected, long long got) { check(name, expected, got, expected == got); }

  bool passed() const { return passed_; }

  Json finish() const {
    Json j = doc_;
    j["checks"] = checks_;
    j["pass"] = passed_;
    return j;
  }

 private:
  Json doc_;
  Json checks_ = Json::array();
  bool passed_ = true;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

int emit(const Report& r, std::ostream& out) {
  out << dump_json(r.finish()) << '\n';
  return r.passed() ? exit_pass : exit_verification_failure;
}

double parse_real(const std::string& text, const char* flag) {
  try {
    return parse_golden(text).to_double();
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Golden parse_exact(const std::string& text, const char* flag) {
  try {
    return parse_golden(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_real(item, "--start"));
  if (v.size() != 3) throw UsageError("--start expects three comma-separated values");
  return v;
}

template <class T, class F>
T parse_with(F f, const std::string& text, const char* flag) {
  try {
    return f(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

GroupSpec group_arg(const std::string& s) { return parse_with<GroupSpec>(parse_group_spec, s, "--group"); }
SuperflowName superflow_arg(const std::string& s) {
  return parse_with<SuperflowName>(parse_superflow_name, s, "--superflow");
}

Json scalar_json(const Golden& x) { return to_json(x); }
Json scalar_json(const Cyclotomic& x) { return to_json(x); }

template <class S>
Json character_json(const std::vector<S>& chi) {
  Json j = Json::array();
  for (const auto& c : chi) j.push_back(scalar_json(c));
  return j;
}

template <class S>
Json degree_json(const DegreeReport<S>& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json dens = Json::array();
    for (const auto& d : b.denominators) dens.push_back(to_json(d));
    Json nums = Json::array();
    for (const auto& n : b.numerators) {
      Json comps = Json::array();
      for (const auto& c : n) comps.push_back(to_json(c));
      nums.push_back(comps);
    }
    blocks.push_back(Json{{"character", character_json(b.character)},
                          {"relative_invariants", dens.size()},
                          {"numerator_dimension", nums.size()},
                          {"family_dimension", b.family_dimension()},
                          {"denominators", dens},
                          {"numerators", nums}});
  }
  return Json{{"degree", r.degree}, {"family_dimension", r.family_dimension()}, {"blocks", blocks}};
}

template <class S>
Json verdict_json(const SuperflowVerdict<S>& v) {
  Json j{{"exists", v.exists},
         {"reason", to_string(v.reason)},
         {"degree", v.degree},
         {"family_dimension", v.family_dimension}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json();
  j["witness_text"] = v.witness ? Json(v.witness->to_string()) : Json();
  j["extra_symmetry"] = v.extra_symmetry ? matrix_to_json(*v.extra_symmetry) : Json();
  Json sweep = Json::array();
  for (const auto& d : v.sweep) sweep.push_back(Json{{"degree", d.degree}, {"family_dimension", d.family_dimension()}});
  j["sweep"] = sweep;
  return j;
}

std::vector<double> start_point(SuperflowName name, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  switch (name) {
    case SuperflowName::A4: return {0.5 * u(rng), 0.5 * u(rng), 1.0 + 0.2 * u(rng)};
    case SuperflowName::P3:
    case SuperflowName::T_hat: return {0.5 * u(rng), 0.5 * u(rng), 0.5 * u(rng)};
    default: {
      std::normal_distribution<double> g;
      std::vector<double> x{g(rng), g(rng), g(rng)};
      const double n = std::hypot(x[0], x[1], x[2]);
      for (auto& c : x) c /= n;
      return x;
    }
  }
}

// Alphanumeric labels make column names; others are numbered.
std::string drift_column(const std::string& label, std::size_t k) {
  bool plain = !label.empty();
  for (char c : label) plain = plain && std::isalnum(static_cast<unsigned char>(c));
  return (plain ? label : "I" + std::to_string(k + 1)) + "_drift";
}

// ---- subcommands ----

int cmd_catalog_list(std::ostream& out) {
  Report r("catalog list");
  Json groups = Json::array();
  for (const auto& spec : default_catalog_specs()) {
    const int order = std::visit([](const auto& g) { return g.order(); }, build_catalog_group(spec));
    groups.push_back(Json{{"spec", to_string(spec)}, {"order", order}, {"expected_order", expected_order(spec)}});
    r.check_eq("order " + to_string(spec), expected_order(spec), order);
  }
  Json flows = Json::array();
  for (auto n : all_superflows()) flows.push_back(to_string(n));
  r["groups"] = groups;
  r["superflows"] = flows;
  return emit(r, out);
}

int cmd_catalog_show(const std::string& name_text, std::ostream& out) {
  const auto name = superflow_arg(name_text);
  const auto s = build_superflow(name);
  Report r("catalog show");
  const int order = std::visit([](const auto& g) { return g.order(); }, s.group);
  r["name"] = to_string(name);
  r["group"] = to_string(s.group_spec);
  r["group_order"] = order;
  r["spherical"] = s.spherical;
  r["genus"] = s.genus_metadata;
  r["field_text"] = s.field.to_string();
  r["field"] = to_json(s.field);
  Json ints = Json::array();
  for (std::size_t k = 0; k < s.first_integrals.size(); ++k)
    ints.push_back(Json{{"label", s.integral_labels[k]},
                        {"text", s.first_integrals[k].to_string()},
                        {"poly", to_json(s.first_integrals[k])}});
  r["integrals"] = ints;
  r.check_eq("group order", expected_order(s.group_spec), order);
  r.check("field invariant under group", true, field_invariant_under(s.field, s.group),
          field_invariant_under(s.field, s.group));
  return emit(r, out);
}

int cmd_catalog_group(const std::string& spec_text, std::ostream& out) {
  const auto spec = group_arg(spec_text);
  const auto group = build_catalog_group(spec);
  Report r("catalog group");
  r["spec"] = to_string(spec);
  std::visit(
      [&](const auto& g) {
        r["group"] = to_json(g);
        r.check_eq("order", expected_order(spec), g.order());
      },
      group);
  return emit(r, out);
}

int cmd_solve_invariant(const std::string& spec_text, int k, int expect_dimension, std::ostream& out) {
  const auto spec = group_arg(spec_text);
  const auto group = build_catalog_group(spec);
  Report r("solve-invariant");
  r["group"] = to_string(spec);
  r["max_denom_degree"] = k;
  std::visit(
      [&](const auto& g) {
        r["order"] = g.order();
        Json degrees = Json::array();
        int first_dimension = 0, first_degree = -1;
        for (int d = 0; d <= k; ++d) {
          const auto rep = solve_invariant_family(g, d);
          degrees.push_back(degree_json(rep));
          if (first_degree < 0 && rep.family_dimension() > 0) {
            first_degree = d;
            first_dimension = rep.family_dimension();
          }
        }
        r["degrees"] = degrees;
        r["first_nonzero_degree"] = first_degree;
        r["first_nonzero_dimension"] = first_dimension;
        if (expect_dimension >= 0) r.check_eq("first nonzero dimension", expect_dimension, first_dimension);
      },
      group);
  return emit(r, out);
}

int cmd_verdict(const std::string& spec_text, int k, const std::string& expect_reason, std::ostream& out) {
  const auto spec = group_arg(spec_text);
  const auto verdict = catalog_verdict(spec, k);
  Report r("verdict");
  r["group"] = to_string(spec);
  r["max_k"] = k;
  std::visit(
      [&](const auto& v) {
        r["verdict"] = verdict_json(v);
        if (!expect_reason.empty()) r.check("reason", expect_reason, to_string(v.reason), to_string(v.reason) == expect_reason);
      },
      verdict);
  return emit(r, out);
}

struct OrbitArgs {
  std::string superflow = "I", start, stepper = "rk45", direction = "backward", out;
  double t = 1.0, tol = 1e-10;
  bool normalize = false;
};

int cmd_orbit(const OrbitArgs& a, std::ostream& out) {
  const auto name = superflow_arg(a.superflow);
  auto x0 = parse_point(a.start);
  if (a.direction != "backward" && a.direction != "forward") throw UsageError("--direction must be backward or forward");
  IntegrationOptions opt;
  opt.stepper = parse_with<Stepper>(parse_stepper, a.stepper, "--stepper");
  const auto s = build_superflow(name);
  if (a.normalize) {
    const double n = std::hypot(x0[0], x0[1], x0[2]);
    if (n == 0) throw UsageError("--start is the origin");
    for (auto& c : x0) c /= n;
  }
  const auto trace = a.direction == "backward"
                         ? integrate_backward_system(s, x0, a.t, a.tol, opt)
                         : integrate_field(s.field, x0, a.t, a.tol, opt, s.first_integrals, s.integral_labels);

  std::ostringstream csv;
  csv << "t,x,y,z";
  for (std::size_t k = 0; k < s.first_integrals.size(); ++k) csv << ',' << drift_column(s.integral_labels[k], k);
  csv << '\n';
  std::vector<double> start_values;
  for (const auto& f : s.first_integrals) start_values.push_back(f.evaluate_double(trace.states.front()));
  std::vector<double> worst(s.first_integrals.size(), 0.0);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    csv << format_double(trace.times[i]);
    for (double c : trace.states[i]) csv << ',' << format_double(c);
    for (std::size_t k = 0; k < s.first_integrals.size(); ++k) {
      const double d = std::abs(s.first_integrals[k].evaluate_double(trace.states[i]) - start_values[k]);
      worst[k] = std::max(worst[k], d);
      csv << ',' << format_double(d);
    }
    csv << '\n';
  }

  Report r("orbit");
  r["superflow"] = to_string(name);
  r["direction"] = a.direction;
  r["stepper"] = to_string(opt.stepper);
  r["t"] = a.t;
  r["tol"] = a.tol;
  r["samples"] = trace.times.size();
  r["final_state"] = trace.states.back();
  for (std::size_t k = 0; k < worst.size(); ++k)
    r.check_le(s.integral_labels[k] + " drift", worst[k], std::max(10 * a.tol, 1e-12));
  if (a.out.empty()) {
    out << csv.str();
    return r.passed() ? exit_pass : exit_verification_failure;
  }
  write_file(a.out, csv.str());
  r["out"] = a.out;
  return emit(r, out);
}

struct FlowcheckArgs {
  std::string superflow = "all";
  int cases = 20;
  unsigned seed = 1;
  double tol = 1e-7, t_max = 0.2;
};

int cmd_flowcheck(const FlowcheckArgs& a, std::ostream& out) {
  std::vector<SuperflowName> names;
  if (a.superflow == "all") names = all_superflows();
  else names.push_back(superflow_arg(a.superflow));
  Report r("flowcheck");
  r["seed"] = a.seed;
  r["cases"] = a.cases;
  std::mt19937 rng(a.seed);
  std::uniform_real_distribution<double> time(0.0, a.t_max);
  Json details = Json::array();
  for (auto name : names) {
    const auto s = build_superflow(name);
    double worst = 0;
    Json rows = Json::array();
    for (int k = 0; k < a.cases; ++k) {
      const auto x = start_point(name, rng);
      const double t = time(rng), u = time(rng);
      const auto rep = check_translation_equation(s.field, x, t, u, a.tol);
      worst = std::max(worst, rep.residual);
      rows.push_back(Json{{"x", x}, {"t", t}, {"s", u}, {"residual", rep.residual}});
    }
    details.push_back(Json{{"superflow", to_string(name)}, {"max_residual", worst}, {"cases", rows}});
    r.check_le("translation " + to_string(name), worst, a.tol);
  }
  r["results"] = details;
  return emit(r, out);
}

bool near_rational_level(double xi) {
  const double target = -std::pow(std::numbers::phi, 3) / 6;
  return std::abs(xi - target) <= 1e-12;
}

int cmd_curves_verify(const std::string& xi_text, double t, double tol, std::ostream& out) {
  const double xi = parse_real(xi_text, "--xi");
  if (!admissible_xi(xi)) throw UsageError("--xi must lie strictly between -(2+sqrt5)/5 and (2+sqrt5)/27");
  const auto s = build_superflow(SuperflowName::I);
  const auto trace = integrate_backward_system(s, level_set_start(xi), t, tol);
  Report r("curves verify");
  r["xi"] = xi;
  r["t"] = t;
  r["samples"] = trace.times.size();
  r.check_le("start level", std::abs(measured_xi(trace) - xi), 1e-12);
  for (auto c : {PQRChoice::P, PQRChoice::Q, PQRChoice::R})
    r.check_le("prop2 curve " + to_string(c), curve_residual_prop2(trace, xi, c), 1e-7);
  const auto red = triple_reduction(trace, xi);
  r.check_le("reduced curve", red.curve_residual, 1e-7);
  r.check_le("root recovery", red.root_recovery, 1e-8);
  r.check_le("upsilon agreement", red.upsilon_agreement, 1e-8);
  r["reduced_segments"] = red.segments;
  r["reduced_skipped"] = red.skipped;
  const auto rb = verify_recu_bas(trace, xi);
  r.check_le("recu", rb.recu, 1e-8);
  r.check_le("bas", rb.bas, 1e-8);
  r.check_le("discriminant", rb.discriminant, 1e-8);
  r.check_le("rys", rb.rys, 1e-9);
  if (near_rational_level(xi)) {
    const auto rc = rational_curve_residual(trace);
    r.check_le("rational curve as printed", rc.printed_residual, 1e-7);
    r.check_le("rational curve without the factor 4", rc.corrected_residual, 1e-7);
  }
  return emit(r, out);
}

int cmd_curves_identities(const std::string& xi_text, std::ostream& out) {
  Report r("curves identities");
  IdentityReport rep;
  if (xi_text == "symbolic") {
    r["xi"] = "symbolic";
    rep = verify_identity_chain();
  } else {
    const Golden xi = parse_exact(xi_text, "--xi");
    r["xi"] = to_json(xi);
    rep = verify_identity_chain(xi);
  }
  for (const auto& c : rep.checks) r.check(c.name, "0", c.holds ? "0" : c.offending, c.holds);
  return emit(r, out);
}

int cmd_classify(const std::string& xi_text, int resolution, std::ostream& out) {
  const Golden exact = parse_exact(xi_text, "--xi");
  const double xi = exact.to_double();
  const auto grid = classify_level_set(xi, resolution);
  const auto ref = classify_level_set_exact(exact);
  Report r("classify");
  r["xi"] = grid.xi;
  r["resolution"] = grid.resolution;
  r["case"] = grid.case_number;
  r["component_kind"] = to_string(grid.component_kind);
  r["component_count"] = grid.component_count;
  r["expected_count"] = grid.expected_count;
  r.check_eq("component count", grid.expected_count, grid.component_count);
  r.check_eq("exact case", ref.case_number, grid.case_number);
  return emit(r, out);
}

struct ProjectArgs {
  std::string superflow = "I", kind = "scaled", figure, out, csv;
  double window = 7;
  int grid = 29;
};

int cmd_project(const ProjectArgs& a, std::ostream& out) {
  if (a.grid < 2 || a.grid > 400) throw UsageError("--grid must be in [2, 400]");
  if (!(a.window > 0)) throw UsageError("--window must be positive");
  FigureData fig;
  Report r("project");
  if (!a.figure.empty()) {
    const auto kind = parse_with<FigureKind>(parse_figure_kind, a.figure, "--figure");
    fig = build_figure(kind, a.grid);
    r["figure"] = to_string(kind);
  } else {
    const auto name = superflow_arg(a.superflow);
    const auto kind = parse_with<ProjectionKind>(parse_projection_kind, a.kind, "--kind");
    fig = build_projection_figure(name, kind, a.window, a.grid);
    r["superflow"] = to_string(name);
    r["kind"] = to_string(kind);
  }
  r["window"] = fig.window;
  r["grid"] = a.grid;
  r["boundary_curves"] = fig.boundary_curves;
  r["closed_curves"] = fig.closed_curves.size();
  r["areas"] = fig.areas;
  if (!a.figure.empty()) {
    switch (fig.kind) {
      case FigureKind::fig2:
      case FigureKind::fig3: r.check_eq("boundary curves", 6, fig.boundary_curves); break;
      case FigureKind::fig4: r.check_eq("boundary circles", 4, count_svg_elements(fig.svg, "circle", "boundary")); break;
      case FigureKind::quadratic_deformation: {
        r.check_eq("closed curves", 7, static_cast<long long>(fig.closed_curves.size()));
        double worst = 0;
        for (double area : fig.areas) worst = std::max(worst, std::abs(area - std::numbers::pi) / std::numbers::pi);
        r.check_le("relative area deviation from pi", worst, 0.01);
        break;
      }
    }
  }
  if (!a.csv.empty()) {
    write_file(a.csv, fig.csv);
    r["csv"] = a.csv;
  }
  if (a.out.empty()) {
    out << fig.svg;
    return r.passed() ? exit_pass : exit_verification_failure;
  }
  write_file(a.out, fig.svg);
  r["out"] = a.out;
  return emit(r, out);
}

int cmd_prop_ext(int n, std::ostream& out) {
  const auto rep = verify_prop_ext(n);
  Report r("prop-ext");
  r["n"] = n;
  r["group_order"] = rep.group_order;
  r["ambient_dimension"] = rep.ambient_dimension;
  r.check_eq("constrained dimension", 1, rep.constrained_dimension);
  r.check("a = b = 0", true, rep.a_b_eliminated, rep.a_b_eliminated);
  r.check_eq("unconstrained dimension", 1, rep.unconstrained_dimension);
  r.check("matches Q", true, rep.matches_q_hat, rep.matches_q_hat);
  r.check("Q invariant", true, rep.q_invariant_under_base, rep.q_invariant_under_base);
  r["q_field"] = symmetric_q_field(n).to_string();
  return emit(r, out);
}

template <class S>
int first_nonzero_dimension(const GroupSpec& spec, int max_degree) {
  const auto g = std::get<MatrixGroup<S>>(build_catalog_group(spec));
  for (int d = 0; d <= max_degree; ++d) {
    const int dim = solve_invariant_family(g, d).family_dimension();
    if (dim > 0) return dim;
  }
  return 0;
}

int cmd_verify_all(std::ostream& out) {
  Report r("verify --all");
  for (const char* spec : {"I", "T_hat", "O", "prism:3", "antiprism:4", "I_pm"}) {
    const auto gs = parse_group_spec(spec);
    const int order = std::visit([](const auto& g) { return g.order(); }, build_catalog_group(gs));
    r.check_eq(std::string("order ") + spec, expected_order(gs), order);
  }

  {
    const auto g = std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("I")));
    const auto w = sphere_integral();
    const auto space = solve_invariant_space(g, w * w);
    r.check_eq("icosahedral invariant dimension", 1, space.dimension);
    bool proportional = false;
    if (space.dimension == 1) {
      const auto f = proportionality_factor(space.basis.front(), icosahedral_field());
      proportional = f.has_value() && !f->is_zero();
    }
    r.check("icosahedral basis proportional to the catalog field", true, proportional, proportional);
  }

  r.check_eq("antiprism:4 first dimension", 1, first_nonzero_dimension<Cyclotomic>(parse_group_spec("antiprism:4"), 1));
  r.check_eq("antiprism:6 first dimension", 2, first_nonzero_dimension<Cyclotomic>(parse_group_spec("antiprism:6"), 3));
  r.check_eq("antiprism:8 first dimension", 3, first_nonzero_dimension<Cyclotomic>(parse_group_spec("antiprism:8"), 5));
  r.check_eq("antiprism:2/diag dimension", 2, first_nonzero_dimension<Cyclotomic>(parse_group_spec("antiprism:2/diag"), 0));
  {
    const auto v = std::get<SuperflowVerdict<Cyclotomic>>(catalog_verdict(parse_group_spec("DdCd:2"), 2));
    r.check("DdCd:2 family dimension", ">= 2", v.family_dimension, v.family_dimension >= 2);
  }
  for (int n : {3, 4}) {
    const bool ok = verify_prop_ext(n).passed();
    r.check("prop-ext n = " + std::to_string(n), true, ok, ok);
  }
  for (auto name : all_superflows()) {
    const bool zero = divergence(build_superflow(name).field).num.is_zero();
    r.check("divergence " + to_string(name), "0", zero ? "0" : "nonzero", zero);
  }
  {
    bool zero = true;
    for (const auto& c : curl(tetrahedral_field())) zero = zero && c.num.is_zero();
    r.check("curl T_hat", "0", zero ? "0" : "nonzero", zero);
  }
  {
    const auto s = build_superflow(SuperflowName::I);
    const auto pts = enumerate_fixed_points(s);
    r.check_eq("icosahedral fixed points", 62, static_cast<long long>(pts.size()));
    int sum = 0;
    bool indices = true;
    for (const auto& p : pts) {
      const int idx = numeric_index(s, p);
      indices = indices && idx == p.index;
      sum += idx;
    }
    r.check("fixed point indices", true, indices, indices);
    r.check_eq("index sum", 2, sum);
  }
  for (const auto& c : verify_identity_chain().checks) r.check("identity " + c.name, "0", c.holds ? "0" : c.offending, c.holds);
  {
    const bool zero = orbit_equation_numerator().is_zero();
    r.check("orbit equation numerator", "0", zero ? "0" : "nonzero", zero);
  }
  return emit(r, out);
}

void add_usage_text(CLI::App& app) {
  app.footer(
      "Exit codes: 0 pass, 1 verification failure, 2 usage error.\n"
      "Examples:\n"
      "  superflow catalog show I\n"
      "  superflow solve-invariant --group I --max-denom-degree 4\n"
      "  superflow orbit --superflow I --start 0.6,0,0.8 --t 1.0 --tol 1e-10 --out trace.csv\n"
      "  superflow curves verify --xi -0.05 --t 1.0\n"
      "  superflow project --superflow I --kind scaled --window 7 --out fig2.svg\n"
      "  superflow verify --all");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective superflows: catalog, invariant solving, orbits, curves and projections", "superflow"};
  app.require_subcommand(1);
  add_usage_text(app);

  auto* catalog = app.add_subcommand("catalog", "inspect catalog groups and superflows");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog groups with orders");
  std::string show_name, group_name;
  catalog->add_subcommand("show", "show a superflow")->add_option("name", show_name, "T_hat, O, I, P3 or A4")->required();
  catalog->add_subcommand("group", "dump a group")->add_option("spec", group_name, "group spec")->required();

  std::string solve_group;
  int max_denom = 0, expect_dim = -1;
  auto* solve = app.add_subcommand("solve-invariant", "solve for invariant fields up to a denominator degree");
  solve->add_option("--group", solve_group, "group spec")->required();
  solve->add_option("--max-denom-degree", max_denom, "largest denominator degree")->required()->check(CLI::Range(0, 12));
  solve->add_option("--expect-dimension", expect_dim, "expected first nonzero dimension")->check(CLI::NonNegativeNumber);

  std::string verdict_group, expect_reason;
  int max_k = 4;
  auto* verdict = app.add_subcommand("verdict", "decide whether a group has a superflow");
  verdict->add_option("--group", verdict_group, "group spec")->required();
  verdict->add_option("--max-k", max_k, "largest denominator degree")->check(CLI::Range(0, 12));
  verdict->add_option("--expect-reason", expect_reason, "expected verdict reason");

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "integrate an orbit and record integral drift");
  orbit_cmd->add_option("--superflow", orbit.superflow, "superflow name");
  orbit_cmd->add_option("--start", orbit.start, "x,y,z")->required();
  orbit_cmd->add_option("--t", orbit.t, "end time");
  orbit_cmd->add_option("--tol", orbit.tol, "integrator tolerance")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--out", orbit.out, "CSV output path");
  orbit_cmd->add_option("--stepper", orbit.stepper, "rk45 or rk4");
  orbit_cmd->add_option("--direction", orbit.direction, "backward (p' = -V(p)) or forward");
  orbit_cmd->add_flag("--normalize", orbit.normalize, "scale the start to the unit sphere");

  FlowcheckArgs flow;
  auto* flow_cmd = app.add_subcommand("flowcheck", "randomized translation-equation checks");
  flow_cmd->add_option("--superflow", flow.superflow, "superflow name or all");
  flow_cmd->add_option("--cases", flow.cases, "cases per superflow")->check(CLI::Range(1, 10000));
  flow_cmd->add_option("--seed", flow.seed, "random seed");
  flow_cmd->add_option("--tol", flow.tol, "residual bound")->check(CLI::PositiveNumber);
  flow_cmd->add_option("--t-max", flow.t_max, "t and s are drawn from [0, t-max]")->check(CLI::Range(0.0, 1.0));

  std::string xi_verify = "-0.05", xi_ident = "symbolic";
  double curve_t = 1.0, curve_tol = 1e-10;
  auto* curves = app.add_subcommand("curves", "orbit curve residuals and exact identities");
  curves->require_subcommand(1);
  auto* cverify = curves->add_subcommand("verify", "numeric residuals along a level-set orbit");
  cverify->add_option("--xi", xi_verify, "level value, e.g. -0.05 or -phi^3/6");
  cverify->add_option("--t", curve_t, "orbit length")->check(CLI::PositiveNumber);
  cverify->add_option("--tol", curve_tol, "integrator tolerance")->check(CLI::PositiveNumber);
  auto* cident = curves->add_subcommand("identities", "exact identity chain");
  cident->add_option("--xi", xi_ident, "symbolic or an exact value");

  std::string xi_class;
  int resolution = 256;
  auto* classify = app.add_subcommand("classify", "count level-set components of V on the sphere");
  classify->add_option("--xi", xi_class, "level value")->required();
  classify->add_option("--resolution", resolution, "icosphere subdivision")->check(CLI::Range(2, 4096));

  ProjectArgs proj;
  auto* project = app.add_subcommand("project", "planar projections and figures");
  project->add_option("--superflow", proj.superflow, "superflow name");
  project->add_option("--kind", proj.kind, "scaled, true, orthogonal-x0 or orthogonal-diag");
  project->add_option("--window", proj.window, "half width of the plotted square");
  project->add_option("--grid", proj.grid, "glyph rows and columns");
  project->add_option("--figure", proj.figure, "fig2, fig3, fig4 or quadratic-deformation");
  project->add_option("--out", proj.out, "SVG output path");
  project->add_option("--csv", proj.csv, "CSV output path");

  int prop_n = 3;
  auto* prop = app.add_subcommand("prop-ext", "symmetric group extension check");
  prop->add_option("--n", prop_n, "dimension")->check(CLI::Range(3, 6));

  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "run the exact identity suite");
  verify->add_flag("--all", verify_all, "run every check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (catalog->parsed()) {
      if (catalog->got_subcommand("list")) return cmd_catalog_list(out);
      if (catalog->got_subcommand("show")) return cmd_catalog_show(show_name, out);
      return cmd_catalog_group(group_name, out);
    }
    if (solve->parsed()) return cmd_solve_invariant(solve_group, max_denom, expect_dim, out);
    if (verdict->parsed()) return cmd_verdict(verdict_group, max_k, expect_reason, out);
    if (orbit_cmd->parsed()) return cmd_orbit(orbit, out);
    if (flow_cmd->parsed()) return cmd_flowcheck(flow, out);
    if (cverify->parsed()) return cmd_curves_verify(xi_verify, curve_t, curve_tol, out);
    if (cident->parsed()) return cmd_curves_identities(xi_ident, out);
    if (classify->parsed()) return cmd_classify(xi_class, resolution, out);
    if (project->parsed()) return cmd_project(proj, out);
    if (prop->parsed()) return cmd_prop_ext(prop_n, out);
    if (verify->parsed()) return cmd_verify_all(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << '\n';
    return exit_verification_failure;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return exit_verification_failure;
  }
  err << app.help();
  return exit_usage;
}

}  // namespace superflow
