// Command-line front end: classification, residual evaluation, verification
// suites, parameter sweeps, energy/degree computation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bitensor/atlas.hpp"
#include "bitensor/suites.hpp"

using nlohmann::json;
using namespace bitensor;

namespace {

// Radians only; "pi" tokens parse exactly: [+-][k]pi[/d] (e.g. pi/4, 3pi/4, -pi/2).
double parse_angle(const std::string& token) {
  std::string s;
  for (char ch : token) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InvalidParameter("empty angle");
  double sign = 1.0;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }
  const std::size_t pi_at = s.find("pi", pos);
  if (pi_at == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s.substr(pos), &used);
    if (pos + used != s.size()) throw InvalidParameter("bad angle '" + token + "'");
    return sign * v;
  }
  double mult = 1.0;
  if (pi_at > pos) {
    std::size_t used = 0;
    mult = std::stod(s.substr(pos, pi_at - pos), &used);
    if (pos + used != pi_at) throw InvalidParameter("bad angle '" + token + "'");
  }
  double denom = 1.0;
  std::size_t after = pi_at + 2;
  if (after < s.size()) {
    if (s[after] != '/') throw InvalidParameter("bad angle '" + token + "'");
    std::size_t used = 0;
    denom = std::stod(s.substr(after + 1), &used);
    if (after + 1 + used != s.size() || denom == 0.0) {
      throw InvalidParameter("bad angle '" + token + "'");
    }
  }
  return sign * mult * M_PI / denom;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct MetricOptions {
  bool flat = false;
  bool nonflat = false;
  double k = 2.0;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--flat", flat, "flat torus -> sine-model sphere");
    cmd->add_flag("--nonflat", nonflat, "warp k+cos r torus -> cosine-model sphere");
    cmd->add_option("-k,--k", k, "offset of the non-flat warp (k > 1)");
  }

  void resolve() const {
    if (flat == nonflat) {
      throw InvalidParameter("choose exactly one of --flat / --nonflat");
    }
    if (nonflat && !(k > 1.0)) throw InvalidParameter("--nonflat needs k > 1");
  }

  WarpedSurface domain() const {
    return flat ? WarpedSurface::flat_torus() : WarpedSurface::nonflat_torus(k);
  }
  WarpedSurface target() const {
    return flat ? WarpedSurface::sine_sphere() : WarpedSurface::cosine_sphere();
  }
};

struct MapOptions {
  double a = 0, b = 0, m = 0, n = 0, l = 0;
  std::string c = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("-a", a, "rho coefficient of r");
    cmd->add_option("-b", b, "rho coefficient of theta");
    cmd->add_option("-c", c, "rho constant (radians; pi tokens ok)");
    cmd->add_option("-m", m, "phi coefficient of r");
    cmd->add_option("-n", n, "phi coefficient of theta");
    cmd->add_option("-l", l, "phi constant");
  }

  LinearMap map() const { return {a, b, parse_angle(c), m, n, l}; }
};

struct GridOptions {
  std::string grid;
  double tol_h = -1, tol_b = -1, margin = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "grid size NxM (default 128x128)");
    cmd->add_option("--tol-h", tol_h, "harmonic residual tolerance");
    cmd->add_option("--tol-b", tol_b, "biharmonic residual tolerance");
    cmd->add_option("--pole-margin", margin, "pole exclusion margin");
  }

  GridSpec spec() const {
    GridSpec g;
    if (!grid.empty()) {
      const std::size_t x = grid.find('x');
      if (x == std::string::npos) throw InvalidParameter("--grid wants NxM");
      g.nr = std::stoi(grid.substr(0, x));
      g.ntheta = std::stoi(grid.substr(x + 1));
    }
    if (tol_h > 0) g.tolerance_harmonic = tol_h;
    if (tol_b > 0) g.tolerance_biharmonic = tol_b;
    if (margin > 0) g.pole_margin = margin;
    g.validate();
    return g;
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot open output file '" + path + "'");
  out << text;
}

json report_to_json(const SuiteReport& rep) {
  json fails = json::array();
  for (const SuiteFailure& f : rep.failures) {
    fails.push_back({{"input", f.input},
                     {"expected", f.expected},
                     {"got", f.got},
                     {"residual", f.residual}});
  }
  json j{{"suite", rep.suite},
         {"cases", rep.cases},
         {"failures", fails},
         {"max_residual", rep.max_residual}};
  if (!rep.metrics.empty()) j["metrics"] = rep.metrics;
  return j;
}

std::string verdict_line(const ClassificationResult& res) {
  switch (res.case_tag) {
    case CaseTag::A:
    case CaseTag::B:
    case CaseTag::C:
      return std::string(to_string(res.verdict)) + " (case " +
             to_string(res.case_tag) + ")";
    case CaseTag::NonFlatHarmonic:
      return "Harmonic (non-flat)";
    case CaseTag::None:
      return to_string(res.verdict);
  }
  return to_string(res.verdict);
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const std::string& kv : kvs) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidParameter("--param wants name=value");
    out[kv.substr(0, eq)] = parse_angle(kv.substr(eq + 1));
  }
  return out;
}

int cmd_classify(const MetricOptions& metric, const MapOptions& mapopt,
                 const std::string& format) {
  metric.resolve();
  const LinearMap map = mapopt.map();
  const ClassificationResult res =
      metric.flat ? classify_flat(map) : classify_nonflat(map, metric.k);
  if (format == "json") {
    json j{{"verdict", to_string(res.verdict)},
           {"case", to_string(res.case_tag)},
           {"witness", res.witness}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << verdict_line(res) << "\n";
    std::cout << "witness: " << res.witness << "\n";
  }
  return 0;
}

int cmd_residual(const MetricOptions& metric, const MapOptions& mapopt,
                 const GridOptions& gridopt, const std::vector<double>& point,
                 double generic_h, const std::string& format) {
  metric.resolve();
  const LinearMap map = mapopt.map();
  const WarpedSurface dom = metric.domain();
  const WarpedSurface tgt = metric.target();

  json j;
  std::ostringstream text;
  if (!point.empty()) {
    const double r = point[0], th = point[1];
    const TensionVector tv = tension_linear(dom, tgt, map, r, th);
    const BitensionResidual res = bitension_residual_linear(dom, tgt, map, r, th);
    j = {{"point", {r, th}},
         {"tension", {tv.t1, tv.t2}},
         {"bitension", {res.r1, res.r2}}};
    text << "tension:   (" << fmt17(tv.t1) << ", " << fmt17(tv.t2) << ")  |.| = "
         << fmt17(tv.norm()) << "\n"
         << "bitension: (" << fmt17(res.r1) << ", " << fmt17(res.r2) << ")  |.| = "
         << fmt17(res.norm()) << "\n";
    if (generic_h > 0) {
      const BitensionResidual fd =
          bitension_generic(dom, tgt, lift(map), r, th, generic_h);
      j["bitension_fd"] = {fd.r1, fd.r2};
      j["fd_gap"] = std::hypot(fd.r1 - res.r1, fd.r2 - res.r2);
      text << "bitension (finite differences, h=" << fmt17(generic_h) << "): ("
           << fmt17(fd.r1) << ", " << fmt17(fd.r2) << "), gap "
           << fmt17(std::hypot(fd.r1 - res.r1, fd.r2 - res.r2)) << "\n";
    }
  } else {
    const GridSpec grid = gridopt.spec();
    const ResidualScan scan = scan_residuals(dom, tgt, map, grid);
    j = {{"max_tension", scan.max_tension},
         {"max_bitension", scan.max_bitension},
         {"grid_points", scan.points},
         {"harmonic", scan.max_tension < grid.tolerance_harmonic},
         {"biharmonic", scan.max_bitension < grid.tolerance_biharmonic}};
    text << "max tension residual:   " << fmt17(scan.max_tension) << "\n"
         << "max bitension residual: " << fmt17(scan.max_bitension) << "\n"
         << "harmonic: " << (scan.max_tension < grid.tolerance_harmonic ? "yes" : "no")
         << ", biharmonic: "
         << (scan.max_bitension < grid.tolerance_biharmonic ? "yes" : "no") << "\n";
  }
  std::cout << (format == "json" ? j.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_verify(const std::string& suite, unsigned seed, int samples, double k,
               const std::string& out) {
  const SuiteReport rep = run_suite_by_name(suite, seed, samples, k);
  write_output(report_to_json(rep).dump(2) + "\n", out);
  if (!out.empty()) {
    std::cout << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
              << rep.cases << " cases, " << rep.failures.size()
              << " failures, max residual " << fmt17(rep.max_residual) << ")\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_sweep(const std::string& family, const std::string& from_s,
              const std::string& to_s, int steps, const MapOptions& mapopt,
              const GridOptions& gridopt, const std::string& out) {
  const double from = parse_angle(from_s), to = parse_angle(to_s);
  const GridSpec grid = gridopt.spec();
  std::vector<SweepRow> rows;
  if (family == "phi-s") {
    rows = sweep_phi_s(from, to, steps, grid);
  } else if (family == "c-scan") {
    rows = sweep_c(mapopt.a, mapopt.b, mapopt.m, mapopt.n, from, to, steps, grid);
  } else {
    throw InvalidParameter("sweep --family must be phi-s or c-scan");
  }
  std::ostringstream csv;
  csv << "param,max_residual_biharmonic,max_residual_harmonic,energy,bienergy\n";
  for (const SweepRow& row : rows) {
    csv << fmt17(row.param) << "," << fmt17(row.max_residual_biharmonic) << ","
        << fmt17(row.max_residual_harmonic) << "," << fmt17(row.energy) << ","
        << fmt17(row.bienergy) << "\n";
  }
  write_output(csv.str(), out);
  return 0;
}

struct ResolvedMap {
  WarpedSurface domain;
  WarpedSurface target;
  std::variant<LinearMap, SmoothMap> map;
  std::string label;
};

ResolvedMap resolve_map(const MetricOptions& metric, const MapOptions& mapopt,
                        int example_id, const std::string& example_label,
                        const std::vector<std::string>& params) {
  if (example_id > 0 || !example_label.empty()) {
    const int id = example_id > 0 ? example_id : example_id_from_label(example_label);
    MapSpec spec = example_map(id, parse_params(params));
    return {spec.domain, spec.target, spec.map, spec.label};
  }
  metric.resolve();
  return {metric.domain(), metric.target(), mapopt.map(), "explicit"};
}

int cmd_energy(const ResolvedMap& rm, const GridOptions& gridopt,
               const std::string& format) {
  const GridSpec grid = gridopt.spec();
  double e, e2;
  if (std::holds_alternative<LinearMap>(rm.map)) {
    const LinearMap& map = std::get<LinearMap>(rm.map);
    e = energy(rm.domain, rm.target, map, grid);
    e2 = bienergy(rm.domain, rm.target, map, grid);
  } else {
    const SmoothMap& map = std::get<SmoothMap>(rm.map);
    e = energy(rm.domain, rm.target, map, grid);
    e2 = bienergy(rm.domain, rm.target, map, grid);
  }
  if (format == "json") {
    std::cout << json{{"energy", e}, {"bienergy", e2}}.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "energy,bienergy\n" << fmt17(e) << "," << fmt17(e2) << "\n";
  } else {
    std::cout << "energy:   " << fmt17(e) << "\nbienergy: " << fmt17(e2) << "\n";
  }
  return 0;
}

int cmd_degree(const ResolvedMap& rm, const GridOptions& gridopt,
               const std::string& format) {
  const GridSpec grid = gridopt.spec();
  const double deg =
      std::holds_alternative<LinearMap>(rm.map)
          ? degree(rm.domain, rm.target, std::get<LinearMap>(rm.map), grid)
          : degree(rm.domain, rm.target, std::get<SmoothMap>(rm.map), grid);
  if (format == "json") {
    std::cout << json{{"degree", deg}, {"nearest_integer", std::round(deg)}}.dump(2)
              << "\n";
  } else {
    std::cout << "degree: " << fmt17(deg) << " (nearest integer "
              << fmt17(std::round(deg)) << ")\n";
  }
  return 0;
}

int cmd_atlas(int id, const std::string& label, const std::vector<std::string>& params,
              bool list, const std::string& format) {
  if (list) {
    std::cout << "1 lawson-hopf    rho=2kr, phi=(m-n)theta        params: k,m,n\n"
              << "2 clifford-hopf  rho=2s, phi=r-theta             params: s\n"
              << "3 brendle-hopf   rho=2(alpha0+alpha1 r), r-theta params: alpha0,alpha1\n"
              << "4 ou-hopf        rho=-r-theta+c0, phi=theta      params: c0 (default pi)\n"
              << "5 gauss          rho=r, phi=theta (cosine model) params: a,b (b>a>0)\n"
              << "6 radial         rho=alpha(r), phi=theta         params: a,b[,raw]\n";
    return 0;
  }
  const int eid = id > 0 ? id : example_id_from_label(label);
  const MapSpec spec = example_map(eid, parse_params(params));

  json j{{"id", eid}, {"label", spec.label}};
  std::ostringstream text;
  text << "example " << eid << " (" << spec.label << ")\n";
  const bool flat_domain = spec.domain.warp.kind() == WarpKind::Unit;
  if (spec.linear()) {
    const LinearMap& map = std::get<LinearMap>(spec.map);
    text << "map: " << format_map(map) << "\n";
    j["map"] = {map.a, map.b, map.c, map.m, map.n, map.l};
    const ClassificationResult res =
        flat_domain ? classify_flat(map)
                    : classify_nonflat(map, spec.domain.warp.offset());
    text << verdict_line(res) << "\nwitness: " << res.witness << "\n";
    j["verdict"] = to_string(res.verdict);
    j["case"] = to_string(res.case_tag);
    const DescentCheck dc = descent_check(spec.domain, map);
    if (!dc.descends()) text << "advisory: " << dc.note << "\n";
    j["descends"] = dc.descends();
  } else {
    text << "map: smooth (general path)\n";
    GridSpec grid;
    grid.nr = grid.ntheta = 64;
    const SmoothMap& map = std::get<SmoothMap>(spec.map);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      for (int jj = 0; jj < 32; ++jj) {
        const double r = (i + 0.5) * 2 * M_PI / 32, th = (jj + 0.5) * 2 * M_PI / 32;
        try {
          worst = std::max(worst, tension_generic(spec.domain, spec.target, map, r, th).norm());
        } catch (const PoleError&) {
        }
      }
    }
    text << "max tension residual on 32x32 sample: " << fmt17(worst) << "\n";
    j["max_tension_sample"] = worst;
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tension fields, biharmonicity residuals and functionals for maps "
               "between warped-product surfaces"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a coordinate-linear map");
  MetricOptions cls_metric;
  MapOptions cls_map;
  std::string cls_format = "text";
  cls_metric.attach(classify_cmd);
  cls_map.attach(classify_cmd);
  classify_cmd->add_option("--format", cls_format, "text|json");

  // residual
  auto* residual_cmd = app.add_subcommand("residual", "tension/bitension residuals");
  MetricOptions res_metric;
  MapOptions res_map;
  GridOptions res_grid;
  std::vector<double> res_point;
  double res_generic_h = 0.0;
  std::string res_format = "text";
  res_metric.attach(residual_cmd);
  res_map.attach(residual_cmd);
  res_grid.attach(residual_cmd);
  residual_cmd->add_option("--point", res_point, "evaluate at r theta")->expected(2);
  residual_cmd->add_option("--generic", res_generic_h,
                           "also run the finite-difference route at step h");
  residual_cmd->add_option("--format", res_format, "text|json");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  unsigned seed = 1;
  int samples = 0;
  double verify_k = 0.0;
  std::string verify_out, verify_format = "json";
  verify_cmd->add_option("suite", suite, "one of: theorem-flat theorem-nonflat oracle "
                                         "expansion variation functional-values "
                                         "sweep-phi-s harmonic-biharmonic")
      ->required();
  verify_cmd->add_option("--seed", seed, "seed for randomized suites");
  verify_cmd->add_option("--samples", samples, "sample count override");
  verify_cmd->add_option("--k,-k", verify_k, "non-flat warp offset override");
  verify_cmd->add_option("--out", verify_out, "write the JSON report here");
  verify_cmd->add_option("--format", verify_format, "json");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
  std::string sweep_family = "phi-s", sweep_from = "0.01", sweep_to = "1.55";
  int sweep_steps = 155;
  MapOptions sweep_map;
  GridOptions sweep_grid;
  std::string sweep_out;
  sweep_cmd->add_option("--family", sweep_family, "phi-s | c-scan");
  sweep_cmd->add_option("--from", sweep_from, "range start (pi tokens ok)");
  sweep_cmd->add_option("--to", sweep_to, "range end");
  sweep_cmd->add_option("--steps", sweep_steps, "sample count");
  sweep_map.attach(sweep_cmd);
  sweep_grid.attach(sweep_cmd);
  sweep_cmd->add_option("--out", sweep_out, "CSV file (stdout if absent)");

  // energy / degree
  auto* energy_cmd = app.add_subcommand("energy", "energy and bienergy of a map");
  auto* degree_cmd = app.add_subcommand("degree", "mapping degree");
  MetricOptions en_metric, dg_metric;
  MapOptions en_map, dg_map;
  GridOptions en_grid, dg_grid;
  int en_example = 0, dg_example = 0;
  std::string en_label, dg_label, en_format = "text", dg_format = "text";
  std::vector<std::string> en_params, dg_params;
  for (auto [cmd, metric, mapopt, gridopt, example, label, params, format] :
       {std::tuple{energy_cmd, &en_metric, &en_map, &en_grid, &en_example, &en_label,
                   &en_params, &en_format},
        std::tuple{degree_cmd, &dg_metric, &dg_map, &dg_grid, &dg_example, &dg_label,
                   &dg_params, &dg_format}}) {
    metric->attach(cmd);
    mapopt->attach(cmd);
    gridopt->attach(cmd);
    cmd->add_option("--example", *example, "atlas example id (1..6)");
    cmd->add_option("--label", *label, "atlas example label");
    cmd->add_option("--param", *params, "example parameter name=value");
    cmd->add_option("--format", *format, "text|csv|json");
  }

  // atlas
  auto* atlas_cmd = app.add_subcommand("atlas", "example map constructions");
  int at_id = 0;
  std::string at_label, at_format = "text";
  std::vector<std::string> at_params;
  bool at_list = false;
  atlas_cmd->add_option("--id", at_id, "example id (1..6)");
  atlas_cmd->add_option("--label", at_label, "example label");
  atlas_cmd->add_option("--param", at_params, "parameter name=value");
  atlas_cmd->add_flag("--list", at_list, "list the example families");
  atlas_cmd->add_option("--format", at_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cls_metric, cls_map, cls_format);
    if (residual_cmd->parsed()) {
      return cmd_residual(res_metric, res_map, res_grid, res_point, res_generic_h,
                          res_format);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, samples, verify_k, verify_out);
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep_family, sweep_from, sweep_to, sweep_steps, sweep_map,
                       sweep_grid, sweep_out);
    }
    if (energy_cmd->parsed()) {
      return cmd_energy(resolve_map(en_metric, en_map, en_example, en_label, en_params),
                        en_grid, en_format);
    }
    if (degree_cmd->parsed()) {
      return cmd_degree(resolve_map(dg_metric, dg_map, dg_example, dg_label, dg_params),
                        dg_grid, dg_format);
    }
    if (atlas_cmd->parsed()) return cmd_atlas(at_id, at_label, at_params, at_list, at_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
