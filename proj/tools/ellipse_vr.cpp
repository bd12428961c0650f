// ellipse-vr: command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evr/evr.hpp"

namespace {

using evr::io::json;

struct Common {
  std::string output;  // empty: stdout
  std::string format;
  double r_tol = 0.0;  // full double resolution
  double refine_tol = 1e-9;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) evr::fail(evr::ErrorKind::InvalidParameter, "cannot open output file " + c.output);
  out << text;
}

std::string dump(const json& body) { return evr::io::with_schema(body).dump(2) + "\n"; }

evr::ExtremaOptions extrema_options(const Common& c) {
  evr::ExtremaOptions o;
  o.side.r_tol = c.r_tol;
  o.refine_tol = c.refine_tol;
  return o;
}

void run_profile(const Common& c, double a_value, const std::string& target_text, int samples) {
  const evr::Eccentricity a(a_value);
  const auto target = evr::WindingTarget::parse(target_text);
  const evr::ExtremaOptions opt = extrema_options(c);
  const evr::SideProfile prof = evr::profile(a, target, samples, opt.side);
  if (c.format == "csv") {
    std::ostringstream os;
    evr::io::write_profile_csv(os, prof);
    emit(c, os.str());
  } else if (c.format == "svg") {
    emit(c, evr::io::profile_svg(prof));
  } else {
    json body = evr::io::to_json(prof);
    body["extrema"] = nullptr;
    body["situation"] = nullptr;
    if (!a.is_circle()) {
      const evr::ExtremaReport rep = evr::find_extrema(prof, opt);
      body["extrema"] = evr::io::to_json(rep);
      if (target == evr::pentagram) {
        try {
          body["situation"] = evr::to_string(evr::classify_situation(rep, a, target, opt.value_tol, opt.side));
        } catch (const evr::Error& e) {
          if (e.kind() != evr::ErrorKind::UnclassifiableProfile) throw;
          body["situation_error"] = e.what();
        }
      }
    }
    emit(c, dump(body));
  }
}

evr::ThresholdOptions threshold_options(const Common& c, int samples) {
  evr::ThresholdOptions o;
  o.samples = samples;
  o.extrema = extrema_options(c);
  return o;
}

void run_classify(const Common& c, double a_value, double r, int samples) {
  const evr::Eccentricity a(a_value);
  if (!(r > 0.0)) evr::fail(evr::ErrorKind::InvalidParameter, "--r must be positive");
  const evr::ScaleThresholds t = evr::thresholds(a, threshold_options(c, samples));
  const evr::ClassificationReport rep = evr::classification_report(t);
  if (c.format == "svg") {
    emit(c, evr::io::barcode_svg(rep));
    return;
  }
  json body = evr::io::to_json(rep);
  body["r"] = r;
  body["type"] = evr::to_string(evr::classify(t, r));
  body["conjecture_conditional"] = evr::conjecture_conditional(t, r);
  emit(c, dump(body));
}

void run_thresholds(const Common& c, double a_value, int samples) {
  const evr::ScaleThresholds t = evr::thresholds(evr::Eccentricity(a_value), threshold_options(c, samples));
  json body = evr::io::to_json(t);
  body["ordered"] = t.ordered();
  emit(c, dump(body));
}

void run_critical(const Common& c, const std::vector<double>& bracket, double tol,
                  const std::string& source) {
  evr::GapSource src = evr::GapSource::Algebraic;
  if (source == "dynamical")
    src = evr::GapSource::Dynamical;
  else if (source != "algebraic")
    evr::fail(evr::ErrorKind::InvalidParameter, "--source must be algebraic or dynamical");
  const evr::CriticalSearch res = evr::critical_eccentricity(bracket.at(0), bracket.at(1), tol, src);
  json body = evr::io::to_json(res);
  body["bracket"] = bracket;
  body["tol"] = tol;
  body["source"] = source;
  emit(c, dump(body));
}

void run_roots(const Common& c, const std::string& poly_name, double a_value,
               std::optional<double> r_lo, double r_hi, bool export_terms) {
  const evr::BivariatePolynomial* poly = nullptr;
  if (poly_name == "PN")
    poly = &evr::north_pole_polynomial();
  else if (poly_name == "PE")
    poly = &evr::east_pole_polynomial();
  else
    evr::fail(evr::ErrorKind::InvalidParameter, "--poly must be PN or PE");
  if (export_terms) {
    emit(c, dump(evr::io::to_json(*poly)));
    return;
  }
  const evr::Eccentricity a(a_value);
  const double lo = r_lo.value_or(evr::triangle_bounds(a.value()).r2);
  const auto roots = evr::isolate_star_roots(*poly, a.value(), lo, r_hi);
  json list = json::array();
  for (const auto& r : roots) list.push_back(evr::io::to_json(r));
  emit(c, dump({{"poly", poly_name}, {"a", a.value()}, {"r_lo", lo}, {"r_hi", r_hi}, {"roots", list}}));
}

void run_wf(const Common& c, const std::vector<std::size_t>& cnk, std::optional<double> a_value,
            std::optional<double> r, int samples, const std::string& graph_path) {
  evr::CyclicGraphData g;
  json source;
  if (!cnk.empty()) {
    g = evr::standard_cnk(cnk.at(0), cnk.at(1));
    source = {{"kind", "cnk"}, {"n", cnk.at(0)}, {"k", cnk.at(1)}};
  } else if (!graph_path.empty()) {
    std::ifstream in(graph_path);
    if (!in) evr::fail(evr::ErrorKind::InvalidParameter, "cannot read graph file " + graph_path);
    g = evr::io::graph_from_json(json::parse(in));
    source = {{"kind", "file"}, {"path", graph_path}};
  } else {
    if (!a_value || !r) evr::fail(evr::ErrorKind::InvalidParameter, "wf needs --cnk, --graph, or --a with --r");
    const evr::Eccentricity a(*a_value);
    g = evr::build_vr_graph(evr::even_samples(static_cast<std::size_t>(samples)), a, *r);
    source = {{"kind", "vietoris-rips"}, {"a", a.value()}, {"r", *r}, {"samples", samples}};
  }
  const evr::WindingFractionResult wf = evr::winding_fraction(g);
  json body = evr::io::to_json(wf);
  body["graph"] = source;
  body["orbit"] = evr::io::to_json(evr::periodic_orbit(g, 0));
  if (c.format == "json-graph") body["graph_data"] = evr::io::to_json(g);
  emit(c, dump(body));
}

void run_star(const Common& c, double a_value, double theta, const std::string& target_text) {
  evr::SideLengthOptions opt;
  opt.r_tol = c.r_tol;
  const evr::StarConfig star =
      evr::star_points(evr::CirclePoint(theta), evr::Eccentricity(a_value), evr::WindingTarget::parse(target_text), opt);
  json body = evr::io::to_json(star);
  body["system_residual"] = evr::star_system_residual(star);
  emit(c, dump(body));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietoris-Rips thresholds of ellipses of small eccentricity"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("-o,--output", common.output, "output file (default stdout)");
  app.add_option("--r-tol", common.r_tol, "side-length bisection tolerance, 0 for full resolution")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--refine-tol", common.refine_tol, "extremum refinement tolerance")->check(CLI::PositiveNumber);

  double a = 1.2, r = 0.0, tol = 1e-6, theta = 0.0, r_hi = 2.2;
  std::optional<double> r_lo, a_opt, r_opt;
  int profile_samples = 10000, classify_samples = 2000, threshold_samples = 2000, wf_samples = 500;
  std::string target = "2/5", poly = "PN", source = "algebraic", graph_path;
  std::vector<double> bracket;
  std::vector<std::size_t> cnk;
  bool export_terms = false;

  auto* profile = app.add_subcommand("profile", "sample s over the circle");
  profile->add_option("--a", a, "semi-major axis, 1 <= a < sqrt 2")->required();
  profile->add_option("--target", target, "winding target alpha/beta");
  profile->add_option("--samples", profile_samples, "grid size, at least 100 (default 10000)");
  std::string profile_format = "csv", classify_format = "json";
  profile->add_option("--format", profile_format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  auto* classify = app.add_subcommand("classify", "homotopy type of VR(E_a; r)");
  classify->add_option("--a", a)->required();
  classify->add_option("--r", r)->required();
  classify->add_option("--samples", classify_samples, "grid size for the profiles (default 2000)");
  classify->add_option("--format", classify_format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  auto* thresholds = app.add_subcommand("thresholds", "r1 .. r5 and r7/2");
  thresholds->add_option("--a", a)->required();
  thresholds->add_option("--samples", threshold_samples, "grid size for the profiles (default 2000)");

  auto* critical = app.add_subcommand("critical", "bisect the pole gap for a critical eccentricity");
  critical->add_option("--bracket", bracket, "lo hi")->expected(2)->required();
  critical->add_option("--tol", tol)->check(CLI::PositiveNumber);
  critical->add_option("--source", source, "algebraic or dynamical");

  auto* roots = app.add_subcommand("roots", "certified sign-change roots of PN or PE");
  roots->add_option("--poly", poly, "PN or PE")->required();
  roots->add_option("--a", a);
  roots->add_option("--r-lo", r_lo, "scan start (default r2(a))");
  roots->add_option("--r-hi", r_hi, "scan ceiling");
  roots->add_flag("--export", export_terms, "print the term list instead");

  auto* wf = app.add_subcommand("wf", "winding fraction of a cyclic graph");
  wf->add_option("--cnk", cnk, "n k for C_n^k")->expected(2);
  wf->add_option("--a", a_opt);
  wf->add_option("--r", r_opt);
  wf->add_option("--samples", wf_samples, "evenly spaced points (default 500)")->check(CLI::PositiveNumber);
  wf->add_option("--graph", graph_path, "graph JSON file");
  wf->add_flag("--with-graph", [&](std::int64_t) { common.format = "json-graph"; }, "include the graph");

  auto* star = app.add_subcommand("star", "vertices of the star through theta");
  star->add_option("--a", a)->required();
  star->add_option("--theta", theta);
  star->add_option("--target", target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*profile) {
      common.format = profile_format;
      run_profile(common, a, target, profile_samples);
    }
    if (*classify) {
      common.format = classify_format;
      run_classify(common, a, r, classify_samples);
    }
    if (*thresholds) run_thresholds(common, a, threshold_samples);
    if (*critical) run_critical(common, bracket, tol, source);
    if (*roots) run_roots(common, poly, a, r_lo, r_hi, export_terms);
    if (*wf) run_wf(common, cnk, a_opt, r_opt, wf_samples, graph_path);
    if (*star) run_star(common, a, theta, target);
  } catch (const evr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
