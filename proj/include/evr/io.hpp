#pragma once

// Serialization: CSV side-length profiles, JSON for every result type and
// two small SVG renderings (a quadrant profile plot and a homotopy barcode).
// All formats carry schema_version; numbers are written with 17 significant
// digits so they read back bit-exact.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"  // nlohmann, vendored

#include "evr/certificates.hpp"
#include "evr/cyclic_graph.hpp"
#include "evr/homotopy.hpp"
#include "evr/profile.hpp"

namespace evr::io {

inline constexpr int schema_version = 1;

using nlohmann::json;

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- CSV -------------------------------------------------------------------

inline void write_profile_csv(std::ostream& os, const SideProfile& prof) {
  os << "# schema_version=" << schema_version << "\n";
  os << "# a=" << fmt17(prof.a) << "\n";
  os << "# target=" << prof.target.str() << "\n";
  os << "theta,s\n";
  for (const ProfileSample& q : prof.samples) os << fmt17(q.theta) << ',' << fmt17(q.s) << '\n';
}

inline SideProfile read_profile_csv(std::istream& is) {
  SideProfile prof;
  std::string line;
  int version = 0;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
      if (key == "schema_version") version = std::stoi(value);
      if (key == "a") prof.a = std::stod(value);
      if (key == "target") prof.target = WindingTarget::parse(value);
      continue;
    }
    if (!header) {
      if (line != "theta,s") fail(ErrorKind::InvalidParameter, "unexpected CSV header: " + line);
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(ErrorKind::InvalidParameter, "malformed CSV row: " + line);
    prof.samples.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  if (version != schema_version) fail(ErrorKind::InvalidParameter, "unsupported CSV schema_version");
  return prof;
}

// ---- JSON ------------------------------------------------------------------

inline json with_schema(json body) {
  body["schema_version"] = schema_version;
  return body;
}

inline json to_json(const Extremum& e) { return {{"theta", e.theta}, {"s", e.value}}; }

inline json to_json(const SideProfile& prof) {
  json theta = json::array(), s = json::array();
  for (const ProfileSample& q : prof.samples) {
    theta.push_back(q.theta);
    s.push_back(q.s);
  }
  return {{"a", prof.a}, {"target", prof.target.str()}, {"theta", theta}, {"s", s}};
}

inline json to_json(const ExtremaReport& rep) {
  json mins = json::array(), maxs = json::array();
  for (const Extremum& e : rep.minima) mins.push_back(to_json(e));
  for (const Extremum& e : rep.maxima) maxs.push_back(to_json(e));
  return {{"minima", mins},
          {"maxima", maxs},
          {"global_min", rep.global_min},
          {"global_max", rep.global_max},
          {"fast_set_count", rep.fast_set_count},
          {"value_tol", rep.value_tol},
          {"cell_end", rep.cell_end}};
}

inline json to_json(const ScaleThresholds& t) {
  json j = {{"a", t.a},
            {"r1", t.r1},
            {"r2", t.r2},
            {"r3", t.r3},
            {"r4", t.r4},
            {"r5", t.r5},
            {"r7half", nullptr},
            {"situation", to_string(t.situation)},
            {"regime", to_string(t.regime)},
            {"fast_set_count", t.fast_set_count},
            {"s_east", t.s_east},
            {"s_north", t.s_north}};
  if (t.r7half) j["r7half"] = *t.r7half;
  return j;
}

inline json to_json(const ClassificationReport& rep) {
  json intervals = json::array();
  for (const TypeInterval& iv : rep.intervals)
    intervals.push_back({{"type", to_string(iv.type)},
                         {"lo_exclusive", iv.lo},
                         {"hi_inclusive", iv.hi},
                         {"conjecture_conditional", iv.conjecture_conditional}});
  return {{"thresholds", to_json(rep.thresholds)}, {"intervals", intervals}, {"notes", rep.notes}};
}

inline json to_json(const CyclicGraphData& g) {
  json theta = json::array();
  for (const CirclePoint& v : g.vertices) theta.push_back(v.theta());
  return {{"vertices", theta}, {"out_reach", g.out_reach}};
}

inline CyclicGraphData graph_from_json(const json& j) {
  CyclicGraphData g;
  for (double t : j.at("vertices").get<std::vector<double>>()) g.vertices.emplace_back(t);
  g.out_reach = j.at("out_reach").get<std::vector<std::size_t>>();
  if (!is_cyclic(g)) fail(ErrorKind::InvalidParameter, "JSON graph is not cyclic");
  return g;
}

inline json to_json(const PeriodicOrbit& o) {
  return {{"length", o.length_l}, {"winding", o.winding_w}, {"orbit", o.orbit}};
}

inline json to_json(const WindingFractionResult& w) {
  return {{"numerator", w.numerator},
          {"denominator", w.denominator},
          {"fraction", std::to_string(w.numerator) + "/" + std::to_string(w.denominator)},
          {"attained", w.attained}};
}

inline json to_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) terms.push_back({{"deg_a", t.deg_a}, {"deg_r", t.deg_r}, {"coeff", t.coeff}});
  return {{"name", p.name()}, {"terms", terms}};
}

inline json to_json(const RootInterval& r) {
  return {{"lo", r.lo},
          {"hi", r.hi},
          {"root", r.midpoint()},
          {"width", r.width()},
          {"sign_lo", r.sign_lo},
          {"sign_hi", r.sign_hi}};
}

inline json to_json(const CriticalSearch& c) {
  json trace = json::array();
  for (const GapProbe& g : c.trace) trace.push_back({{"a", g.a}, {"gap", g.gap}});
  return {{"a_critical", c.a}, {"trace", trace}};
}

inline json to_json(const StarConfig& star) {
  const Eccentricity a(star.a);
  json verts = json::array();
  for (const CirclePoint& v : star.vertices) {
    const PlanePoint q = embed(v, a);
    verts.push_back({{"theta", v.theta()}, {"x", q.x}, {"y", q.y}});
  }
  return {{"a", star.a},
          {"target", star.target.str()},
          {"base_theta", star.base.theta()},
          {"diameter", star.diameter},
          {"winding", star.orbit.winding},
          {"closure_gap", star.closure_gap},
          {"vertices", verts}};
}

// ---- SVG -------------------------------------------------------------------

namespace detail {

inline std::string svg_header(int w, int h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace detail

/// s over the first quadrant [0, pi/2], drawn as a polyline against theta,
/// with the vertical axis spanning the sampled range there.
inline std::string profile_svg(const SideProfile& prof) {
  const int w = 640, h = 400, left = 90, right = 20, top = 30, bottom = 50;
  std::vector<ProfileSample> q;
  for (const ProfileSample& p : prof.samples)
    if (p.theta <= 0.5 * pi + 1e-12) q.push_back(p);
  if (q.empty()) fail(ErrorKind::InvalidParameter, "profile has no samples in the first quadrant");
  double lo = q.front().s, hi = q.front().s;
  for (const ProfileSample& p : q) {
    lo = std::min(lo, p.s);
    hi = std::max(hi, p.s);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  auto px = [&](double theta) { return left + (w - left - right) * theta / (0.5 * pi); };
  auto py = [&](double s) { return top + (h - top - bottom) * (1.0 - (s - lo) / span); };

  std::ostringstream os;
  os << detail::svg_header(w, h);
  os << "<text x=\"" << left << "\" y=\"18\">side length s, a = " << fmt17(prof.a)
     << ", target " << prof.target.str() << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << (w - left - right)
     << "\" height=\"" << (h - top - bottom) << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << left << "\" y=\"" << (h - 28) << "\">0</text>\n";
  os << "<text x=\"" << (w - right - 24) << "\" y=\"" << (h - 28) << "\">pi/2</text>\n";
  os << "<text x=\"" << (w / 2 - 20) << "\" y=\"" << (h - 10) << "\">theta</text>\n";
  os << "<text x=\"4\" y=\"" << (top + 10) << "\">" << fmt17(hi).substr(0, 12) << "</text>\n";
  os << "<text x=\"4\" y=\"" << (h - bottom) << "\">" << fmt17(lo).substr(0, 12) << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (const ProfileSample& p : q) os << detail::num(px(p.theta)) << ',' << detail::num(py(p.s)) << ' ';
  os << "\"/>\n</svg>\n";
  return os.str();
}

/// One bar per homotopy interval, equal widths, boundaries labelled with the
/// threshold values. Bars above r2 are dashed: they rest on the conjecture.
inline std::string barcode_svg(const ClassificationReport& rep) {
  const int bar_w = 120, left = 20, top = 40, bar_h = 28;
  const int n = static_cast<int>(rep.intervals.size());
  const int w = left * 2 + bar_w * n, h = top + bar_h + 60;
  std::ostringstream os;
  os << detail::svg_header(w, h);
  os << "<text x=\"" << left << "\" y=\"20\">homotopy types of VR(E_a; r), a = "
     << fmt17(rep.thresholds.a) << "</text>\n";
  for (int i = 0; i < n; ++i) {
    const TypeInterval& iv = rep.intervals[static_cast<std::size_t>(i)];
    const int x = left + i * bar_w;
    os << "<rect x=\"" << x + 2 << "\" y=\"" << top << "\" width=\"" << bar_w - 4 << "\" height=\""
       << bar_h << "\" fill=\"#dde7f0\" stroke=\"black\""
       << (iv.conjecture_conditional ? " stroke-dasharray=\"4 2\"" : "") << "/>\n";
    os << "<text x=\"" << x + bar_w / 2 << "\" y=\"" << top + 19 << "\" text-anchor=\"middle\">"
       << to_string(iv.type) << "</text>\n";
    os << "<text x=\"" << x + bar_w << "\" y=\"" << top + bar_h + 18
       << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt17(iv.hi).substr(0, 14) << "</text>\n";
  }
  os << "<text x=\"" << left << "\" y=\"" << h - 10 << "\" font-size=\"10\">regime "
     << to_string(rep.thresholds.regime) << ", intervals (lo, hi]</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace evr::io
