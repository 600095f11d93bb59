#include "greentrace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "greentrace/errors.hpp"

namespace greentrace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for reading");
  return f;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

json load_json(const std::filesystem::path& path) {
  auto f = open_in(path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  return j;
}

cplx parse_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError(what + ": expected [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

FluxFile read_flux_csv(const std::filesystem::path& path) {
  auto f = open_in(path);
  std::string line;
  if (!std::getline(f, line) || line.rfind("s,phi", 0) != 0)
    throw IoError(path.string() + ": expected header 's,phi'");
  std::vector<double> s, phi;
  std::size_t lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    double sv, pv;
    char comma;
    std::istringstream row(line);
    if (!(row >> sv >> comma >> pv) || comma != ',')
      throw IoError(path.string() + ":" + std::to_string(lineno) +
                    ": malformed row");
    s.push_back(sv);
    phi.push_back(pv);
  }
  if (s.size() < 2) throw IoError(path.string() + ": too few rows");
  if (s.front() != 0.0)
    throw IoError(path.string() + ": s must start at 0");
  const double h = s[1] - s[0];
  for (std::size_t j = 1; j < s.size(); ++j) {
    const double expected = h * static_cast<double>(j);
    if (std::abs(s[j] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
      throw IoError(path.string() + ": s grid is not uniform at row " +
                    std::to_string(j + 1));
  }
  return FluxFile{std::move(phi), s.back() + h};
}

void write_flux_csv(const std::filesystem::path& path, const FluxProfile& profile) {
  auto f = open_out(path);
  f << "s,phi\n";
  for (std::size_t j = 0; j < profile.n_samples(); ++j)
    f << format_double(profile.node(j)) << ',' << format_double(profile.samples[j])
      << '\n';
}

void write_trace_csv(const std::filesystem::path& path, const BoundaryTrace& trace) {
  auto f = open_out(path);
  f << "theta,x,y,s,psi,kappa\n";
  for (std::size_t j = 0; j < trace.points.size(); ++j)
    f << format_double(trace.theta_grid[j]) << ','
      << format_double(trace.points[j].real()) << ','
      << format_double(trace.points[j].imag()) << ','
      << format_double(trace.arclength[j]) << ','
      << format_double(trace.tangent_angle[j]) << ','
      << format_double(trace.curvature[j]) << '\n';
}

void write_level_csv(const std::filesystem::path& path,
                     const std::vector<cplx>& points) {
  auto f = open_out(path);
  f << "theta,x,y\n";
  const std::size_t n = points.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    f << format_double(theta) << ',' << format_double(points[j].real()) << ','
      << format_double(points[j].imag()) << '\n';
  }
}

void write_curvature_csv(const std::filesystem::path& path,
                         const FluxProfile& profile,
                         const std::vector<double>& kappa) {
  auto f = open_out(path);
  f << "s,kappa\n";
  for (std::size_t j = 0; j < kappa.size(); ++j)
    f << format_double(profile.node(j)) << ',' << format_double(kappa[j]) << '\n';
}

Anchors read_anchors_json(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.contains("zeta_c") || !j.contains("zeta_b"))
    throw IoError(path.string() + ": need keys zeta_c and zeta_b");
  return Anchors{parse_complex(j["zeta_c"], "zeta_c"),
                 parse_complex(j["zeta_b"], "zeta_b")};
}

void write_anchors_json(const std::filesystem::path& path, const Anchors& anchors) {
  json j;
  j["zeta_c"] = complex_to_json(anchors.zeta_c);
  j["zeta_b"] = complex_to_json(anchors.zeta_b);
  open_out(path) << j.dump(2) << '\n';
}

MapSpec read_mapspec_json(const std::filesystem::path& path) {
  const json j = load_json(path);
  const std::string type = j.value("type", "");
  if (type == "polynomial") {
    PolynomialMap p;
    p.zeta_c = j.contains("zeta_c") ? parse_complex(j["zeta_c"], "zeta_c")
                                    : cplx(0.0, 0.0);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw IoError(path.string() + ": polynomial spec needs a coeffs array");
    for (const auto& c : j["coeffs"]) p.coeffs.push_back(parse_complex(c, "coeff"));
    return p;
  }
  if (type == "boundary_samples") {
    SampledBoundaryMap m;
    if (!j.contains("points") || !j["points"].is_array())
      throw IoError(path.string() + ": boundary_samples spec needs points");
    for (const auto& p : j["points"]) m.points.push_back(parse_complex(p, "point"));
    return m;
  }
  throw IoError(path.string() +
                ": type must be 'polynomial' or 'boundary_samples'");
}

void write_report_json(const std::filesystem::path& path,
                       const ReconstructionReport& report) {
  json j;
  j["gamma"] = report.gamma;
  j["perimeter_L"] = report.perimeter_L;
  j["consistency_residual"] = report.consistency_residual;
  j["series_tail_bound"] = report.series_tail_bound;
  open_out(path) << j.dump(2) << '\n';
}

void write_univalence_json(const std::filesystem::path& path,
                           const UnivalenceReport& report) {
  json j;
  j["max_ratio"] = report.max_ratio;
  j["paatero_bound"] = report.paatero_bound;
  j["passes"] = report.passes;
  open_out(path) << j.dump(2) << '\n';
}

void write_symmetry_json(const std::filesystem::path& path,
                         const SymmetryReport& report) {
  json j;
  j["rotational"] = json::array();
  for (const auto& r : report.rotational)
    j["rotational"].push_back({{"n", r.order}, {"residual", r.residual}});
  j["reflection"] = {{"offset", report.reflection.offset},
                     {"residual", report.reflection.residual}};
  j["detected_orders"] = report.detected_orders;
  open_out(path) << j.dump(2) << '\n';
}

}  // namespace greentrace
