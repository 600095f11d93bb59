// greentrace: reconstructs a planar domain from the boundary flux of its
// Green's function, computes the forward flux of a given map, and runs
// univalence/symmetry/curvature diagnostics.
//
// Exit codes: 0 ok, 1 I/O error, 2 validation error, 3 inconsistent anchors.

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greentrace/analysis.hpp"
#include "greentrace/errors.hpp"
#include "greentrace/forward.hpp"
#include "greentrace/inverse.hpp"
#include "greentrace/io.hpp"

namespace fs = std::filesystem;
using namespace greentrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconsistent = 3;

struct Options {
  std::size_t n = 512;
  double tol_norm = kDefaultNormTolerance;
  double tol_residual = kDefaultResidualTolerance;
  double tol_symmetry = kDefaultSymmetryTolerance;
  bool renormalize = false;
  std::optional<double> gamma;
  std::vector<double> levels;
  std::string out_dir = ".";
  std::string map_path;
  std::string flux_path;
  std::string anchors_path;
  std::string config_path;
  std::vector<double> zeta_c{0.0, 0.0};
};

void emit_error_json(const std::string& code, const std::string& message) {
  nlohmann::json j;
  j["error"] = code;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

double perimeter_from_config(const Options& opt, double inferred) {
  if (opt.config_path.empty()) return inferred;
  std::ifstream f(opt.config_path);
  if (!f) throw IoError("cannot open config " + opt.config_path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(opt.config_path + ": " + std::string(e.what()));
  }
  return j.value("L", inferred);
}

FluxProfile load_profile(const Options& opt) {
  FluxFile raw = read_flux_csv(opt.flux_path);
  const double L = perimeter_from_config(opt, raw.perimeter_L);
  return opt.renormalize ? renormalize_flux(raw.samples, L, opt.tol_norm)
                         : validate_flux(raw.samples, L, opt.tol_norm);
}

int cmd_forward(const Options& opt) {
  const MapSpec spec = read_mapspec_json(opt.map_path);
  const ForwardResult result = forward_operator(spec, opt.n);
  const fs::path out(opt.out_dir);
  fs::create_directories(out);
  write_flux_csv(out / "flux.csv", result.profile);
  write_anchors_json(out / "anchors.json", result.anchors);

  // Trace via the reconstruction pipeline so the emitted trace carries
  // arclength/tangent/curvature columns.
  Reconstruction rec =
      reconstruct(result.profile, result.anchors, opt.n, opt.tol_residual);
  write_trace_csv(out / "trace.csv", rec.trace);
  return kExitOk;
}

int cmd_reconstruct(const Options& opt) {
  const FluxProfile profile = load_profile(opt);
  const fs::path out(opt.out_dir);
  fs::create_directories(out);

  ReconstructionReport report;
  const ConformalMap* map = nullptr;
  std::optional<Reconstruction> rec;
  std::optional<FreeReconstruction> free_rec;
  if (opt.gamma) {
    free_rec = reconstruct_free(profile, cplx(opt.zeta_c[0], opt.zeta_c[1]),
                                *opt.gamma, opt.n);
    write_trace_csv(out / "trace.csv", free_rec->trace);
    report.gamma = *opt.gamma;
    report.perimeter_L = free_rec->trace.perimeter_L;
    map = &free_rec->map;
  } else {
    if (opt.anchors_path.empty())
      throw IoError("reconstruct needs --anchors or --gamma");
    const Anchors anchors = read_anchors_json(opt.anchors_path);
    rec = reconstruct(profile, anchors, opt.n, opt.tol_residual);
    write_trace_csv(out / "trace.csv", rec->trace);
    report.gamma = rec->map.gamma();
    report.perimeter_L = rec->trace.perimeter_L;
    report.consistency_residual = rec->consistency_residual;
    map = &rec->map;
  }
  report.series_tail_bound = map->tail_bound();
  write_report_json(out / "report.json", report);

  for (double r : opt.levels) {
    char name[48];
    std::snprintf(name, sizeof(name), "level_%g.csv", r);
    write_level_csv(out / name, green_level_curve(*map, r, opt.n));
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt) {
  const FluxProfile profile = load_profile(opt);
  const fs::path out(opt.out_dir);
  fs::create_directories(out);
  write_univalence_json(out / "univalence.json", paatero_check(profile));
  write_symmetry_json(out / "symmetry.json",
                      symmetry_report(profile, kDefaultMaxOrder, opt.tol_symmetry));
  write_curvature_csv(out / "curvature.csv", profile, curvature_from_flux(profile));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "greentrace: planar domain reconstruction from Green's-function flux"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "theta/arclength grid size (power of two)")
        ->envname("GREENTRACE_N")
        ->check([](const std::string& v) -> std::string {
          try {
            const unsigned long n = std::stoul(v);
            if (n >= 64 && is_power_of_two(n)) return {};
          } catch (...) {
          }
          return "must be a power of two >= 64";
        });
    sub->add_option("--tol-norm", opt.tol_norm, "flux normalization tolerance")
        ->envname("GREENTRACE_TOL_NORM")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-residual", opt.tol_residual,
                    "anchor consistency tolerance")
        ->envname("GREENTRACE_TOL_RESIDUAL")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-symmetry", opt.tol_symmetry,
                    "symmetry detection tolerance")
        ->envname("GREENTRACE_TOL_SYMMETRY")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out_dir, "output directory")
        ->envname("GREENTRACE_OUT");
    sub->add_option("--config", opt.config_path,
                    "JSON config (optional key L: perimeter override)");
  };

  CLI::App* fwd = app.add_subcommand(
      "forward", "flux profile of a given conformal map (writes flux.csv, "
                 "anchors.json, trace.csv)");
  add_common(fwd);
  fwd->add_option("--map", opt.map_path, "MapSpec JSON")->required();

  CLI::App* rc = app.add_subcommand(
      "reconstruct", "domain from a flux profile (writes trace.csv, "
                     "report.json, optional level curves)");
  add_common(rc);
  rc->add_option("--flux", opt.flux_path, "flux CSV (header s,phi)")->required();
  rc->add_option("--anchors", opt.anchors_path, "anchors JSON");
  double gamma_value = 0.0;
  CLI::Option* gamma_opt =
      rc->add_option("--gamma", gamma_value,
                     "rotation constant (reconstruct without zeta_b)");
  rc->add_option("--zeta-c", opt.zeta_c, "pole for --gamma mode: re im")
      ->expected(2);
  rc->add_option("--levels", opt.levels,
                 "Green's-function level-curve radii in (0,1)")
      ->delimiter(',');

  CLI::App* an = app.add_subcommand(
      "analyze", "univalence, symmetry and curvature diagnostics of a flux "
                 "profile (writes univalence.json, symmetry.json, curvature.csv)");
  add_common(an);
  an->add_option("--flux", opt.flux_path, "flux CSV (header s,phi)")->required();
  an->add_flag("--renormalize", opt.renormalize,
               "divide phi by its measured integral before validating");
  rc->add_flag("--renormalize", opt.renormalize,
               "divide phi by its measured integral before validating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (gamma_opt->count() > 0) opt.gamma = gamma_value;

  try {
    if (fwd->parsed()) return cmd_forward(opt);
    if (rc->parsed()) return cmd_reconstruct(opt);
    if (an->parsed()) return cmd_analyze(opt);
  } catch (const InconsistentAnchors& e) {
    emit_error_json(e.code(), e.what());
    return kExitInconsistent;
  } catch (const IoError& e) {
    emit_error_json(e.code(), e.what());
    return kExitIo;
  } catch (const Error& e) {
    emit_error_json(e.code(), e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error_json("InvalidArgument", e.what());
    return kExitValidation;
  }
  return kExitOk;
}
