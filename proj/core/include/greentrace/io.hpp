#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "greentrace/analysis.hpp"
#include "greentrace/forward.hpp"
#include "greentrace/mapping.hpp"
#include "greentrace/profile.hpp"

namespace greentrace {

/// Raw contents of a flux CSV (`s,phi` header, uniform s from 0).  L is
/// inferred as last s + spacing unless overridden by the caller.
struct FluxFile {
  std::vector<double> samples;
  double perimeter_L = 0.0;
};

FluxFile read_flux_csv(const std::filesystem::path& path);
void write_flux_csv(const std::filesystem::path& path, const FluxProfile& profile);

void write_trace_csv(const std::filesystem::path& path, const BoundaryTrace& trace);
void write_level_csv(const std::filesystem::path& path,
                     const std::vector<cplx>& points);
void write_curvature_csv(const std::filesystem::path& path,
                         const FluxProfile& profile,
                         const std::vector<double>& kappa);

Anchors read_anchors_json(const std::filesystem::path& path);
void write_anchors_json(const std::filesystem::path& path, const Anchors& anchors);

MapSpec read_mapspec_json(const std::filesystem::path& path);

struct ReconstructionReport {
  double gamma = 0.0;
  double perimeter_L = 0.0;
  double consistency_residual = 0.0;
  double series_tail_bound = 0.0;
};
void write_report_json(const std::filesystem::path& path,
                       const ReconstructionReport& report);

void write_univalence_json(const std::filesystem::path& path,
                           const UnivalenceReport& report);
void write_symmetry_json(const std::filesystem::path& path,
                         const SymmetryReport& report);

/// 17-significant-digit decimal formatting (round-trip safe).
std::string format_double(double v);

}  // namespace greentrace
