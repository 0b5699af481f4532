#pragma once

#include <string>
#include <vector>

#include "prodcurv/classifier.hpp"
#include "prodcurv/config.hpp"
#include "prodcurv/curvature.hpp"
#include "prodcurv/hypersurface.hpp"

namespace prodcurv {

struct RowResult {
  FrameData frame;
  CurvatureReport report;
};

/// Evaluates the config grid, optionally fanning out to `jobs` worker
/// threads. Rows come back in grid order regardless of jobs; the first
/// failing grid point (by index, not by timing) is rethrown.
std::vector<RowResult> evaluate_grid(const RunConfig& cfg, int jobs = 1);

/// Renders the grid of cfg as CSV rows or a JSON array, per cfg.format.
std::string render_report(const RunConfig& cfg, int jobs = 1);

/// Renders every sweep case. CSV keeps the exact report header and separates
/// cases with `# case k: key = value` comment lines; JSON emits one object
/// per case with the swept parameters, rows and a theorem summary.
std::string render_sweep(const SweepPlan& plan, int jobs = 1);

/// Renders the constant-curvature rotation construction.
std::string render_rotation(const SpaceForm& sf, double c, double r, const SRange& range,
                            OutFormat format, double tol = kDefaultTol);

/// Swept-parameter value of a case, looked up by config key (e.g. "base.r").
double sweep_param(const RunConfig& cfg, const std::string& key);

/// Writes text to the path, or to standard output when path is "-".
void write_output(const std::string& text, const std::string& out_path);

}  // namespace prodcurv
