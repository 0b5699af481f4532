#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "prodcurv/ambient.hpp"
#include "prodcurv/base_catalog.hpp"
#include "prodcurv/profile.hpp"

namespace prodcurv {

enum class OutFormat { Csv, Json };

std::string to_string(OutFormat format);
OutFormat parse_out_format(const std::string& text);

/// Uniform grid start, start + h, ..., stop with count points.
struct SRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  /// Throws DomainError unless count >= 1 and start < stop whenever count > 1.
  std::vector<double> points() const;
};

struct ProfileSpec {
  ProfileFamily family = ProfileFamily::Linear;
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double c = 0.0;    // rotation target curvature
  std::string path;  // sampled CSV
};

struct RunConfig {
  SpaceForm sf;
  BaseSpec base;
  ProfileSpec profile;
  SRange s_range;
  double tol = kDefaultTol;
  OutFormat format = OutFormat::Csv;
  std::string out = "-";  // "-" writes to standard output
};

/// Flat `key = value` text with dotted sections (base.*, profile.*), full-line
/// `#` comments and an `s_range = start, stop, count` triple. Unknown or
/// duplicate keys raise ParseError with the line number; invalid values raise
/// DomainError naming the field.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Sweep document: same grammar, but numeric base./profile. keys may carry a
/// `lo, hi, count` triple, expanded to a cartesian grid of configs (file
/// order; the last swept key varies fastest).
struct SweepPlan {
  std::vector<std::string> params;  // swept keys in file order
  std::vector<RunConfig> cases;
};

SweepPlan expand_sweep(std::istream& in);
SweepPlan expand_sweep_text(const std::string& text);
SweepPlan expand_sweep_file(const std::string& path);

IsoparametricBase make_base(const RunConfig& cfg);
Profile make_profile(const RunConfig& cfg);

}  // namespace prodcurv
