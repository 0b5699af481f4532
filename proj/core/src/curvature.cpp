#include "prodcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

inline double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

void require_index(const FrameData& fd, int idx) {
  if (idx < 0 || idx >= fd.n()) {
    throw DomainError("frame index " + std::to_string(idx) + " out of range [0, " +
                      std::to_string(fd.n()) + ")");
  }
}

}  // namespace

double gauss_component(const FrameData& fd, const SpaceForm& sf, int i, int j, int k, int l) {
  require_index(fd, i);
  require_index(fd, j);
  require_index(fd, k);
  require_index(fd, l);
  const auto& t = fd.t;
  const double eps = sf.epsilon;

  const double flat = kron(i, l) * kron(j, k) - kron(i, k) * kron(j, l);
  const double t_part = t[i] * t[k] * kron(j, l) + t[j] * t[l] * kron(i, k) -
                        t[j] * t[k] * kron(i, l) - t[i] * t[l] * kron(j, k);
  const double shape = fd.lambda[i] * fd.lambda[j] * flat;
  return eps * (flat + t_part) + shape;
}

double ricci_closed_form(const FrameData& fd, const SpaceForm& sf, int i, int j) {
  require_index(fd, i);
  require_index(fd, j);
  const int n = fd.n();
  const double eps = sf.epsilon;
  const double t2 = fd.t_norm * fd.t_norm;

  double value = eps * (2.0 - n) * fd.t[i] * fd.t[j];
  if (i == j) {
    value += eps * (n - 1.0 - t2) + n * fd.mean_curvature * fd.lambda[i] -
             fd.lambda[i] * fd.lambda[j];
  }
  return value;
}

double ricci_by_contraction(const FrameData& fd, const SpaceForm& sf, int i, int j) {
  require_index(fd, i);
  require_index(fd, j);
  double acc = 0.0;
  for (int k = 0; k < fd.n(); ++k) {
    acc += gauss_component(fd, sf, k, i, j, k);
  }
  return acc;
}

double sectional(const FrameData& fd, const SpaceForm& sf, int i, int j) {
  require_index(fd, i);
  require_index(fd, j);
  if (i == j) {
    throw DomainError("sectional curvature needs two distinct directions, got i = j = " +
                      std::to_string(i));
  }
  return sf.epsilon * (1.0 - fd.t[i] * fd.t[i] - fd.t[j] * fd.t[j]) +
         fd.lambda[i] * fd.lambda[j];
}

std::size_t sectional_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

CurvatureReport curvature_report(const FrameData& fd, const SpaceForm& sf) {
  fd.check();
  const int n = fd.n();

  CurvatureReport report;
  report.n = n;
  report.ric_diag.resize(n);

  double trace = 0.0;
  for (int i = 0; i < n; ++i) {
    report.ric_diag[i] = ricci_closed_form(fd, sf, i, i);
    trace += report.ric_diag[i];
  }
  report.rho = trace / n;

  report.ric_offdiag_max = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      report.ric_offdiag_max =
          std::max(report.ric_offdiag_max, std::abs(ricci_closed_form(fd, sf, i, j)));
    }
  }

  report.sectional.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  double k_min = 0.0, k_max = 0.0;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double k_ij = sectional(fd, sf, i, j);
      report.sectional.push_back(k_ij);
      k_min = first ? k_ij : std::min(k_min, k_ij);
      k_max = first ? k_ij : std::max(k_max, k_ij);
      first = false;
    }
  }
  report.k_spread = k_max - k_min;

  double defect = report.ric_offdiag_max;
  for (double d : report.ric_diag) {
    defect = std::max(defect, std::abs(d - report.rho));
  }
  report.einstein_defect = defect;
  return report;
}

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_json(const CurvatureReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["ric_diag"] = report.ric_diag;
  j["ric_offdiag_max"] = report.ric_offdiag_max;
  j["sectional"] = report.sectional;
  j["rho"] = report.rho;
  j["einstein_defect"] = report.einstein_defect;
  j["k_spread"] = report.k_spread;
  return j.dump();
}

std::string csv_header(int n) {
  std::string header = "s";
  for (int i = 1; i <= n; ++i) {
    header += ",lambda_" + std::to_string(i);
  }
  header += ",t_norm,nu,H,rho,einstein_defect,k_spread";
  return header;
}

std::string csv_row(const FrameData& fd, const CurvatureReport& report) {
  std::string row = format_g17(fd.s);
  for (double lam : fd.lambda) {
    row += "," + format_g17(lam);
  }
  row += "," + format_g17(fd.t_norm);
  row += "," + format_g17(fd.nu);
  row += "," + format_g17(fd.mean_curvature);
  row += "," + format_g17(report.rho);
  row += "," + format_g17(report.einstein_defect);
  row += "," + format_g17(report.k_spread);
  return row;
}

}  // namespace prodcurv
