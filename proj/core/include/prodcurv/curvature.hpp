#pragma once

#include <string>
#include <vector>

#include "prodcurv/hypersurface.hpp"

namespace prodcurv {

/// Curvature data of a single frame. sectional lists K_ij for 0 <= i < j < n
/// in lexicographic pair order.
struct CurvatureReport {
  int n = 0;
  std::vector<double> ric_diag;
  double ric_offdiag_max = 0.0;
  std::vector<double> sectional;
  double rho = 0.0;              // trace(Ric) / n
  double einstein_defect = 0.0;  // max_{i,j} |Ric(e_i,e_j) - rho * delta_ij|
  double k_spread = 0.0;         // max K_ij - min K_ij
};

/// <R(e_i,e_j)e_k,e_l> from the Gauss equation of Q^n(eps) x R, evaluated
/// in the orthonormal principal frame. Indices are 0-based.
double gauss_component(const FrameData& fd, const SpaceForm& sf, int i, int j, int k, int l);

/// Ric(e_i,e_j) in closed form:
///   [eps(n-1-|T|^2) + nH lambda_i - lambda_i lambda_j] delta_ij
///   + eps(2-n) t_i t_j.
double ricci_closed_form(const FrameData& fd, const SpaceForm& sf, int i, int j);

/// Ric(e_i,e_j) = sum_k <R(e_k,e_i)e_j,e_k>; independent of the closed form.
double ricci_by_contraction(const FrameData& fd, const SpaceForm& sf, int i, int j);

/// Sectional curvature of span(e_i, e_j):
///   K_ij = eps(1 - t_i^2 - t_j^2) + lambda_i lambda_j.
/// Throws DomainError for i == j (degenerate plane).
double sectional(const FrameData& fd, const SpaceForm& sf, int i, int j);

CurvatureReport curvature_report(const FrameData& fd, const SpaceForm& sf);

/// Position of pair (i, j), i < j, inside CurvatureReport::sectional.
std::size_t sectional_index(int n, int i, int j);

/// Flat JSON object with the field names of CurvatureReport.
std::string to_json(const CurvatureReport& report);

/// "s,lambda_1,...,lambda_n,t_norm,nu,H,rho,einstein_defect,k_spread"
std::string csv_header(int n);

/// One CSV row per sample point, 17 significant digits per value.
std::string csv_row(const FrameData& fd, const CurvatureReport& report);

/// printf("%.17g") formatting used by all text output.
std::string format_g17(double value);

}  // namespace prodcurv
