#pragma once

#include <string>
#include <vector>

#include "prodcurv/ambient.hpp"

namespace prodcurv {

enum class BaseKind {
  TotallyGeodesic,
  GeodesicSphere,
  Horosphere,      // eps = -1 only
  Equidistant,     // eps = -1 only
  CliffordProduct  // eps = +1 only
};

std::string to_string(BaseKind kind);

/// Parameters for make_base; only the fields relevant to `kind` are read.
struct BaseSpec {
  BaseKind kind = BaseKind::TotallyGeodesic;
  double r = 0.0;        // radius / distance / Clifford angle
  int p = 0;             // CliffordProduct multiplicities, p + q = n - 1
  int q = 0;
  int orientation = +1;  // sign of the chosen unit normal
};

struct CurvatureClass {
  double value = 0.0;
  int multiplicity = 0;
};

/// Isoparametric hypersurface g of Q^n(eps), represented by its distinct
/// principal curvatures with multiplicities (multiplicities sum to n - 1).
struct IsoparametricBase {
  SpaceForm sf;
  BaseSpec spec;
  std::vector<CurvatureClass> curvatures;

  int distinct_count() const { return static_cast<int>(curvatures.size()); }
};

/// Builds a catalog base and fills its principal curvatures:
///   TotallyGeodesic -> {(0, n-1)}
///   GeodesicSphere  -> {(cot r, n-1)} on S^n, {(coth r, n-1)} on H^n
///   Horosphere      -> {(1, n-1)}
///   Equidistant     -> {(tanh r, n-1)}
///   CliffordProduct -> {(-tan r, p), (cot r, q)}
/// Throws DomainError on an invalid kind/space-form pairing or parameters
/// out of range.
IsoparametricBase make_base(const SpaceForm& sf, const BaseSpec& spec);

IsoparametricBase make_totally_geodesic(const SpaceForm& sf, int orientation = +1);
IsoparametricBase make_geodesic_sphere(const SpaceForm& sf, double r, int orientation = +1);
IsoparametricBase make_horosphere(const SpaceForm& sf, int orientation = +1);
IsoparametricBase make_equidistant(const SpaceForm& sf, double r, int orientation = +1);
IsoparametricBase make_clifford_product(const SpaceForm& sf, double r, int p, int q,
                                        int orientation = +1);

/// Principal curvature of the parallel hypersurface g_s transported from a
/// base curvature lambda_g:
///   (eps * S_eps(s) + lambda_g * C_eps(s)) / (C_eps(s) - lambda_g * S_eps(s)).
/// Throws FocalPointError when the denominator is within tol of zero.
double parallel_curvature(double lambda_g, const SpaceForm& sf, double s,
                          double tol = kDefaultTol);

/// Signed Cartan sums, one per distinct curvature:
///   sum_{j != i} m_j (eps + lambda_i lambda_j) / (lambda_i - lambda_j).
/// Empty when d = 1 (the identity is vacuous). Throws DomainError if two
/// "distinct" curvature values coincide within tol.
std::vector<double> cartan_residuals(const IsoparametricBase& base,
                                     double tol = kDefaultTol);

/// Mean curvature of the parallel g_s; a function of s only.
double mean_curvature_of_parallel(const IsoparametricBase& base, double s,
                                  double tol = kDefaultTol);

}  // namespace prodcurv
