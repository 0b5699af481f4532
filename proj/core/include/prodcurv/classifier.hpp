#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "prodcurv/base_catalog.hpp"
#include "prodcurv/curvature.hpp"
#include "prodcurv/profile.hpp"

namespace prodcurv {

enum class ProofCase { AllEqual, TwoDistinct, SliceBranch };

/// ConsistentConstantCurvature: the branch closes with constant sectional
/// curvature. Contradiction: the branch is impossible (two-curvature case,
/// n > 3). NotEinstein: the input frame does not satisfy the Einstein
/// equations, so the branch hypothesis fails.
enum class Verdict { ConsistentConstantCurvature, Contradiction, NotEinstein };

std::string to_string(ProofCase c);
std::string to_string(Verdict v);

struct EquationCheck {
  std::string equation;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ProofCaseReport {
  ProofCase proof_case = ProofCase::AllEqual;
  Verdict verdict = Verdict::ConsistentConstantCurvature;
  double n3_obstruction = 0.0;  // nonzero only for TwoDistinct contradictions
  std::map<std::string, double> residuals;
  std::vector<EquationCheck> details;
};

std::string to_json(const ProofCaseReport& report);

/// Max over i != j of |Einstein off-diagonal term|, i.e. the left side of
/// the componentwise Einstein condition. Vanishing certifies that T is an
/// eigenvector of the shape operator.
double lemma2_offdiag(const FrameData& fd, const SpaceForm& sf, double rho);

struct DistinctCount {
  int d_base = 0;
  double pairs_residual = 0.0;  // max |(lambda_i - lambda_j)(nH - lambda_i - lambda_j)|
};

/// Clusters the base principal curvatures by tol and evaluates the pairwise
/// Einstein factorization residual on the distinct representatives.
DistinctCount count_distinct(const FrameData& fd, double tol = kDefaultTol);

/// T == 0 branch: slices carry Ric = eps(n-1) I and K == eps.
ProofCaseReport slice_branch(const FrameData& fd, const SpaceForm& sf,
                             double tol = kDefaultTol);

/// Branch with all base curvatures equal (lambda_1 = ... = lambda_{n-1} = mu):
/// checks both Einstein diagonal equations and that every sectional curvature
/// equals rho/(n-1).
ProofCaseReport all_equal_branch(const FrameData& fd, const SpaceForm& sf, double rho,
                                 double tol = kDefaultTol);

/// Two-distinct-curvature branch evaluated in closed form for multiplicities
/// (p, q), p + q = n - 1. Reproduces the |T|^2 constancy formulas of both
/// subbranches and the terminal Cartan incompatibility, whose size is n - 3.
/// n = 3 is admitted as the oracle point where the obstruction vanishes.
ProofCaseReport two_distinct_branch(const SpaceForm& sf, int p, int q, double rho);

/// Analytic profile of the rotation hypersurface of constant sectional
/// curvature c over a geodesic-sphere base of radius r. Requires c > eps.
Profile rotation_profile(const SpaceForm& sf, double c, double r);

struct RotationFamily {
  double mu = 0.0;   // common base principal curvature, -sqrt(c - eps)
  double rho = 0.0;  // Einstein constant (n-1) c
  std::vector<ProfileSample> profile_samples;
  std::vector<FrameData> frames;
  std::vector<CurvatureReport> reports;
  double max_einstein_defect = 0.0;
  double max_k_spread = 0.0;
};

/// Builds the constant-curvature rotation family with target sectional
/// curvature c over a geodesic-sphere base of radius r, evaluated on `grid`.
/// c == eps degenerates to the slice. Throws NoRealSolutionError when c < eps
/// and DomainError naming the grid point when |T| leaves (0, 1).
RotationFamily construct_constant_curvature_rotation(const SpaceForm& sf, double c, double r,
                                                     std::span<const double> grid,
                                                     double tol = kDefaultTol);

struct TheoremSummary {
  bool einstein = false;
  bool pass = false;  // constant-curvature conclusion holds (vacuous when not Einstein)
  int points = 0;
  double tol = 0.0;
  double k_tol = 0.0;                // 10 * tol
  double max_einstein_defect = 0.0;
  double worst_s = 0.0;              // grid point with the largest defect (smallest s on ties)
  double max_k_spread = 0.0;         // worst per-point sectional spread
  double k_range = 0.0;              // spread of K across the whole grid
  double rho_range = 0.0;
  double rho = 0.0;                  // grid means, meaningful when einstein
  double k0 = 0.0;
  std::string message;
};

std::string to_json(const TheoremSummary& summary);

/// Evaluates the curvature report on every grid point and checks the
/// statement "Einstein implies constant sectional curvature rho/(n-1)".
TheoremSummary verify_theorem(const IsoparametricBase& base, const Profile& pr,
                              std::span<const double> grid, double tol = kDefaultTol);
TheoremSummary verify_theorem(std::span<const FrameData> frames, const SpaceForm& sf,
                              double tol = kDefaultTol);

}  // namespace prodcurv
