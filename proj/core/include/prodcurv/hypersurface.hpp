#pragma once

#include <vector>

#include "prodcurv/base_catalog.hpp"
#include "prodcurv/profile.hpp"

namespace prodcurv {

/// Pointwise first-order data of the hypersurface f(x,s) = g_s(x) + a(s) e_{n+2}
/// of Q^n(eps) x R, expressed in an orthonormal principal frame e_0..e_{n-1}.
/// Frames built by frame_data put the T direction last: t = (0,...,0,|T|).
/// Synthetic frames (make_synthetic_frame) may carry an arbitrary T.
struct FrameData {
  double s = 0.0;
  std::vector<double> lambda;  // principal curvatures, size n
  std::vector<double> t;       // frame components of T, size n
  double t_norm = 0.0;         // |T| in [0, 1)
  double nu = 1.0;             // angle function, in (0, 1]
  double mean_curvature = 0.0; // H = (sum_k lambda_k) / n

  int n() const { return static_cast<int>(lambda.size()); }
  double lambda_t() const { return lambda.back(); }

  /// Distinct base curvatures (first n-1 directions) clustered by tol.
  std::vector<CurvatureClass> grouped_base_curvatures(double tol = kDefaultTol) const;

  /// Throws InvariantError unless |T|^2 + nu^2 = 1, nu > 0, |t| = |T| and
  /// H is the mean of the curvatures, all within tol.
  void check(double tol = kDefaultTol) const;
};

/// Frame assembled from raw (lambda, t); t_norm, nu and H are derived.
/// Requires |t| < 1 so that the angle function stays positive.
FrameData make_synthetic_frame(std::vector<double> lambda, std::vector<double> t,
                               double s = 0.0);

/// Totally geodesic slice data: lambda = 0, T = 0, nu = 1.
FrameData make_slice_frame(int n);

struct TNormAngle {
  double t_norm = 0.0;
  double nu = 1.0;
};

/// |T| = a' / sqrt(1 + a'^2), nu = 1 / sqrt(1 + a'^2); both in (0, 1) and
/// |T| / nu = a'(s).
TNormAngle t_norm_angle(const Profile& pr, double s);

/// Full first-order frame of the product hypersurface at parameter s:
///   lambda_i = -|T| * lambda_i^s for base directions,
///   lambda_{n-1} = a'' / (1 + a'^2)^{3/2} for the T direction.
FrameData frame_data(const IsoparametricBase& base, const Profile& pr, double s,
                     double tol = kDefaultTol);

/// |lambda_n(s) - central difference of |T| at s| with step h; O(h^2) for
/// smooth profiles. Probes the first-order relation lambda_n = d|T|/ds.
double check_kn_ode(const IsoparametricBase& base, const Profile& pr, double s,
                    double h, double tol = kDefaultTol);

}  // namespace prodcurv
