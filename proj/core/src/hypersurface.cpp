#include "prodcurv/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::vector<CurvatureClass> FrameData::grouped_base_curvatures(double tol) const {
  std::vector<double> base(lambda.begin(), lambda.end() - 1);
  std::sort(base.begin(), base.end());
  std::vector<CurvatureClass> classes;
  for (double v : base) {
    if (!classes.empty() && std::abs(v - classes.back().value) <= tol) {
      ++classes.back().multiplicity;
    } else {
      classes.push_back({v, 1});
    }
  }
  return classes;
}

void FrameData::check(double tol) const {
  if (lambda.empty() || lambda.size() != t.size()) {
    throw InvariantError("frame needs matching lambda/t vectors of size n");
  }
  if (!(nu > 0.0)) {
    throw InvariantError("angle function must be positive, got nu = " + std::to_string(nu));
  }
  if (std::abs(t_norm * t_norm + nu * nu - 1.0) > tol) {
    throw InvariantError("|T|^2 + nu^2 != 1 beyond tolerance");
  }
  if (std::abs(norm2(t) - t_norm) > tol) {
    throw InvariantError("|t| does not match t_norm");
  }
  const double mean = std::accumulate(lambda.begin(), lambda.end(), 0.0) / n();
  if (std::abs(mean - mean_curvature) > tol) {
    throw InvariantError("mean curvature does not match the curvature average");
  }
}

FrameData make_synthetic_frame(std::vector<double> lambda, std::vector<double> t, double s) {
  if (lambda.size() < 2 || lambda.size() != t.size()) {
    throw ShapeError("synthetic frame needs lambda and t of equal size n >= 2");
  }
  FrameData fd;
  fd.s = s;
  fd.t_norm = norm2(t);
  if (!(fd.t_norm < 1.0)) {
    throw InvariantError("synthetic frame needs |t| < 1, got " + std::to_string(fd.t_norm));
  }
  fd.nu = std::sqrt(1.0 - fd.t_norm * fd.t_norm);
  fd.mean_curvature =
      std::accumulate(lambda.begin(), lambda.end(), 0.0) / static_cast<double>(lambda.size());
  fd.lambda = std::move(lambda);
  fd.t = std::move(t);
  return fd;
}

FrameData make_slice_frame(int n) {
  if (n < 2) throw DomainError("slice frame needs n >= 2");
  FrameData fd;
  fd.lambda.assign(n, 0.0);
  fd.t.assign(n, 0.0);
  fd.t_norm = 0.0;
  fd.nu = 1.0;
  fd.mean_curvature = 0.0;
  return fd;
}

TNormAngle t_norm_angle(const Profile& pr, double s) {
  const double d = pr.a1(s);  // throws outside the domain / on a' <= 0
  const double root = std::sqrt(1.0 + d * d);
  return {d / root, 1.0 / root};
}

FrameData frame_data(const IsoparametricBase& base, const Profile& pr, double s, double tol) {
  const int n = base.sf.n;
  const auto [t_norm, nu] = t_norm_angle(pr, s);

  FrameData fd;
  fd.s = s;
  fd.lambda.reserve(n);
  for (const auto& cls : base.curvatures) {
    const double lam_s = parallel_curvature(cls.value, base.sf, s, tol);
    fd.lambda.insert(fd.lambda.end(), cls.multiplicity, -t_norm * lam_s);
  }
  const double d1 = pr.a1(s);
  const double d2 = pr.a2(s);
  fd.lambda.push_back(d2 / std::pow(std::sqrt(1.0 + d1 * d1), 3));

  fd.t.assign(n, 0.0);
  fd.t.back() = t_norm;
  fd.t_norm = t_norm;
  fd.nu = nu;
  fd.mean_curvature = std::accumulate(fd.lambda.begin(), fd.lambda.end(), 0.0) / n;
  return fd;
}

double check_kn_ode(const IsoparametricBase& base, const Profile& pr, double s, double h,
                    double tol) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const FrameData fd = frame_data(base, pr, s, tol);
  const double t_plus = t_norm_angle(pr, s + h).t_norm;
  const double t_minus = t_norm_angle(pr, s - h).t_norm;
  return std::abs(fd.lambda_t() - (t_plus - t_minus) / (2.0 * h));
}

}  // namespace prodcurv
