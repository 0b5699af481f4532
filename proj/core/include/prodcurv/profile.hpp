#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace prodcurv {

/// Interval of valid parameters s; open for analytic families, closed at
/// finite endpoints for sampled profiles.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool closed = false;

  bool contains(double s) const {
    return closed ? (s >= lo && s <= hi) : (s > lo && s < hi);
  }
};

enum class ProfileFamily {
  Linear,
  Quadratic,
  Exponential,
  Sinh,
  ConstantAngle,
  Rotation,
  Sampled
};

std::string to_string(ProfileFamily family);

/// Height function a(s) with analytic first and second derivatives,
/// a'(s) > 0 strictly on the domain.
class Profile {
 public:
  using Evaluator = std::function<double(double)>;

  Profile(Interval domain, ProfileFamily family, Evaluator a, Evaluator a1, Evaluator a2);

  const Interval& domain() const { return domain_; }
  ProfileFamily family() const { return family_; }

  /// Height a(s). Throws DomainError when s is outside the domain.
  double a(double s) const;
  /// First derivative a'(s). Throws InvariantError when a'(s) <= 0.
  double a1(double s) const;
  /// Second derivative a''(s).
  double a2(double s) const;

 private:
  void require_in_domain(double s) const;

  Interval domain_;
  ProfileFamily family_;
  Evaluator a_, a1_, a2_;
};

/// a = alpha * s + beta, alpha > 0.
Profile linear_profile(double alpha, double beta = 0.0);

/// a = alpha * s^2 / 2 + beta * s + gamma, restricted to the half line where
/// a' = alpha * s + beta is positive.
Profile quadratic_profile(double alpha, double beta, double gamma = 0.0);

/// a = alpha * exp(beta * s), alpha * beta > 0.
Profile exponential_profile(double alpha, double beta);

/// a = alpha * sinh(s) + beta, alpha > 0.
Profile sinh_profile(double alpha = 1.0, double beta = 0.0);

/// Constant angle function: a' = tan(theta) for theta in (0, pi/2).
Profile constant_angle_profile(double theta);

struct ProfileSample {
  double s = 0.0;
  double a = 0.0;
};

/// Natural cubic spline through the samples; a', a'' are the analytic
/// derivatives of the interpolant. Requires >= 4 strictly increasing nodes
/// and an interpolant with positive slope.
Profile sampled_profile(std::vector<ProfileSample> samples);

/// Reads a two-column CSV with header "s,a" (strictly increasing s).
Profile load_sampled_profile(const std::string& path);
Profile read_sampled_profile(std::istream& in, const std::string& origin = "<stream>");

}  // namespace prodcurv
