#include "prodcurv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

std::string format_interval(const Interval& iv) {
  std::ostringstream os;
  os << "(" << iv.lo << ", " << iv.hi << ")";
  return os.str();
}

/// Natural cubic spline on strictly increasing nodes.
class CubicSpline {
 public:
  explicit CubicSpline(std::vector<ProfileSample> samples) : pts_(std::move(samples)) {
    const std::size_t m = pts_.size();
    // Second derivatives from the tridiagonal system, natural boundary
    // conditions M_0 = M_{m-1} = 0.
    m2_.assign(m, 0.0);
    std::vector<double> diag(m, 0.0), rhs(m, 0.0), upper(m, 0.0);
    diag[0] = diag[m - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
      const double h0 = pts_[i].s - pts_[i - 1].s;
      const double h1 = pts_[i + 1].s - pts_[i].s;
      const double lower = h0 / 6.0;
      diag[i] = (h0 + h1) / 3.0;
      upper[i] = h1 / 6.0;
      rhs[i] = (pts_[i + 1].a - pts_[i].a) / h1 - (pts_[i].a - pts_[i - 1].a) / h0;
      // forward elimination against the already-reduced previous row
      const double w = lower / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = m - 1; i-- > 1;) {
      m2_[i] = (rhs[i] - upper[i] * m2_[i + 1]) / diag[i];
    }
  }

  double value(double s) const {
    const auto [i, t, h] = locate(s);
    const double b = slope_coeff(i, h);
    const double c = m2_[i] / 2.0;
    const double d = (m2_[i + 1] - m2_[i]) / (6.0 * h);
    return pts_[i].a + t * (b + t * (c + t * d));
  }

  double deriv1(double s) const {
    const auto [i, t, h] = locate(s);
    const double b = slope_coeff(i, h);
    const double c = m2_[i] / 2.0;
    const double d = (m2_[i + 1] - m2_[i]) / (6.0 * h);
    return b + t * (2.0 * c + t * 3.0 * d);
  }

  double deriv2(double s) const {
    const auto [i, t, h] = locate(s);
    const double c = m2_[i] / 2.0;
    const double d = (m2_[i + 1] - m2_[i]) / (6.0 * h);
    return 2.0 * c + 6.0 * d * t;
  }

  double front() const { return pts_.front().s; }
  double back() const { return pts_.back().s; }
  std::size_t segments() const { return pts_.size() - 1; }

  double segment_lo(std::size_t i) const { return pts_[i].s; }
  double segment_hi(std::size_t i) const { return pts_[i + 1].s; }

 private:
  struct Local {
    std::size_t i;
    double t;
    double h;
  };

  Local locate(double s) const {
    auto it = std::upper_bound(pts_.begin(), pts_.end(), s,
                               [](double v, const ProfileSample& p) { return v < p.s; });
    std::size_t i = static_cast<std::size_t>(std::distance(pts_.begin(), it));
    i = (i == 0) ? 0 : std::min(i - 1, pts_.size() - 2);
    const double h = pts_[i + 1].s - pts_[i].s;
    return {i, s - pts_[i].s, h};
  }

  double slope_coeff(std::size_t i, double h) const {
    return (pts_[i + 1].a - pts_[i].a) / h - h * (2.0 * m2_[i] + m2_[i + 1]) / 6.0;
  }

  std::vector<ProfileSample> pts_;
  std::vector<double> m2_;
};

}  // namespace

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Linear: return "linear";
    case ProfileFamily::Quadratic: return "quadratic";
    case ProfileFamily::Exponential: return "exponential";
    case ProfileFamily::Sinh: return "sinh";
    case ProfileFamily::ConstantAngle: return "constant_angle";
    case ProfileFamily::Rotation: return "rotation";
    case ProfileFamily::Sampled: return "sampled";
  }
  return "unknown";
}

Profile::Profile(Interval domain, ProfileFamily family, Evaluator a, Evaluator a1, Evaluator a2)
    : domain_(domain),
      family_(family),
      a_(std::move(a)),
      a1_(std::move(a1)),
      a2_(std::move(a2)) {}

void Profile::require_in_domain(double s) const {
  if (!domain_.contains(s)) {
    throw DomainError("s = " + std::to_string(s) + " outside profile domain " +
                      format_interval(domain_));
  }
}

double Profile::a(double s) const {
  require_in_domain(s);
  return a_(s);
}

double Profile::a1(double s) const {
  require_in_domain(s);
  const double d = a1_(s);
  if (!(d > 0.0)) {
    throw InvariantError("profile slope a'(s) = " + std::to_string(d) +
                         " is not positive at s = " + std::to_string(s));
  }
  return d;
}

double Profile::a2(double s) const {
  require_in_domain(s);
  return a2_(s);
}

Profile linear_profile(double alpha, double beta) {
  if (!(alpha > 0.0)) {
    throw DomainError("linear profile needs alpha > 0, got " + std::to_string(alpha));
  }
  return Profile(
      Interval{}, ProfileFamily::Linear, [=](double s) { return alpha * s + beta; },
      [=](double) { return alpha; }, [](double) { return 0.0; });
}

Profile quadratic_profile(double alpha, double beta, double gamma) {
  Interval domain;
  if (alpha > 0.0) {
    domain.lo = -beta / alpha;
  } else if (alpha < 0.0) {
    domain.hi = -beta / alpha;
  } else if (!(beta > 0.0)) {
    throw DomainError("quadratic profile with alpha = 0 needs beta > 0");
  }
  return Profile(
      domain, ProfileFamily::Quadratic,
      [=](double s) { return 0.5 * alpha * s * s + beta * s + gamma; },
      [=](double s) { return alpha * s + beta; }, [=](double) { return alpha; });
}

Profile exponential_profile(double alpha, double beta) {
  if (!(alpha * beta > 0.0)) {
    throw DomainError("exponential profile needs alpha * beta > 0");
  }
  return Profile(
      Interval{}, ProfileFamily::Exponential,
      [=](double s) { return alpha * std::exp(beta * s); },
      [=](double s) { return alpha * beta * std::exp(beta * s); },
      [=](double s) { return alpha * beta * beta * std::exp(beta * s); });
}

Profile sinh_profile(double alpha, double beta) {
  if (!(alpha > 0.0)) {
    throw DomainError("sinh profile needs alpha > 0, got " + std::to_string(alpha));
  }
  return Profile(
      Interval{}, ProfileFamily::Sinh,
      [=](double s) { return alpha * std::sinh(s) + beta; },
      [=](double s) { return alpha * std::cosh(s); },
      [=](double s) { return alpha * std::sinh(s); });
}

Profile constant_angle_profile(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
    throw DomainError("constant angle must lie in (0, pi/2), got " + std::to_string(theta));
  }
  const double slope = std::tan(theta);
  return Profile(
      Interval{}, ProfileFamily::ConstantAngle, [=](double s) { return slope * s; },
      [=](double) { return slope; }, [](double) { return 0.0; });
}

Profile sampled_profile(std::vector<ProfileSample> samples) {
  if (samples.size() < 4) {
    throw DomainError("sampled profile needs at least 4 nodes, got " +
                      std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].s) || !std::isfinite(samples[i].a)) {
      throw DomainError("sampled profile has a non-finite entry at row " + std::to_string(i));
    }
    if (i > 0 && !(samples[i].s > samples[i - 1].s)) {
      throw DomainError("sampled profile grid must be strictly increasing (row " +
                        std::to_string(i) + ")");
    }
  }

  auto spline = std::make_shared<CubicSpline>(std::move(samples));

  // The interpolant must keep a positive slope everywhere, not just at the
  // nodes; probe each segment densely.
  for (std::size_t i = 0; i < spline->segments(); ++i) {
    const double lo = spline->segment_lo(i);
    const double hi = spline->segment_hi(i);
    for (int k = 0; k <= 8; ++k) {
      const double s = lo + (hi - lo) * k / 8.0;
      if (!(spline->deriv1(s) > 0.0)) {
        throw InvariantError("sampled profile slope is not positive near s = " +
                             std::to_string(s));
      }
    }
  }

  Interval domain{spline->front(), spline->back(), /*closed=*/true};
  return Profile(
      domain, ProfileFamily::Sampled, [spline](double s) { return spline->value(s); },
      [spline](double s) { return spline->deriv1(s); },
      [spline](double s) { return spline->deriv2(s); });
}

Profile read_sampled_profile(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;

  auto strip = [](std::string text) {
    const auto b = text.find_first_not_of(" \t\r");
    const auto e = text.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string{} : text.substr(b, e - b + 1);
  };

  if (!std::getline(in, line)) {
    throw ParseError(1, origin + ": empty profile file");
  }
  ++lineno;
  if (strip(line) != "s,a") {
    throw ParseError(lineno, origin + ": expected header \"s,a\", got \"" + strip(line) + "\"");
  }

  std::vector<ProfileSample> samples;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string row = strip(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw ParseError(lineno, origin + ": expected \"s,a\" row");
    }
    try {
      std::size_t used = 0;
      const double s = std::stod(row.substr(0, comma), &used);
      const double a = std::stod(row.substr(comma + 1), &used);
      samples.push_back({s, a});
    } catch (const std::exception&) {
      throw ParseError(lineno, origin + ": could not parse numbers in \"" + row + "\"");
    }
  }
  return sampled_profile(std::move(samples));
}

Profile load_sampled_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open profile sample file: " + path);
  }
  return read_sampled_profile(in, path);
}

}  // namespace prodcurv
