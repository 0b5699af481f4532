#pragma once

#include <span>

namespace prodcurv {

/// Global comparison tolerance; every op that compares floats takes it as a
/// defaulted parameter so call sites can override.
inline constexpr double kDefaultTol = 1e-9;

/// Ambient factor Q^n(eps): the unit sphere S^n for eps = +1, hyperbolic
/// space H^n for eps = -1.
struct SpaceForm {
  int epsilon = +1;
  int n = 2;
};

/// Validating constructor: epsilon must be +-1 and n >= 2.
SpaceForm make_space_form(int epsilon, int n);

struct TrigPair {
  double c = 1.0;
  double s = 0.0;
};

/// (C_eps(s), S_eps(s)) = (cos s, sin s) when eps = +1 and (cosh s, sinh s)
/// when eps = -1. Satisfies C^2 + eps * S^2 = 1.
TrigPair eps_trig(const SpaceForm& sf, double s);

/// Inner product of the flat model space containing Q^n(eps) x R:
/// Euclidean for eps = +1, Lorentzian (sign flip on the first coordinate)
/// for eps = -1. Both vectors must have length n + 2.
double ambient_inner(const SpaceForm& sf, std::span<const double> u,
                     std::span<const double> v);

}  // namespace prodcurv
