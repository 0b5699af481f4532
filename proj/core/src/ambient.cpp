#include "prodcurv/ambient.hpp"

#include <cmath>
#include <string>

#include "prodcurv/errors.hpp"

namespace prodcurv {

SpaceForm make_space_form(int epsilon, int n) {
  if (epsilon != 1 && epsilon != -1) {
    throw DomainError("epsilon must be +1 or -1, got " + std::to_string(epsilon));
  }
  if (n < 2) {
    throw DomainError("space form dimension must be >= 2, got " + std::to_string(n));
  }
  return SpaceForm{epsilon, n};
}

TrigPair eps_trig(const SpaceForm& sf, double s) {
  if (sf.epsilon == 1) {
    return {std::cos(s), std::sin(s)};
  }
  return {std::cosh(s), std::sinh(s)};
}

double ambient_inner(const SpaceForm& sf, std::span<const double> u,
                     std::span<const double> v) {
  const std::size_t dim = static_cast<std::size_t>(sf.n) + 2;
  if (u.size() != dim || v.size() != dim) {
    throw ShapeError("ambient vectors must have length n + 2 = " +
                     std::to_string(dim) + ", got " + std::to_string(u.size()) +
                     " and " + std::to_string(v.size()));
  }
  double acc = (sf.epsilon == 1 ? 1.0 : -1.0) * u[0] * v[0];
  for (std::size_t k = 1; k < dim; ++k) {
    acc += u[k] * v[k];
  }
  return acc;
}

}  // namespace prodcurv
