#include "prodcurv/base_catalog.hpp"

#include <cmath>
#include <numbers>

#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_orientation(int orientation) {
  require(orientation == 1 || orientation == -1,
          "base orientation must be +1 or -1, got " + std::to_string(orientation));
}

}  // namespace

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::TotallyGeodesic: return "totally_geodesic";
    case BaseKind::GeodesicSphere: return "geodesic_sphere";
    case BaseKind::Horosphere: return "horosphere";
    case BaseKind::Equidistant: return "equidistant";
    case BaseKind::CliffordProduct: return "clifford_product";
  }
  return "unknown";
}

IsoparametricBase make_base(const SpaceForm& sf, const BaseSpec& spec) {
  const SpaceForm checked = make_space_form(sf.epsilon, sf.n);
  require_orientation(spec.orientation);
  const double sign = spec.orientation;
  const int m_all = checked.n - 1;

  IsoparametricBase base{checked, spec, {}};
  switch (spec.kind) {
    case BaseKind::TotallyGeodesic:
      base.curvatures = {{0.0, m_all}};
      break;

    case BaseKind::GeodesicSphere: {
      if (checked.epsilon == 1) {
        require(spec.r > 0.0 && spec.r < std::numbers::pi,
                "geodesic sphere radius must lie in (0, pi) on S^n");
      } else {
        require(spec.r > 0.0, "geodesic sphere radius must be positive");
      }
      const TrigPair cs = eps_trig(checked, spec.r);
      base.curvatures = {{sign * cs.c / cs.s, m_all}};
      break;
    }

    case BaseKind::Horosphere:
      require(checked.epsilon == -1, "horospheres exist only in H^n (epsilon = -1)");
      base.curvatures = {{sign * 1.0, m_all}};
      break;

    case BaseKind::Equidistant: {
      require(checked.epsilon == -1, "equidistant hypersurfaces exist only in H^n (epsilon = -1)");
      require(spec.r > 0.0, "equidistant distance must be positive");
      const TrigPair cs = eps_trig(checked, spec.r);
      base.curvatures = {{sign * cs.s / cs.c, m_all}};
      break;
    }

    case BaseKind::CliffordProduct: {
      require(checked.epsilon == 1, "Clifford products exist only in S^n (epsilon = +1)");
      require(spec.r > 0.0 && spec.r < std::numbers::pi / 2,
              "Clifford angle must lie in (0, pi/2)");
      require(spec.p >= 1 && spec.q >= 1, "Clifford multiplicities must be >= 1");
      require(spec.p + spec.q == m_all,
              "Clifford multiplicities must satisfy p + q = n - 1, got p + q = " +
                  std::to_string(spec.p + spec.q) + " with n = " + std::to_string(checked.n));
      const double tan_r = std::tan(spec.r);
      // Signs fixed so that lambda_1 * lambda_2 = -1 with the normal oriented
      // toward increasing r.
      base.curvatures = {{sign * -tan_r, spec.p}, {sign / tan_r, spec.q}};
      break;
    }
  }
  return base;
}

IsoparametricBase make_totally_geodesic(const SpaceForm& sf, int orientation) {
  return make_base(sf, {.kind = BaseKind::TotallyGeodesic, .orientation = orientation});
}

IsoparametricBase make_geodesic_sphere(const SpaceForm& sf, double r, int orientation) {
  return make_base(sf, {.kind = BaseKind::GeodesicSphere, .r = r, .orientation = orientation});
}

IsoparametricBase make_horosphere(const SpaceForm& sf, int orientation) {
  return make_base(sf, {.kind = BaseKind::Horosphere, .orientation = orientation});
}

IsoparametricBase make_equidistant(const SpaceForm& sf, double r, int orientation) {
  return make_base(sf, {.kind = BaseKind::Equidistant, .r = r, .orientation = orientation});
}

IsoparametricBase make_clifford_product(const SpaceForm& sf, double r, int p, int q,
                                        int orientation) {
  return make_base(
      sf, {.kind = BaseKind::CliffordProduct, .r = r, .p = p, .q = q, .orientation = orientation});
}

double parallel_curvature(double lambda_g, const SpaceForm& sf, double s, double tol) {
  const TrigPair cs = eps_trig(sf, s);
  const double denom = cs.c - lambda_g * cs.s;
  if (std::abs(denom) < tol) {
    throw FocalPointError("focal point: parallel family of curvature " +
                          std::to_string(lambda_g) + " degenerates at s = " +
                          std::to_string(s));
  }
  return (sf.epsilon * cs.s + lambda_g * cs.c) / denom;
}

std::vector<double> cartan_residuals(const IsoparametricBase& base, double tol) {
  const auto& classes = base.curvatures;
  if (classes.size() <= 1) return {};

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (std::abs(classes[i].value - classes[j].value) < tol) {
        throw DomainError("distinct curvature values coincide: " +
                          std::to_string(classes[i].value));
      }
    }
  }

  std::vector<double> residuals;
  residuals.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (j == i) continue;
      acc += classes[j].multiplicity *
             (base.sf.epsilon + classes[i].value * classes[j].value) /
             (classes[i].value - classes[j].value);
    }
    residuals.push_back(acc);
  }
  return residuals;
}

double mean_curvature_of_parallel(const IsoparametricBase& base, double s, double tol) {
  double acc = 0.0;
  int count = 0;
  for (const auto& cls : base.curvatures) {
    acc += cls.multiplicity * parallel_curvature(cls.value, base.sf, s, tol);
    count += cls.multiplicity;
  }
  return acc / count;
}

}  // namespace prodcurv
