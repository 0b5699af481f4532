#include <cmath>
#include <vector>

#include "doctest.h"
#include "prodcurv/errors.hpp"
#include "prodcurv/hypersurface.hpp"
#include "test_util.hpp"

using namespace prodcurv;
using testutil::kPi;

TEST_CASE("t_norm_angle closed-form values") {
  const Profile unit = linear_profile(1.0);
  const auto [tn, nu] = t_norm_angle(unit, 3.0);
  CHECK(tn == doctest::Approx(0.70710678118654746).epsilon(1e-15));
  CHECK(nu == doctest::Approx(0.70710678118654746).epsilon(1e-15));

  const Profile steep = linear_profile(10.0);
  const auto steep_tn = t_norm_angle(steep, 0.0);
  CHECK(steep_tn.t_norm == doctest::Approx(0.99503719020998915).epsilon(1e-15));
  CHECK(steep_tn.nu == doctest::Approx(0.099503719020998915).epsilon(1e-15));
}

TEST_CASE("t_norm_angle invariants over assorted profiles") {
  const std::vector<Profile> profiles = {
      linear_profile(0.3), sinh_profile(1.2, -0.5), exponential_profile(0.7, 1.1),
      constant_angle_profile(kPi / 5.0)};
  for (const auto& pr : profiles) {
    for (double s : {-0.8, -0.1, 0.6, 1.4}) {
      const auto [tn, nu] = t_norm_angle(pr, s);
      CHECK(tn > 0.0);
      CHECK(tn < 1.0);
      CHECK(tn * tn + nu * nu == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(tn / nu == doctest::Approx(pr.a1(s)).epsilon(1e-13));
    }
  }
}

TEST_CASE("frame_data on a totally geodesic base with a linear profile") {
  const auto base = make_totally_geodesic(make_space_form(+1, 4));
  const FrameData fd = frame_data(base, linear_profile(1.0), 0.0);
  CHECK(fd.n() == 4);
  for (int i = 0; i < 4; ++i) CHECK(fd.lambda[i] == 0.0);
  CHECK(fd.t[0] == 0.0);
  CHECK(fd.t[1] == 0.0);
  CHECK(fd.t[2] == 0.0);
  CHECK(fd.t[3] == doctest::Approx(0.70710678118654746).epsilon(1e-15));
  CHECK(fd.mean_curvature == 0.0);
  CHECK_NOTHROW(fd.check());
}

TEST_CASE("frame_data on a geodesic sphere") {
  const auto base = make_geodesic_sphere(make_space_form(+1, 4), kPi / 4.0);
  const FrameData fd = frame_data(base, linear_profile(1.0), 0.0);
  // lambda_i = -|T| * cot(r) = -1/sqrt(2) for the three base directions.
  for (int i = 0; i < 3; ++i) {
    CHECK(fd.lambda[i] == doctest::Approx(-0.70710678118654746).epsilon(1e-14));
  }
  CHECK(fd.lambda_t() == 0.0);
  CHECK(fd.mean_curvature ==
        doctest::Approx(3.0 * -0.70710678118654746 / 4.0).epsilon(1e-14));
  CHECK_NOTHROW(fd.check());
}

TEST_CASE("frame_data expands curvature classes in catalog order") {
  const auto base = make_clifford_product(make_space_form(+1, 4), kPi / 4.0, 2, 1);
  const FrameData fd = frame_data(base, linear_profile(1.0), 0.0);
  const double tn = 0.70710678118654746;
  // Class (-tan r, 2) first, then (cot r, 1), then the T direction.
  CHECK(fd.lambda[0] == doctest::Approx(tn).epsilon(1e-14));
  CHECK(fd.lambda[1] == doctest::Approx(tn).epsilon(1e-14));
  CHECK(fd.lambda[2] == doctest::Approx(-tn).epsilon(1e-14));
  CHECK(fd.lambda[3] == 0.0);
}

TEST_CASE("frame_data lambda_n tracks the profile second derivative") {
  const auto base = make_totally_geodesic(make_space_form(-1, 5));
  const Profile pr = sinh_profile(1.0);
  const double s = 0.3;
  const FrameData fd = frame_data(base, pr, s);
  const double d1 = std::cosh(s), d2 = std::sinh(s);
  CHECK(fd.lambda_t() ==
        doctest::Approx(d2 / std::pow(1.0 + d1 * d1, 1.5)).epsilon(1e-14));
  const double tn = d1 / std::sqrt(1.0 + d1 * d1);
  for (int i = 0; i < 4; ++i) {
    // lambda^s of the totally geodesic base in H^n is -tanh(s).
    CHECK(fd.lambda[i] == doctest::Approx(-tn * -std::tanh(s)).epsilon(1e-13));
  }
  CHECK_NOTHROW(fd.check());
}

TEST_CASE("frame_data propagates focal and domain errors") {
  const auto sphere = make_geodesic_sphere(make_space_form(+1, 4), kPi / 4.0);
  CHECK_THROWS_AS(frame_data(sphere, linear_profile(1.0), kPi / 4.0), FocalPointError);
  const auto tg = make_totally_geodesic(make_space_form(+1, 3));
  CHECK_THROWS_AS(frame_data(tg, quadratic_profile(1.0, -1.0), 0.5), DomainError);
}

TEST_CASE("check_kn_ode") {
  SUBCASE("linear profiles satisfy the relation exactly") {
    const auto base = make_totally_geodesic(make_space_form(+1, 4));
    CHECK(check_kn_ode(base, linear_profile(2.0), 0.3, 1e-3) == 0.0);
  }
  SUBCASE("quadratic profile residual is O(h^2)") {
    const auto base = make_geodesic_sphere(make_space_form(-1, 5), 1.0);
    const Profile pr = quadratic_profile(1.0, 1.0);  // a' = s + 1 > 0 for s > -1
    CHECK(check_kn_ode(base, pr, 0.5, 1e-4) < 1e-7);
  }
  SUBCASE("halving h divides the residual by about four") {
    const auto base = make_totally_geodesic(make_space_form(-1, 4));
    const Profile pr = sinh_profile(1.0);
    const double r1 = check_kn_ode(base, pr, 0.4, 1e-2);
    const double r2 = check_kn_ode(base, pr, 0.4, 5e-3);
    CHECK(r1 > 1e-9);  // far above rounding noise
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
  }
  SUBCASE("rejects a non-positive step") {
    const auto base = make_totally_geodesic(make_space_form(+1, 3));
    CHECK_THROWS_AS(check_kn_ode(base, linear_profile(1.0), 0.0, 0.0), DomainError);
  }
}

TEST_CASE("make_synthetic_frame derives the dependent fields") {
  const FrameData fd = make_synthetic_frame({0.5, -0.25, 1.0}, {0.3, 0.0, 0.4}, 2.0);
  CHECK(fd.s == 2.0);
  CHECK(fd.t_norm == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fd.nu == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(fd.mean_curvature == doctest::Approx((0.5 - 0.25 + 1.0) / 3.0).epsilon(1e-15));
  CHECK_NOTHROW(fd.check());

  CHECK_THROWS_AS(make_synthetic_frame({1.0}, {0.0}), ShapeError);
  CHECK_THROWS_AS(make_synthetic_frame({1.0, 2.0}, {0.0}), ShapeError);
  CHECK_THROWS_AS(make_synthetic_frame({0.0, 0.0}, {0.8, 0.6}), InvariantError);
}

TEST_CASE("make_slice_frame") {
  const FrameData fd = make_slice_frame(3);
  CHECK(fd.n() == 3);
  CHECK(fd.t_norm == 0.0);
  CHECK(fd.nu == 1.0);
  CHECK(fd.mean_curvature == 0.0);
  CHECK_NOTHROW(fd.check());
  CHECK_THROWS_AS(make_slice_frame(1), DomainError);
}

TEST_CASE("FrameData::check catches tampered invariants") {
  FrameData fd = make_synthetic_frame({0.1, 0.2}, {0.0, 0.3});
  fd.nu = -fd.nu;
  CHECK_THROWS_AS(fd.check(), InvariantError);

  fd = make_synthetic_frame({0.1, 0.2}, {0.0, 0.3});
  fd.t_norm = 0.9;
  CHECK_THROWS_AS(fd.check(), InvariantError);

  fd = make_synthetic_frame({0.1, 0.2}, {0.0, 0.3});
  fd.mean_curvature += 0.5;
  CHECK_THROWS_AS(fd.check(), InvariantError);

  fd = make_synthetic_frame({0.1, 0.2}, {0.0, 0.3});
  fd.t.pop_back();
  CHECK_THROWS_AS(fd.check(), InvariantError);
}

TEST_CASE("grouped_base_curvatures clusters within tolerance") {
  const FrameData fd =
      make_synthetic_frame({1.0, 0.5, 1.0 + 1e-12, 2.0}, {0.0, 0.0, 0.0, 0.6});
  const auto classes = fd.grouped_base_curvatures(1e-9);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].value == 0.5);
  CHECK(classes[0].multiplicity == 1);
  CHECK(classes[1].value == 1.0);
  CHECK(classes[1].multiplicity == 2);  // lambda_t = 2.0 is excluded
}
