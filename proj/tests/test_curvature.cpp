#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "prodcurv/curvature.hpp"
#include "prodcurv/errors.hpp"
#include "test_util.hpp"

using namespace prodcurv;
using testutil::kPi;

namespace {

FrameData random_frame(testutil::Rng& rng, int n, double t_cap = 0.95) {
  std::vector<double> lambda(n), t(n);
  for (int i = 0; i < n; ++i) lambda[i] = rng.uniform(-2.0, 2.0);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    t[i] = rng.uniform(-1.0, 1.0);
    norm2 += t[i] * t[i];
  }
  const double scale = rng.uniform(0.0, t_cap) / std::sqrt(norm2);
  for (int i = 0; i < n; ++i) t[i] *= scale;
  return make_synthetic_frame(std::move(lambda), std::move(t));
}

}  // namespace

TEST_CASE("gauss_component basics") {
  const SpaceForm sp = make_space_form(+1, 4);
  const FrameData slice = make_slice_frame(4);
  CHECK(gauss_component(slice, sp, 0, 1, 1, 0) == 1.0);
  CHECK(gauss_component(slice, sp, 0, 1, 0, 1) == -1.0);
  CHECK(gauss_component(slice, sp, 0, 1, 2, 3) == 0.0);
  CHECK(gauss_component(slice, sp, 0, 0, 1, 1) == 0.0);

  const SpaceForm hyp = make_space_form(-1, 4);
  CHECK(gauss_component(make_slice_frame(4), hyp, 0, 1, 1, 0) == -1.0);

  CHECK_THROWS_AS(gauss_component(slice, sp, 0, 1, 1, 4), DomainError);
  CHECK_THROWS_AS(gauss_component(slice, sp, -1, 1, 1, 0), DomainError);
}

TEST_CASE("gauss_component mixed-plane value") {
  // Frame with T along the last direction: <R(e_i,e_n)e_n,e_i> =
  // eps(1 - |T|^2) + lambda_i lambda_n.
  const SpaceForm sp = make_space_form(+1, 4);
  const FrameData fd =
      make_synthetic_frame({-0.5, -0.5, -0.5, 0.2}, {0.0, 0.0, 0.0, 0.6});
  const double expect = 1.0 * (1.0 - 0.36) + (-0.5) * 0.2;
  CHECK(gauss_component(fd, sp, 0, 3, 3, 0) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(sectional(fd, sp, 0, 3) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("gauss tensor symmetries and first Bianchi identity") {
  testutil::Rng rng(0x6a55);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(3, 6);
    const SpaceForm sp = make_space_form(trial % 2 == 0 ? +1 : -1, n);
    const FrameData fd = random_frame(rng, n);
    for (int rep = 0; rep < 10; ++rep) {
      const int i = rng.uniform_int(0, n - 1);
      const int j = rng.uniform_int(0, n - 1);
      const int k = rng.uniform_int(0, n - 1);
      const int l = rng.uniform_int(0, n - 1);
      const double r_ijkl = gauss_component(fd, sp, i, j, k, l);
      CHECK(gauss_component(fd, sp, j, i, k, l) ==
            doctest::Approx(-r_ijkl).epsilon(1e-13));
      CHECK(gauss_component(fd, sp, i, j, l, k) ==
            doctest::Approx(-r_ijkl).epsilon(1e-13));
      CHECK(gauss_component(fd, sp, k, l, i, j) ==
            doctest::Approx(r_ijkl).epsilon(1e-13));
      const double bianchi = r_ijkl + gauss_component(fd, sp, j, k, i, l) +
                             gauss_component(fd, sp, k, i, j, l);
      CHECK(std::abs(bianchi) < 1e-12);
    }
  }
}

TEST_CASE("ricci closed form on the slice") {
  const FrameData fd = make_slice_frame(5);
  for (int eps : {+1, -1}) {
    const SpaceForm sp = make_space_form(eps, 5);
    for (int i = 0; i < 5; ++i) {
      CHECK(ricci_closed_form(fd, sp, i, i) == doctest::Approx(4.0 * eps));
      for (int j = 0; j < 5; ++j) {
        if (i != j) CHECK(ricci_closed_form(fd, sp, i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("ricci closed form frozen example") {
  const SpaceForm sp = make_space_form(+1, 4);
  const FrameData fd =
      make_synthetic_frame({-0.5, -0.5, -0.5, 0.2}, {0.0, 0.0, 0.0, 0.6});
  CHECK(fd.mean_curvature == doctest::Approx(-0.325).epsilon(1e-15));
  CHECK(ricci_closed_form(fd, sp, 0, 0) == doctest::Approx(3.04).epsilon(1e-14));
  CHECK(ricci_closed_form(fd, sp, 3, 3) == doctest::Approx(1.62).epsilon(1e-14));
  CHECK(ricci_closed_form(fd, sp, 0, 1) == 0.0);
  CHECK(ricci_by_contraction(fd, sp, 0, 0) == doctest::Approx(3.04).epsilon(1e-13));
  CHECK(ricci_by_contraction(fd, sp, 3, 3) == doctest::Approx(1.62).epsilon(1e-13));
}

TEST_CASE("ricci off-diagonal carries the t_i t_j term") {
  const SpaceForm sp = make_space_form(+1, 4);
  const FrameData fd = make_synthetic_frame({0.1, 0.2, 0.3, 0.4}, {0.3, 0.4, 0.0, 0.0});
  CHECK(ricci_closed_form(fd, sp, 0, 1) == doctest::Approx(-0.24).epsilon(1e-14));
  CHECK(ricci_closed_form(fd, sp, 2, 3) == 0.0);
  CHECK(ricci_by_contraction(fd, sp, 0, 1) == doctest::Approx(-0.24).epsilon(1e-13));
}

TEST_CASE("ricci with T = 0 reduces to the umbilic-free formula") {
  const SpaceForm sp = make_space_form(-1, 5);
  const FrameData fd =
      make_synthetic_frame({1.5, -0.7, 0.3, 0.9, -1.1}, {0.0, 0.0, 0.0, 0.0, 0.0});
  const double nH = 5.0 * fd.mean_curvature;
  for (int i = 0; i < 5; ++i) {
    const double expect = -1.0 * 4.0 + nH * fd.lambda[i] - fd.lambda[i] * fd.lambda[i];
    CHECK(ricci_closed_form(fd, sp, i, i) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("closed-form Ricci equals the Gauss-equation contraction") {
  testutil::Rng rng(0x71c3);
  double worst = 0.0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const SpaceForm sp = make_space_form(trial % 2 == 0 ? +1 : -1, n);
    const FrameData fd = random_frame(rng, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double diff = std::abs(ricci_closed_form(fd, sp, i, j) -
                                     ricci_by_contraction(fd, sp, i, j));
        worst = std::max(worst, diff);
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("sectional curvature") {
  const SpaceForm sp = make_space_form(+1, 4);
  const FrameData slice = make_slice_frame(4);
  CHECK(sectional(slice, sp, 0, 2) == 1.0);
  CHECK(sectional(make_slice_frame(4), make_space_form(-1, 4), 1, 3) == -1.0);

  const FrameData umbilic =
      make_synthetic_frame({0.7, 0.7, 0.7, 0.7}, {0.0, 0.0, 0.0, 0.0});
  CHECK(sectional(umbilic, sp, 0, 1) == doctest::Approx(1.0 + 0.49).epsilon(1e-15));

  CHECK_THROWS_AS(sectional(slice, sp, 2, 2), DomainError);
}

TEST_CASE("sectional_index enumerates pairs lexicographically") {
  CHECK(sectional_index(4, 0, 1) == 0);
  CHECK(sectional_index(4, 0, 3) == 2);
  CHECK(sectional_index(4, 1, 2) == 3);
  CHECK(sectional_index(4, 2, 3) == 5);
  CHECK(sectional_index(4, 3, 2) == 5);  // order-insensitive
  std::size_t expected = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      CHECK(sectional_index(6, i, j) == expected);
      ++expected;
    }
  }
}

TEST_CASE("curvature_report on the slice") {
  const SpaceForm sp = make_space_form(+1, 5);
  const CurvatureReport report = curvature_report(make_slice_frame(5), sp);
  CHECK(report.n == 5);
  CHECK(report.rho == 4.0);
  CHECK(report.einstein_defect == 0.0);
  CHECK(report.k_spread == 0.0);
  CHECK(report.ric_offdiag_max == 0.0);
  REQUIRE(report.sectional.size() == 10);
  for (double k : report.sectional) CHECK(k == 1.0);
  // Space form of curvature K has rho = (n-1) K.
  CHECK(report.rho == doctest::Approx(4.0 * report.sectional[0]));
}

TEST_CASE("curvature_report internal consistency on random frames") {
  testutil::Rng rng(0xc0de);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(3, 7);
    const SpaceForm sp = make_space_form(trial % 2 == 0 ? +1 : -1, n);
    const FrameData fd = random_frame(rng, n);
    const CurvatureReport report = curvature_report(fd, sp);

    double trace = 0.0;
    for (double d : report.ric_diag) trace += d;
    CHECK(report.rho == doctest::Approx(trace / n).epsilon(1e-13));

    double k_min = report.sectional[0], k_max = report.sectional[0];
    for (double k : report.sectional) {
      k_min = std::min(k_min, k);
      k_max = std::max(k_max, k);
    }
    CHECK(report.k_spread == doctest::Approx(k_max - k_min).epsilon(1e-13));

    double defect = report.ric_offdiag_max;
    for (double d : report.ric_diag) defect = std::max(defect, std::abs(d - report.rho));
    CHECK(report.einstein_defect == defect);
  }
}

TEST_CASE("curvature_report flags a generic frame as non-Einstein") {
  const auto base = make_geodesic_sphere(make_space_form(+1, 4), kPi / 4.0);
  const FrameData fd = frame_data(base, linear_profile(1.0), 0.1);
  const CurvatureReport report = curvature_report(fd, make_space_form(+1, 4));
  CHECK(report.einstein_defect > 1e-3);
  CHECK(report.k_spread > 1e-3);
}

TEST_CASE("csv header and row formatting") {
  CHECK(csv_header(3) == "s,lambda_1,lambda_2,lambda_3,t_norm,nu,H,rho,einstein_defect,k_spread");
  CHECK(csv_header(5) ==
        "s,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5,t_norm,nu,H,rho,einstein_defect,k_spread");

  CHECK(format_g17(1.0) == "1");
  CHECK(format_g17(-0.5) == "-0.5");
  CHECK(format_g17(0.1) == "0.10000000000000001");

  const SpaceForm sp = make_space_form(+1, 3);
  FrameData fd = make_synthetic_frame({0.1, 0.25, -0.4}, {0.0, 0.0, 0.3}, 0.7);
  const CurvatureReport report = curvature_report(fd, sp);
  const std::string row = csv_row(fd, report);
  // n lambda columns plus s and the six fixed trailing columns.
  CHECK(std::count(row.begin(), row.end(), ',') == 3 + 6);
  // 17 significant digits survive a parse round trip.
  const std::string first = row.substr(row.find(',') + 1, row.find(',', row.find(',') + 1) -
                                                              row.find(',') - 1);
  CHECK(std::stod(first) == 0.1);
}

TEST_CASE("curvature report JSON field names") {
  const SpaceForm sp = make_space_form(-1, 3);
  const CurvatureReport report = curvature_report(make_slice_frame(3), sp);
  const std::string j = to_json(report);
  CHECK(j.rfind("{\"n\":3", 0) == 0);
  for (const char* key : {"\"ric_diag\":", "\"ric_offdiag_max\":", "\"sectional\":",
                          "\"rho\":", "\"einstein_defect\":", "\"k_spread\":"}) {
    CHECK(j.find(key) != std::string::npos);
  }
}
