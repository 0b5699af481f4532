#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "prodcurv/config.hpp"
#include "prodcurv/errors.hpp"
#include "test_util.hpp"

using namespace prodcurv;

namespace {

const char* kMinimalConfig =
    "epsilon = 1\n"
    "n = 4\n"
    "base.kind = geodesic_sphere\n"
    "base.r = 0.5235987755982988\n"
    "profile.family = linear\n"
    "profile.alpha = 1.5\n"
    "s_range = 0, 0.4, 9\n";

}  // namespace

TEST_CASE("parse_config round trip") {
  const RunConfig cfg = parse_config_text(kMinimalConfig);
  CHECK(cfg.sf.epsilon == 1);
  CHECK(cfg.sf.n == 4);
  CHECK(cfg.base.kind == BaseKind::GeodesicSphere);
  CHECK(cfg.base.r == 0.5235987755982988);
  CHECK(cfg.base.orientation == 1);
  CHECK(cfg.profile.family == ProfileFamily::Linear);
  CHECK(cfg.profile.alpha == 1.5);
  CHECK(cfg.s_range.count == 9);
  CHECK(cfg.tol == kDefaultTol);
  CHECK(cfg.format == OutFormat::Csv);
  CHECK(cfg.out == "-");

  const auto pts = cfg.s_range.points();
  REQUIRE(pts.size() == 9);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 0.4);
}

TEST_CASE("parse_config optional keys") {
  const RunConfig cfg = parse_config_text(
      "epsilon = -1\n"
      "n = 5\n"
      "# full-line comment\n"
      "base.kind = equidistant\n"
      "base.r = 0.75\n"
      "base.orientation = -1\n"
      "profile.family = sinh\n"
      "profile.alpha = 2\n"
      "profile.beta = -0.5\n"
      "s_range = (-1, 1, 21)\n"
      "tol = 1e-10\n"
      "format = json\n"
      "out = run.json\n");
  CHECK(cfg.sf.epsilon == -1);
  CHECK(cfg.base.kind == BaseKind::Equidistant);
  CHECK(cfg.base.orientation == -1);
  CHECK(cfg.profile.beta == -0.5);
  CHECK(cfg.tol == 1e-10);
  CHECK(cfg.format == OutFormat::Json);
  CHECK(cfg.out == "run.json");
  CHECK(cfg.s_range.points().size() == 21);
}

TEST_CASE("parse_config rejects invalid values") {
  SUBCASE("epsilon") {
    try {
      parse_config_text(
          "epsilon = 0\nn = 4\nbase.kind = totally_geodesic\n"
          "profile.family = linear\ns_range = 0, 1, 5\n");
      FAIL("expected DomainError");
    } catch (const DomainError& err) {
      CHECK(std::string(err.what()) == "epsilon must be ±1");
    }
  }
  SUBCASE("n below 2") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 1\nbase.kind = totally_geodesic\n"
                                      "profile.family = linear\ns_range = 0, 1, 5\n"),
                    DomainError);
  }
  SUBCASE("horosphere needs the hyperbolic factor") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = horosphere\n"
                                      "profile.family = linear\ns_range = 0, 1, 5\n"),
                    DomainError);
  }
  SUBCASE("bad base kind / profile family names") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = sphere\n"
                                      "profile.family = linear\ns_range = 0, 1, 5\n"),
                    DomainError);
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = totally_geodesic\n"
                                      "profile.family = cubic\ns_range = 0, 1, 5\n"),
                    DomainError);
  }
  SUBCASE("tol must be positive") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = totally_geodesic\n"
                                      "profile.family = linear\ns_range = 0, 1, 5\ntol = 0\n"),
                    DomainError);
  }
  SUBCASE("format") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = totally_geodesic\n"
                                      "profile.family = linear\ns_range = 0, 1, 5\nformat = xml\n"),
                    DomainError);
  }
}

TEST_CASE("parse_config rejects malformed text with line numbers") {
  SUBCASE("unknown key") {
    try {
      parse_config_text("epsilon = 1\nn = 4\nbase.radius = 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 3);
      CHECK(std::string(err.what()).find("unknown key 'base.radius'") != std::string::npos);
    }
  }
  SUBCASE("duplicate key") {
    try {
      parse_config_text("epsilon = 1\nepsilon = -1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 2);
    }
  }
  SUBCASE("missing '='") {
    CHECK_THROWS_AS(parse_config_text("epsilon 1\n"), ParseError);
  }
  SUBCASE("bad number names the key") {
    try {
      parse_config_text("epsilon = 1\nn = 4\nbase.kind = geodesic_sphere\nbase.r = big\n"
                        "profile.family = linear\ns_range = 0, 1, 5\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(std::string(err.what()).find("base.r") != std::string::npos);
    }
  }
  SUBCASE("s_range arity") {
    CHECK_THROWS_AS(parse_config_text("epsilon = 1\nn = 4\nbase.kind = totally_geodesic\n"
                                      "profile.family = linear\ns_range = 0, 1\n"),
                    ParseError);
  }
}

TEST_CASE("parse_config requires the mandatory keys") {
  for (const char* missing : {"epsilon", "n", "base.kind", "profile.family", "s_range"}) {
    std::string text;
    if (std::string(missing) != "epsilon") text += "epsilon = 1\n";
    if (std::string(missing) != "n") text += "n = 4\n";
    if (std::string(missing) != "base.kind") text += "base.kind = totally_geodesic\n";
    if (std::string(missing) != "profile.family") text += "profile.family = linear\n";
    if (std::string(missing) != "s_range") text += "s_range = 0, 1, 5\n";
    try {
      parse_config_text(text);
      FAIL("expected DomainError for missing ", missing);
    } catch (const DomainError& err) {
      CHECK(std::string(err.what()) ==
            std::string("config is missing required key '") + missing + "'");
    }
  }
}

TEST_CASE("SRange::points") {
  const SRange single{0.5, 0.5, 1};
  const auto one = single.points();
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 0.5);

  const SRange range{0.0, 1.0, 5};
  const auto pts = range.points();
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == 0.0);
  CHECK(pts[2] == 0.5);
  CHECK(pts[4] == 1.0);  // endpoint assigned exactly

  const SRange zero_count{0.0, 1.0, 0};
  const SRange reversed{1.0, 0.0, 5};
  const SRange degenerate{1.0, 1.0, 2};
  CHECK_THROWS_AS(zero_count.points(), DomainError);
  CHECK_THROWS_AS(reversed.points(), DomainError);
  CHECK_THROWS_AS(degenerate.points(), DomainError);
}

TEST_CASE("out format names") {
  CHECK(to_string(OutFormat::Csv) == "csv");
  CHECK(to_string(OutFormat::Json) == "json");
  CHECK(parse_out_format("csv") == OutFormat::Csv);
  CHECK(parse_out_format("json") == OutFormat::Json);
  CHECK_THROWS_AS(parse_out_format("yaml"), DomainError);
}

TEST_CASE("expand_sweep builds the cartesian grid in file order") {
  const SweepPlan plan = expand_sweep_text(
      "epsilon = 1\n"
      "n = 4\n"
      "base.kind = geodesic_sphere\n"
      "base.r = 0.4, 0.8, 3\n"
      "profile.family = linear\n"
      "profile.alpha = 1, 2, 2\n"
      "s_range = 0, 0.3, 5\n");
  REQUIRE(plan.params == std::vector<std::string>{"base.r", "profile.alpha"});
  REQUIRE(plan.cases.size() == 6);

  const auto r_values = SRange{0.4, 0.8, 3}.points();
  // Last swept key varies fastest.
  CHECK(plan.cases[0].base.r == r_values[0]);
  CHECK(plan.cases[0].profile.alpha == 1.0);
  CHECK(plan.cases[1].base.r == r_values[0]);
  CHECK(plan.cases[1].profile.alpha == 2.0);
  CHECK(plan.cases[2].base.r == r_values[1]);  // 17-digit round trip is exact
  CHECK(plan.cases[5].base.r == r_values[2]);
  CHECK(plan.cases[5].profile.alpha == 2.0);
  for (const RunConfig& cfg : plan.cases) {
    CHECK(cfg.sf.n == 4);
    CHECK(cfg.s_range.count == 5);
  }
}

TEST_CASE("expand_sweep with no swept keys yields one case") {
  const SweepPlan plan = expand_sweep_text(kMinimalConfig);
  CHECK(plan.params.empty());
  REQUIRE(plan.cases.size() == 1);
  CHECK(plan.cases[0].base.r == 0.5235987755982988);
}

TEST_CASE("expand_sweep validates the axis triples") {
  CHECK_THROWS_AS(expand_sweep_text("epsilon = 1\nn = 4\nbase.kind = geodesic_sphere\n"
                                    "base.r = 0.4, 0.8\nprofile.family = linear\n"
                                    "s_range = 0, 0.3, 5\n"),
                  ParseError);
}

TEST_CASE("make_profile honors the config") {
  RunConfig cfg = parse_config_text(kMinimalConfig);
  SUBCASE("linear") {
    const Profile pr = make_profile(cfg);
    CHECK(pr.family() == ProfileFamily::Linear);
    CHECK(pr.a1(0.0) == 1.5);
  }
  SUBCASE("rotation requires a geodesic-sphere base") {
    cfg.profile.family = ProfileFamily::Rotation;
    cfg.profile.c = 2.0;
    const Profile pr = make_profile(cfg);
    CHECK(pr.family() == ProfileFamily::Rotation);
    CHECK(pr.a1(0.0) > 0.0);

    cfg.base.kind = BaseKind::TotallyGeodesic;
    CHECK_THROWS_AS(make_profile(cfg), DomainError);
  }
  SUBCASE("sampled requires a path") {
    cfg.profile.family = ProfileFamily::Sampled;
    cfg.profile.path.clear();
    CHECK_THROWS_AS(make_profile(cfg), DomainError);
  }
  SUBCASE("sampled loads the CSV file") {
    const std::string path = "test_config_profile_tmp.csv";
    {
      std::ofstream out(path);
      out << "s,a\n0,0\n0.5,0.6\n1.0,1.3\n1.5,2.2\n2.0,3.4\n";
    }
    cfg.profile.family = ProfileFamily::Sampled;
    cfg.profile.path = path;
    const Profile pr = make_profile(cfg);
    CHECK(pr.family() == ProfileFamily::Sampled);
    CHECK(pr.a(1.0) == doctest::Approx(1.3).epsilon(1e-9));
    std::remove(path.c_str());
  }
}

TEST_CASE("make_base resolves against the space form") {
  const RunConfig cfg = parse_config_text(kMinimalConfig);
  const IsoparametricBase base = make_base(cfg);
  CHECK(base.sf.n == 4);
  CHECK(base.spec.kind == BaseKind::GeodesicSphere);
  REQUIRE(base.curvatures.size() == 1);
  CHECK(base.curvatures[0].multiplicity == 3);
}
