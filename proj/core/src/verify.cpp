#include "prodcurv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"
#include "prodcurv/classifier.hpp"
#include "prodcurv/config.hpp"
#include "prodcurv/curvature.hpp"
#include "prodcurv/errors.hpp"
#include "prodcurv/hypersurface.hpp"

namespace prodcurv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic uniform doubles with engine-defined output only, so streams
// are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

std::vector<double> linspace(double lo, double hi, int count) {
  SRange range;
  range.start = lo;
  range.stop = hi;
  range.count = count;
  return range.points();
}

std::string describe(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

VerifySuite parse_suite(const std::string& name) {
  if (name == "identities") return VerifySuite::Identities;
  if (name == "cartan") return VerifySuite::Cartan;
  if (name == "lemma1") return VerifySuite::Lemma1;
  if (name == "theorem") return VerifySuite::Theorem;
  if (name == "n3") return VerifySuite::N3;
  throw DomainError("unknown verify suite '" + name +
                    "'; expected identities, cartan, lemma1, theorem or n3");
}

std::string to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::Identities: return "identities";
    case VerifySuite::Cartan: return "cartan";
    case VerifySuite::Lemma1: return "lemma1";
    case VerifySuite::Theorem: return "theorem";
    case VerifySuite::N3: return "n3";
  }
  return "unknown";
}

std::string to_json(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["suite"] = to_string(result.suite);
  j["pass"] = result.pass;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"residual", c.residual},
                      {"bound", c.bound},
                      {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j.dump();
}

CheckResult check_lemma1_equivalence() {
  Rng rng(0x5eedULL);
  const int kFrames = 1200;
  double worst = 0.0;
  int worst_n = 0;

  for (int trial = 0; trial < kFrames; ++trial) {
    const int eps = rng.uniform_int(0, 1) == 0 ? +1 : -1;
    const int n = rng.uniform_int(4, 8);
    const SpaceForm sf = make_space_form(eps, n);

    std::vector<double> lambda(static_cast<std::size_t>(n));
    for (double& l : lambda) l = rng.uniform(-2.0, 2.0);

    std::vector<double> t(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (double& c : t) {
      c = rng.uniform(-1.0, 1.0);
      norm2 += c * c;
    }
    const double target = rng.uniform(0.0, 0.95);
    const double scale = norm2 > 0.0 ? target / std::sqrt(norm2) : 0.0;
    for (double& c : t) c *= scale;

    const FrameData fd = make_synthetic_frame(lambda, t);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double dev =
            std::abs(ricci_closed_form(fd, sf, i, j) - ricci_by_contraction(fd, sf, i, j));
        if (dev > worst) {
          worst = dev;
          worst_n = n;
        }
      }
    }
  }

  CheckResult out;
  out.name = "lemma1-closed-form-vs-contraction";
  out.residual = worst;
  out.bound = 1e-10;
  out.pass = worst < out.bound;
  out.detail = std::to_string(kFrames) + " random frames, n in {4..8}, both eps; worst at n = " +
               std::to_string(worst_n);
  return out;
}

CheckResult check_cartan_catalog() {
  double worst = 0.0;
  int cases = 0;
  for (double r : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
    for (int n = 3; n <= 8; ++n) {
      for (int p = 1; p <= n - 2; ++p) {
        const int q = n - 1 - p;
        const SpaceForm sf = make_space_form(+1, n);
        const IsoparametricBase base = make_clifford_product(sf, r, p, q);
        for (double res : cartan_residuals(base)) worst = std::max(worst, std::abs(res));
        ++cases;
      }
    }
  }

  CheckResult out;
  out.name = "cartan-clifford-catalog";
  out.residual = worst;
  out.bound = 1e-9;
  out.pass = worst < out.bound;
  out.detail = std::to_string(cases) + " Clifford products, r in {pi/6, pi/4, pi/3}, n <= 8";
  return out;
}

CheckResult check_cartan_vacuous() {
  int cases = 0;
  bool all_empty = true;
  for (int n : {4, 6}) {
    const SpaceForm sp = make_space_form(+1, n);
    const SpaceForm hy = make_space_form(-1, n);
    const IsoparametricBase bases[] = {
        make_totally_geodesic(sp),   make_geodesic_sphere(sp, 0.7),
        make_totally_geodesic(hy),   make_geodesic_sphere(hy, 0.9),
        make_horosphere(hy),         make_equidistant(hy, 1.1),
    };
    for (const auto& base : bases) {
      all_empty = all_empty && cartan_residuals(base).empty();
      ++cases;
    }
  }

  CheckResult out;
  out.name = "cartan-d1-vacuous";
  out.residual = 0.0;
  out.bound = 1e-9;
  out.pass = all_empty;
  out.detail = std::to_string(cases) + " single-curvature bases: identity vacuous (no sums)";
  return out;
}

CheckResult check_kn_ode_order() {
  Rng rng(0x0deULL);
  const int kTriples = 100;
  const double h = 1e-2;
  const double floor = 1e-12;

  double min_order = std::numeric_limits<double>::infinity();
  double max_res = 0.0;
  int measured = 0;

  for (int trial = 0; trial < kTriples; ++trial) {
    const int kind = rng.uniform_int(0, 6);
    IsoparametricBase base = make_totally_geodesic(make_space_form(+1, 4));
    double lo = -1.0;
    double hi = 1.0;
    switch (kind) {
      case 0: {  // totally geodesic slice of S^n
        base = make_totally_geodesic(make_space_form(+1, rng.uniform_int(4, 7)));
        break;
      }
      case 1: {  // geodesic sphere in S^n
        const double r = rng.uniform(0.6, 1.2);
        base = make_geodesic_sphere(make_space_form(+1, rng.uniform_int(4, 7)), r);
        lo = r - 0.9;
        hi = r - 0.15;
        break;
      }
      case 2: {  // Clifford product
        const double r = rng.uniform(kPi / 5.0, kPi / 3.0);
        const int p = rng.uniform_int(1, 2);
        const int q = rng.uniform_int(1, 3);
        base = make_clifford_product(make_space_form(+1, p + q + 1), r, p, q);
        lo = r - kPi / 2.0 + 0.15;
        hi = r - 0.12;
        break;
      }
      case 3: {
        base = make_totally_geodesic(make_space_form(-1, rng.uniform_int(4, 7)));
        break;
      }
      case 4: {
        const double r = rng.uniform(0.6, 1.5);
        base = make_geodesic_sphere(make_space_form(-1, rng.uniform_int(4, 7)), r);
        lo = r - 1.2;
        hi = r - 0.15;
        break;
      }
      case 5: {
        base = make_horosphere(make_space_form(-1, rng.uniform_int(4, 7)));
        break;
      }
      default: {
        base = make_equidistant(make_space_form(-1, rng.uniform_int(4, 7)), rng.uniform(0.5, 1.5));
        break;
      }
    }
    const double s = rng.uniform(lo, hi);

    const int fam = rng.uniform_int(0, 4);
    const double alpha = rng.uniform(0.5, 2.0);
    Profile pr = linear_profile(alpha);
    switch (fam) {
      case 0: break;
      case 1: pr = quadratic_profile(alpha, alpha * (1.0 - lo)); break;
      case 2: pr = sinh_profile(alpha); break;
      case 3: pr = exponential_profile(alpha, rng.uniform(0.3, 1.0)); break;
      default: pr = constant_angle_profile(rng.uniform(0.3, 1.2)); break;
    }

    const double r1 = check_kn_ode(base, pr, s, h);
    const double r2 = check_kn_ode(base, pr, s, h / 2.0);
    max_res = std::max(max_res, r1);
    if (r1 < floor) continue;  // below measurement noise; consistent with O(h^2)
    const double order = r2 < 1e-15 ? 3.0 : std::log2(r1 / r2);
    min_order = std::min(min_order, order);
    ++measured;
  }

  CheckResult out;
  out.name = "kn-ode-central-difference-order";
  out.residual = std::isfinite(min_order) ? min_order : 2.0;
  out.bound = 1.9;
  out.pass = (!std::isfinite(min_order) || min_order >= 1.9) && max_res <= 100.0 * h * h;
  out.detail = "min observed halving order over " + std::to_string(measured) + "/" +
               std::to_string(kTriples) + " measurable triples; max residual(h=1e-2) = " +
               describe(max_res);
  return out;
}

CheckResult check_slice_branch_identities() {
  double worst = 0.0;
  bool verdicts_ok = true;
  int cases = 0;
  for (int eps : {+1, -1}) {
    for (int n = 3; n <= 8; ++n) {
      const SpaceForm sf = make_space_form(eps, n);
      const FrameData fd = make_slice_frame(n);
      const ProofCaseReport rep = slice_branch(fd, sf, 1e-12);
      verdicts_ok = verdicts_ok && rep.verdict == Verdict::ConsistentConstantCurvature;
      for (const auto& [name, value] : rep.residuals) worst = std::max(worst, value);
      ++cases;
    }
  }

  CheckResult out;
  out.name = "slice-branch-identities";
  out.residual = worst;
  out.bound = 1e-12;
  out.pass = verdicts_ok && worst < out.bound;
  out.detail = std::to_string(cases) +
               " slices (both eps, n in {3..8}): Ric = eps(n-1) I and K = eps";
  return out;
}

CheckResult check_rotation_constructions() {
  struct Case {
    int eps;
    int n;
    double c;
    double r;
    double lo;
    double hi;
  };
  const Case cases[] = {
      {+1, 4, 2.0, kPi / 6.0, -0.2, 0.45},
      {+1, 5, 1.5, kPi / 6.0, -0.3, 0.4},
      {-1, 4, 0.0, 1.0, -1.0, 0.8},
      {-1, 6, -0.5, 1.0, -0.5, 0.8},
  };

  double worst = 0.0;
  std::ostringstream detail;
  detail << "21-point grids:";
  for (const Case& c : cases) {
    const SpaceForm sf = make_space_form(c.eps, c.n);
    const std::vector<double> grid = linspace(c.lo, c.hi, 21);
    const RotationFamily fam = construct_constant_curvature_rotation(sf, c.c, c.r, grid);
    double rho_dev = 0.0;
    for (const auto& rep : fam.reports) {
      rho_dev = std::max(rho_dev, std::abs(rep.rho - (c.n - 1) * c.c));
    }
    const double case_worst = std::max({fam.max_einstein_defect, fam.max_k_spread, rho_dev});
    worst = std::max(worst, case_worst);
    detail << " (" << (c.eps > 0 ? "+1" : "-1") << "," << c.n << ",c=" << c.c
           << "): " << describe(case_worst);
  }

  CheckResult out;
  out.name = "rotation-constant-curvature";
  out.residual = worst;
  out.bound = 1e-8;
  out.pass = worst < out.bound;
  out.detail = detail.str();
  return out;
}

CheckResult check_two_distinct_obstruction() {
  bool ok = true;
  double worst = 0.0;
  int cases = 0;
  for (int eps : {+1, -1}) {
    for (int n = 4; n <= 64; ++n) {
      const SpaceForm sf = make_space_form(eps, n);
      const double rho = 0.5 * eps * (n - 1);
      for (int p = 1; p <= n - 2; ++p) {
        const ProofCaseReport rep = two_distinct_branch(sf, p, n - 1 - p, rho);
        ok = ok && rep.verdict == Verdict::Contradiction;
        ok = ok && rep.n3_obstruction == static_cast<double>(n - 3);
        worst = std::max(worst, std::abs(rep.n3_obstruction - (n - 3)));
        ++cases;
      }
    }
    // n = 3 oracle point: the obstruction vanishes and the branch closes.
    const SpaceForm sf3 = make_space_form(eps, 3);
    const ProofCaseReport rep3 = two_distinct_branch(sf3, 1, 1, 0.5 * eps * 2.0);
    ok = ok && rep3.verdict == Verdict::ConsistentConstantCurvature;
    ok = ok && rep3.n3_obstruction == 0.0;
    ++cases;
  }

  CheckResult out;
  out.name = "two-distinct-obstruction-n-minus-3";
  out.residual = worst;
  out.bound = 0.0;
  out.pass = ok && worst == 0.0;
  out.detail = std::to_string(cases) +
               " (eps, n, p, q) cases, n in {3..64}: obstruction exactly n - 3";
  return out;
}

CheckResult check_t_squared_forms() {
  static const char* kNames[] = {"first-edo",
                                 "t-squared-substitution-lambda-n-nonzero",
                                 "t-squared-substitution-lambda-n-zero",
                                 "t-squared-forms-gap",
                                 "second-edo-3-einstein",
                                 "cartan-vs-second-edo-3"};

  double worst = 0.0;
  bool ok = true;
  int cases = 0;
  for (int eps : {+1, -1}) {
    for (int n : {3, 4, 5, 6, 8, 10}) {
      const SpaceForm sf = make_space_form(eps, n);
      for (double rho : {0.5 * eps * (n - 1), -1.7, 2.2, 0.3}) {
        if (rho == eps * (n - 1.0)) continue;
        const ProofCaseReport rep = two_distinct_branch(sf, 1, n - 2, rho);
        for (const char* name : kNames) {
          ok = ok && rep.residuals.count(name) == 1;
          ok = ok && std::any_of(rep.details.begin(), rep.details.end(),
                                 [name](const EquationCheck& d) { return d.equation == name; });
        }
        worst = std::max({worst, rep.residuals.at("t-squared-substitution-lambda-n-nonzero"),
                          rep.residuals.at("t-squared-substitution-lambda-n-zero"),
                          rep.residuals.at("second-edo-3-einstein"),
                          rep.residuals.at("first-edo")});
        const double gap = rep.residuals.at("t-squared-forms-gap");
        const double expected_gap =
            std::abs(eps * (n - 1.0) - rho) * (n - 3.0) / (2.0 * (n - 1.0));
        if (n == 3) {
          ok = ok && gap < 1e-15;
        } else {
          ok = ok && gap > 0.0 && std::abs(gap - expected_gap) < 1e-12;
        }
        ++cases;
      }
    }
  }

  CheckResult out;
  out.name = "t-squared-constancy-forms";
  out.residual = worst;
  out.bound = 1e-12;
  out.pass = ok && worst < out.bound;
  out.detail = std::to_string(cases) +
               " (eps, n, rho) substitutions; named residuals present; forms incompatible for "
               "n > 3 with the exact gap";
  return out;
}

CheckResult check_einstein_sweep() {
  struct SweepCase {
    IsoparametricBase base;
    Profile pr;
    std::vector<double> grid;
  };
  std::vector<SweepCase> cases;

  auto add_generic = [&cases](const IsoparametricBase& base, double lo, double hi) {
    const std::vector<double> grid = linspace(lo, hi, 9);
    const Profile profiles[] = {
        linear_profile(0.5),          linear_profile(1.0),
        linear_profile(2.0),          quadratic_profile(0.8, 2.0),
        sinh_profile(1.0),            exponential_profile(1.0, 0.5),
        constant_angle_profile(kPi / 5.0),
    };
    for (const Profile& pr : profiles) cases.push_back({base, pr, grid});
  };

  for (int n : {4, 5, 6}) add_generic(make_totally_geodesic(make_space_form(+1, n)), -1.0, 1.0);
  for (double r : {0.4, 0.8, 1.2}) {
    for (int n : {4, 5}) {
      add_generic(make_geodesic_sphere(make_space_form(+1, n), r), r - 1.2, r - 0.1);
    }
  }
  for (double r : {kPi / 6.0, kPi / 4.0}) {
    for (auto [p, q] : {std::pair{2, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      add_generic(make_clifford_product(make_space_form(+1, p + q + 1), r, p, q),
                  r - kPi / 2.0 + 0.12, r - 0.1);
    }
  }
  for (int n : {4, 5, 6}) add_generic(make_totally_geodesic(make_space_form(-1, n)), -1.0, 1.0);
  for (double r : {0.5, 1.0}) {
    for (int n : {4, 5}) {
      add_generic(make_geodesic_sphere(make_space_form(-1, n), r), r - 1.3, r - 0.15);
    }
  }
  for (int n : {4, 5}) add_generic(make_horosphere(make_space_form(-1, n)), -1.0, 1.0);
  for (double r : {0.5, 1.5}) {
    for (int n : {4, 5}) add_generic(make_equidistant(make_space_form(-1, n), r), -1.0, 1.0);
  }

  // Rotation examples: Einstein positives driven through the generic pipeline.
  struct RotCase {
    int eps;
    int n;
    double c;
    double r;
    double lo;
    double hi;
  };
  const RotCase rot_cases[] = {
      {+1, 4, 2.0, kPi / 6.0, -0.2, 0.45},
      {+1, 5, 1.5, kPi / 6.0, -0.3, 0.4},
      {-1, 4, 0.0, 1.0, -1.0, 0.8},
      {-1, 6, -0.5, 1.0, -0.5, 0.8},
  };
  for (const RotCase& rc : rot_cases) {
    const SpaceForm sf = make_space_form(rc.eps, rc.n);
    cases.push_back({make_geodesic_sphere(sf, rc.r), rotation_profile(sf, rc.c, rc.r),
                     linspace(rc.lo, rc.hi, 9)});
  }

  const double tol = 1e-8;
  int einstein_count = 0;
  int violations = 0;
  double worst_einstein_spread = 0.0;
  for (const SweepCase& sc : cases) {
    const TheoremSummary summary = verify_theorem(sc.base, sc.pr, sc.grid, tol);
    if (summary.einstein) {
      ++einstein_count;
      worst_einstein_spread =
          std::max({worst_einstein_spread, summary.max_k_spread, summary.k_range});
    }
    if (!summary.pass) ++violations;
  }

  CheckResult out;
  out.name = "einstein-implies-constant-k-sweep";
  out.residual = worst_einstein_spread;
  out.bound = 1e-7;
  out.pass = cases.size() == 200 && violations == 0 && einstein_count >= 4 &&
             worst_einstein_spread < out.bound;
  out.detail = std::to_string(cases.size()) + " configs: " + std::to_string(einstein_count) +
               " Einstein (constant K), " +
               std::to_string(static_cast<int>(cases.size()) - einstein_count) +
               " non-Einstein, " + std::to_string(violations) + " theorem violations";
  return out;
}

SuiteResult run_verify(VerifySuite suite) {
  SuiteResult out;
  out.suite = suite;
  switch (suite) {
    case VerifySuite::Identities:
      out.checks.push_back(check_kn_ode_order());
      out.checks.push_back(check_slice_branch_identities());
      out.checks.push_back(check_t_squared_forms());
      break;
    case VerifySuite::Cartan:
      out.checks.push_back(check_cartan_catalog());
      out.checks.push_back(check_cartan_vacuous());
      break;
    case VerifySuite::Lemma1:
      out.checks.push_back(check_lemma1_equivalence());
      break;
    case VerifySuite::Theorem:
      out.checks.push_back(check_rotation_constructions());
      out.checks.push_back(check_einstein_sweep());
      break;
    case VerifySuite::N3:
      out.checks.push_back(check_two_distinct_obstruction());
      break;
  }
  out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                         [](const CheckResult& c) { return c.pass; });
  return out;
}

std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> out;
  for (VerifySuite suite : {VerifySuite::Identities, VerifySuite::Cartan, VerifySuite::Lemma1,
                            VerifySuite::Theorem, VerifySuite::N3}) {
    out.push_back(run_verify(suite));
  }
  return out;
}

}  // namespace prodcurv
