#include "prodcurv/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

std::string describe(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Composite Simpson rule with `panels` equal panels, each sampled at its
// midpoint. Deterministic for fixed arguments.
double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (a == b) return 0.0;
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    acc += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
  }
  return acc;
}

}  // namespace

std::string to_string(ProofCase c) {
  switch (c) {
    case ProofCase::AllEqual: return "all-equal";
    case ProofCase::TwoDistinct: return "two-distinct";
    case ProofCase::SliceBranch: return "slice";
  }
  std::abort();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentConstantCurvature: return "consistent-constant-curvature";
    case Verdict::Contradiction: return "contradiction";
    case Verdict::NotEinstein: return "not-einstein";
  }
  std::abort();
}

std::string to_json(const ProofCaseReport& report) {
  nlohmann::ordered_json j;
  j["case"] = to_string(report.proof_case);
  j["verdict"] = to_string(report.verdict);
  j["n3_obstruction"] = report.n3_obstruction;
  nlohmann::ordered_json res = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.residuals) res[name] = value;
  j["residuals"] = std::move(res);
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  for (const auto& d : report.details) {
    details.push_back({{"equation", d.equation}, {"lhs", d.lhs}, {"rhs", d.rhs}});
  }
  j["details"] = std::move(details);
  return j.dump();
}

double lemma2_offdiag(const FrameData& fd, const SpaceForm& sf, double rho) {
  (void)rho;  // the off-diagonal Einstein condition is rho-independent
  const int n = fd.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      worst = std::max(worst, std::abs(ricci_closed_form(fd, sf, i, j)));
    }
  }
  return worst;
}

DistinctCount count_distinct(const FrameData& fd, double tol) {
  const auto groups = fd.grouped_base_curvatures(tol);
  DistinctCount out;
  out.d_base = static_cast<int>(groups.size());
  const double nH = fd.n() * fd.mean_curvature;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const double li = groups[i].value;
      const double lj = groups[j].value;
      out.pairs_residual = std::max(out.pairs_residual, std::abs((li - lj) * (nH - li - lj)));
    }
  }
  return out;
}

ProofCaseReport slice_branch(const FrameData& fd, const SpaceForm& sf, double tol) {
  if (fd.t_norm > tol) {
    throw DomainError("slice branch requires |T| = 0, got |T| = " + describe(fd.t_norm));
  }
  const int n = fd.n();
  const double eps = sf.epsilon;

  ProofCaseReport report;
  report.proof_case = ProofCase::SliceBranch;

  double shape = 0.0;
  for (double l : fd.lambda) shape = std::max(shape, std::abs(l));

  double ric_worst = 0.0;
  double ric_worst_val = eps * (n - 1);
  double sec_worst = 0.0;
  double sec_worst_val = eps;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double target = (i == j) ? eps * (n - 1) : 0.0;
      const double ric = ricci_closed_form(fd, sf, i, j);
      const double dev = std::abs(ric - target);
      if (dev > ric_worst) {
        ric_worst = dev;
        ric_worst_val = ric;
      }
      if (i < j) {
        const double k = sectional(fd, sf, i, j);
        if (std::abs(k - eps) > sec_worst) {
          sec_worst = std::abs(k - eps);
          sec_worst_val = k;
        }
      }
    }
  }
  const CurvatureReport curv = curvature_report(fd, sf);

  report.residuals["shape-vanishes"] = shape;
  report.residuals["ricci-identity"] = ric_worst;
  report.residuals["sectional-constant"] = sec_worst;
  report.residuals["rho-slice"] = std::abs(curv.rho - eps * (n - 1));
  report.details.push_back({"shape-vanishes", shape, 0.0});
  report.details.push_back({"ricci-identity", ric_worst_val, eps * (n - 1)});
  report.details.push_back({"sectional-constant", sec_worst_val, eps});
  report.details.push_back({"rho-slice", curv.rho, eps * (n - 1)});

  bool ok = true;
  for (const auto& [name, value] : report.residuals) ok = ok && value < tol;
  report.verdict = ok ? Verdict::ConsistentConstantCurvature : Verdict::NotEinstein;
  return report;
}

ProofCaseReport all_equal_branch(const FrameData& fd, const SpaceForm& sf, double rho,
                                 double tol) {
  const auto groups = fd.grouped_base_curvatures(tol);
  if (groups.size() != 1) {
    throw DomainError("all-equal branch requires a single distinct base curvature, got " +
                      std::to_string(groups.size()));
  }
  const int n = fd.n();
  const double eps = sf.epsilon;
  const double mu = groups.front().value;
  const double lam_n = fd.lambda_t();
  const double t2 = fd.t_norm * fd.t_norm;
  const double nH = n * fd.mean_curvature;

  ProofCaseReport report;
  report.proof_case = ProofCase::AllEqual;

  const double eq_i = eps * (n - 1 - t2) + nH * mu - mu * mu;
  const double eq_n = eps * (n - 1) * (1.0 - t2) + nH * lam_n - lam_n * lam_n;
  const double k_in = eps * (1.0 - t2) + mu * lam_n;
  const double k_target = rho / (n - 1);
  const double k_in_from_base = rho - (n - 2) * (mu * mu + eps);
  const double k_ij = eps + mu * mu;

  report.details.push_back({"equation-lambda-i", eq_i, rho});
  report.details.push_back({"equation-lambda-n", eq_n, rho});
  report.details.push_back({"constant-sectional-n", k_in, k_target});
  report.details.push_back({"constant-sectional-i", k_in, k_in_from_base});
  report.residuals["equation-lambda-i"] = std::abs(eq_i - rho);
  report.residuals["equation-lambda-n"] = std::abs(eq_n - rho);
  report.residuals["constant-sectional-n"] = std::abs(k_in - k_target);
  report.residuals["constant-sectional-i"] = std::abs(k_in - k_in_from_base);
  if (n >= 3) {
    report.details.push_back({"sectional-ij", k_ij, k_target});
    report.residuals["sectional-ij"] = std::abs(k_ij - k_target);
  }

  bool ok = true;
  for (const auto& [name, value] : report.residuals) ok = ok && value < tol;
  report.verdict = ok ? Verdict::ConsistentConstantCurvature : Verdict::NotEinstein;
  return report;
}

ProofCaseReport two_distinct_branch(const SpaceForm& sf, int p, int q, double rho) {
  const int n = sf.n;
  if (p < 1 || q < 1 || p + q != n - 1) {
    throw DomainError("two-distinct branch needs multiplicities p, q >= 1 with p + q = n - 1");
  }
  const double eps = sf.epsilon;
  if (rho == eps * (n - 1)) {
    throw DomainError(
        "two-distinct branch requires rho != eps * (n - 1); equality forces |T| = 0 (slice)");
  }

  ProofCaseReport report;
  report.proof_case = ProofCase::TwoDistinct;

  // nH = lambda_1 + lambda_2 makes the trace route for lambda_n agree with the
  // closed form (1-p) lambda_1 + (1-q) lambda_2. Dyadic samples keep the
  // identity exact in floating point.
  const double samples[][2] = {{0.75, -0.25}, {1.25, 2.5}, {-0.875, 0.5}};
  double edo_res = 0.0;
  EquationCheck edo_detail{"first-edo", 0.0, 0.0};
  for (const auto& pair : samples) {
    const double l1 = pair[0];
    const double l2 = pair[1];
    const double trace_route = (l1 + l2) - p * l1 - q * l2;
    const double closed_route = (1 - p) * l1 + (1 - q) * l2;
    const double dev = std::abs(trace_route - closed_route);
    if (dev >= edo_res) {
      edo_res = dev;
      edo_detail = {"first-edo", trace_route, closed_route};
    }
  }

  // |T|^2 of the subbranch lambda_n != 0.
  const double t2_nonzero = (eps * (n - 1) - rho) / (2.0 * eps);
  // |T|^2 of the subbranch lambda_n == 0.
  const double t2_zero = (eps * (n - 1) - rho) / (eps * (n - 1));
  // Base-equation product and the induced product of original curvatures.
  const double product = ((n - 2.0) / (n - 1.0)) * (rho - eps * (n - 1));
  const double product_s = product / t2_zero;
  const double cartan_product = -eps;
  const double required_product = -eps * (n - 2);

  const int obstruction = n - 3;

  report.residuals["first-edo"] = edo_res;
  report.residuals["t-squared-substitution-lambda-n-nonzero"] =
      std::abs(2.0 * eps * t2_nonzero - (eps * (n - 1) - rho));
  report.residuals["t-squared-substitution-lambda-n-zero"] =
      std::abs(eps * (n - 1) * (1.0 - t2_zero) - rho);
  report.residuals["t-squared-forms-gap"] = std::abs(t2_nonzero - t2_zero);
  report.residuals["second-edo-3-einstein"] = std::abs(product_s - required_product);
  report.residuals["cartan-vs-second-edo-3"] = std::abs(cartan_product - required_product);

  report.details.push_back(edo_detail);
  report.details.push_back(
      {"t-squared-substitution-lambda-n-nonzero", 2.0 * eps * t2_nonzero, eps * (n - 1) - rho});
  report.details.push_back(
      {"t-squared-substitution-lambda-n-zero", eps * (n - 1) * (1.0 - t2_zero), rho});
  report.details.push_back({"t-squared-forms-gap", t2_nonzero, t2_zero});
  report.details.push_back({"second-edo-3-einstein", product_s, required_product});
  report.details.push_back({"cartan-vs-second-edo-3", cartan_product, required_product});

  report.n3_obstruction = static_cast<double>(obstruction);
  report.verdict =
      obstruction == 0 ? Verdict::ConsistentConstantCurvature : Verdict::Contradiction;
  return report;
}

Profile rotation_profile(const SpaceForm& sf, double c, double r) {
  const double eps = sf.epsilon;
  if (c < eps) {
    throw NoRealSolutionError("rotation profile needs c >= eps; got c = " + describe(c) +
                              " with eps = " + describe(eps));
  }
  if (c == eps) {
    throw DomainError("rotation profile degenerates to a slice at c = eps (a' = 0)");
  }
  const IsoparametricBase base = make_geodesic_sphere(sf, r);
  const double lambda_g = base.curvatures.front().value;
  const double k = std::sqrt(c - eps);

  Interval domain;
  domain.hi = r;
  if (sf.epsilon == +1) {
    domain.lo = r - std::atan(1.0 / k);
  } else if (k > 1.0) {
    domain.lo = r - std::atanh(1.0 / k);
  }  // k <= 1 in H^n: every s < r works

  const SpaceForm sff = sf;
  auto slope = [sff, lambda_g, k](double s) {
    const double L = parallel_curvature(lambda_g, sff, s);
    return k / std::sqrt(L * L - k * k);
  };
  auto slope_deriv = [sff, lambda_g, k](double s) {
    const double L = parallel_curvature(lambda_g, sff, s);
    const double v = L * L - k * k;
    return -k * L * (sff.epsilon + L * L) / (v * std::sqrt(v));
  };
  const double s_ref =
      std::isfinite(domain.lo) ? 0.5 * (domain.lo + domain.hi) : domain.hi - 1.0;
  auto height = [slope, s_ref](double s) {
    const int panels = 256 * std::max(1, static_cast<int>(std::ceil(std::abs(s - s_ref))));
    return simpson(slope, s_ref, s, panels);
  };

  return Profile(domain, ProfileFamily::Rotation, height, slope, slope_deriv);
}

RotationFamily construct_constant_curvature_rotation(const SpaceForm& sf, double c, double r,
                                                     std::span<const double> grid, double tol) {
  const double eps = sf.epsilon;
  if (c < eps) {
    throw NoRealSolutionError("constant curvature c = " + describe(c) +
                              " is not attainable: need c >= eps = " + describe(eps));
  }
  const IsoparametricBase base = make_geodesic_sphere(sf, r);
  const double lambda_g = base.curvatures.front().value;
  const int n = sf.n;
  const double ksq = c - eps;
  const double k = std::sqrt(ksq);

  RotationFamily fam;
  fam.mu = -k;
  fam.rho = (n - 1) * c;
  fam.frames.reserve(grid.size());
  fam.reports.reserve(grid.size());
  fam.profile_samples.reserve(grid.size());

  const SpaceForm sff = sf;
  const std::function<double(double)> slope = [sff, lambda_g, k](double s) {
    const double L = parallel_curvature(lambda_g, sff, s);
    return k / std::sqrt(L * L - k * k);
  };

  double a_accum = 0.0;
  double prev_s = 0.0;
  bool first = true;
  for (double s : grid) {
    FrameData fd;
    if (ksq == 0.0) {
      fd = make_slice_frame(n);
      fd.s = s;
    } else {
      const double L = parallel_curvature(lambda_g, sf, s, tol);
      const double t_norm = k / L;
      if (!(t_norm > 0.0 && t_norm < 1.0)) {
        throw DomainError("rotation construction: |T| = " + describe(t_norm) + " at s = " +
                          describe(s) + " lies outside (0, 1)");
      }
      const double lam_n = -k * (eps + L * L) / (L * L);
      fd.s = s;
      fd.lambda.assign(n, -k);
      fd.lambda.back() = lam_n;
      fd.t.assign(n, 0.0);
      fd.t.back() = t_norm;
      fd.t_norm = t_norm;
      fd.nu = std::sqrt(1.0 - t_norm * t_norm);
      fd.mean_curvature = ((n - 1) * -k + lam_n) / n;
      if (!first) a_accum += simpson(slope, prev_s, s, 64);
    }
    fam.profile_samples.push_back({s, a_accum});
    const CurvatureReport rep = curvature_report(fd, sf);
    fam.max_einstein_defect = std::max(fam.max_einstein_defect, rep.einstein_defect);
    fam.max_k_spread = std::max(fam.max_k_spread, rep.k_spread);
    fam.frames.push_back(std::move(fd));
    fam.reports.push_back(rep);
    prev_s = s;
    first = false;
  }
  return fam;
}

std::string to_json(const TheoremSummary& summary) {
  nlohmann::ordered_json j;
  j["einstein"] = summary.einstein;
  j["pass"] = summary.pass;
  j["points"] = summary.points;
  j["tol"] = summary.tol;
  j["k_tol"] = summary.k_tol;
  j["max_einstein_defect"] = summary.max_einstein_defect;
  j["worst_s"] = summary.worst_s;
  j["max_k_spread"] = summary.max_k_spread;
  j["k_range"] = summary.k_range;
  j["rho_range"] = summary.rho_range;
  j["rho"] = summary.rho;
  j["k0"] = summary.k0;
  j["message"] = summary.message;
  return j.dump();
}

TheoremSummary verify_theorem(std::span<const FrameData> frames, const SpaceForm& sf,
                              double tol) {
  TheoremSummary out;
  out.tol = tol;
  out.k_tol = 10.0 * tol;
  out.points = static_cast<int>(frames.size());
  if (frames.empty()) {
    out.message = "empty grid";
    return out;
  }

  std::vector<std::size_t> order(frames.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&frames](std::size_t a, std::size_t b) { return frames[a].s < frames[b].s; });

  double kmin = std::numeric_limits<double>::infinity();
  double kmax = -kmin;
  double rhomin = kmin;
  double rhomax = -kmin;
  out.max_einstein_defect = -1.0;
  bool pointwise_ok = true;
  for (std::size_t idx : order) {
    const FrameData& fd = frames[idx];
    const CurvatureReport rep = curvature_report(fd, sf);
    if (rep.einstein_defect > out.max_einstein_defect) {
      out.max_einstein_defect = rep.einstein_defect;
      out.worst_s = fd.s;
    }
    out.max_k_spread = std::max(out.max_k_spread, rep.k_spread);
    for (double kv : rep.sectional) {
      kmin = std::min(kmin, kv);
      kmax = std::max(kmax, kv);
    }
    rhomin = std::min(rhomin, rep.rho);
    rhomax = std::max(rhomax, rep.rho);
    if (rep.einstein_defect < tol && rep.k_spread >= out.k_tol) pointwise_ok = false;
  }
  out.k_range = kmax - kmin;
  out.rho_range = rhomax - rhomin;
  out.k0 = 0.5 * (kmin + kmax);
  out.rho = 0.5 * (rhomin + rhomax);
  out.einstein = out.max_einstein_defect < tol;

  std::ostringstream msg;
  if (out.einstein) {
    out.pass = pointwise_ok && out.k_range < out.k_tol;
    if (out.pass) {
      msg << "Einstein family: constant sectional curvature K = " << out.k0
          << ", rho = " << out.rho;
    } else {
      msg << "Einstein family with non-constant sectional curvature (K range " << out.k_range
          << ")";
    }
  } else {
    out.pass = pointwise_ok;
    msg << "not Einstein: max defect " << out.max_einstein_defect << " at s = " << out.worst_s;
    if (!pointwise_ok) msg << "; pointwise constancy violated";
  }
  out.message = msg.str();
  return out;
}

TheoremSummary verify_theorem(const IsoparametricBase& base, const Profile& pr,
                              std::span<const double> grid, double tol) {
  std::vector<FrameData> frames;
  frames.reserve(grid.size());
  for (double s : grid) frames.push_back(frame_data(base, pr, s, tol));
  return verify_theorem(std::span<const FrameData>(frames), base.sf, tol);
}

}  // namespace prodcurv
