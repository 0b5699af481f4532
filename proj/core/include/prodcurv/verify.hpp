#pragma once

#include <string>
#include <vector>

namespace prodcurv {

/// Property suites behind the `verify` subcommand.
///   identities: derivative relation order, slice identities, |T|^2 forms
///   cartan:     catalog Cartan sums (d = 2 plus vacuous d = 1)
///   lemma1:     Ricci closed form vs tensor contraction on random frames
///   theorem:    rotation constructions and the Einstein => constant-K sweep
///   n3:         two-distinct-curvature obstruction across dimensions
enum class VerifySuite { Identities, Cartan, Lemma1, Theorem, N3 };

VerifySuite parse_suite(const std::string& name);
std::string to_string(VerifySuite suite);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // worst observed value (or order statistic, see detail)
  double bound = 0.0;
  std::string detail;
};

struct SuiteResult {
  VerifySuite suite = VerifySuite::Identities;
  bool pass = false;
  std::vector<CheckResult> checks;
};

std::string to_json(const SuiteResult& result);

CheckResult check_lemma1_equivalence();
CheckResult check_cartan_catalog();
CheckResult check_cartan_vacuous();
CheckResult check_kn_ode_order();
CheckResult check_slice_branch_identities();
CheckResult check_rotation_constructions();
CheckResult check_two_distinct_obstruction();
CheckResult check_t_squared_forms();
CheckResult check_einstein_sweep();

SuiteResult run_verify(VerifySuite suite);
std::vector<SuiteResult> run_all_suites();

}  // namespace prodcurv
