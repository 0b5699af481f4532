#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prodcurv/config.hpp"
#include "prodcurv/errors.hpp"
#include "prodcurv/runner.hpp"
#include "prodcurv/verify.hpp"

namespace {

struct CommonFlags {
  double tol = 0.0;
  std::string format;
  std::string out;
  int jobs = 1;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_jobs) {
  flags.tol_opt = cmd->add_option("--tol", flags.tol, "Comparison tolerance override");
  flags.format_opt =
      cmd->add_option("--format", flags.format, "Output format: csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
  flags.out_opt = cmd->add_option("--out", flags.out, "Output path ('-' for standard output)");
  if (with_jobs) {
    cmd->add_option("--jobs", flags.jobs, "Worker threads for grid evaluation")
        ->check(CLI::PositiveNumber);
  }
}

void apply_overrides(prodcurv::RunConfig& cfg, const CommonFlags& flags) {
  if (flags.tol_opt->count() > 0) {
    if (!(flags.tol > 0.0)) throw prodcurv::DomainError("tol must be positive");
    cfg.tol = flags.tol;
  }
  if (flags.format_opt->count() > 0) cfg.format = prodcurv::parse_out_format(flags.format);
  if (flags.out_opt->count() > 0) cfg.out = flags.out;
}

prodcurv::SRange parse_srange(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw prodcurv::DomainError("--s-range expects 'start,stop,count', got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    prodcurv::SRange range;
    range.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    range.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    range.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    range.points();  // validate shape
    return range;
  } catch (const std::invalid_argument&) {
    throw prodcurv::DomainError("--s-range expects numbers 'start,stop,count', got '" + text +
                                "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature toolkit for hypersurfaces of S^n x R and H^n x R"};
  app.require_subcommand(1);

  // report
  std::string report_config;
  CommonFlags report_flags;
  CLI::App* report_cmd = app.add_subcommand("report", "Curvature report over a parameter grid");
  report_cmd->add_option("config", report_config, "Config file path")->required();
  add_common_flags(report_cmd, report_flags, /*with_jobs=*/true);

  // sweep
  std::string sweep_config;
  CommonFlags sweep_flags;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Expand swept base/profile parameters and report every case");
  sweep_cmd->add_option("config", sweep_config, "Sweep config file path")->required();
  add_common_flags(sweep_cmd, sweep_flags, /*with_jobs=*/true);

  // rotation
  int rot_eps = +1;
  int rot_n = 0;
  double rot_c = 0.0;
  double rot_r = 0.0;
  std::string rot_range;
  CommonFlags rot_flags;
  CLI::App* rot_cmd = app.add_subcommand(
      "rotation", "Construct the constant-curvature rotation hypersurface family");
  rot_cmd->add_option("--epsilon", rot_eps, "Ambient curvature sign (+1 or -1)")->required();
  rot_cmd->add_option("--n", rot_n, "Hypersurface dimension")->required();
  rot_cmd->add_option("--c", rot_c, "Target sectional curvature")->required();
  rot_cmd->add_option("--r", rot_r, "Geodesic-sphere base radius")->required();
  rot_cmd->add_option("--s-range", rot_range, "Grid 'start,stop,count'")->required();
  add_common_flags(rot_cmd, rot_flags, /*with_jobs=*/false);

  // verify
  std::string suite_name;
  CommonFlags verify_flags;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd
      ->add_option("suite", suite_name, "identities, cartan, lemma1, theorem, n3, or all")
      ->required();
  add_common_flags(verify_cmd, verify_flags, /*with_jobs=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (report_cmd->parsed()) {
      prodcurv::RunConfig cfg = prodcurv::parse_config_file(report_config);
      apply_overrides(cfg, report_flags);
      prodcurv::write_output(prodcurv::render_report(cfg, report_flags.jobs), cfg.out);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      prodcurv::SweepPlan plan = prodcurv::expand_sweep_file(sweep_config);
      for (prodcurv::RunConfig& cfg : plan.cases) apply_overrides(cfg, sweep_flags);
      const std::string out_path = plan.cases.empty() ? "-" : plan.cases.front().out;
      prodcurv::write_output(prodcurv::render_sweep(plan, sweep_flags.jobs), out_path);
      return 0;
    }
    if (rot_cmd->parsed()) {
      if (rot_eps != 1 && rot_eps != -1) throw prodcurv::DomainError("epsilon must be ±1");
      const prodcurv::SpaceForm sf = prodcurv::make_space_form(rot_eps, rot_n);
      const prodcurv::SRange range = parse_srange(rot_range);
      prodcurv::OutFormat format = prodcurv::OutFormat::Csv;
      if (rot_flags.format_opt->count() > 0) {
        format = prodcurv::parse_out_format(rot_flags.format);
      }
      double tol = prodcurv::kDefaultTol;
      if (rot_flags.tol_opt->count() > 0) {
        if (!(rot_flags.tol > 0.0)) throw prodcurv::DomainError("tol must be positive");
        tol = rot_flags.tol;
      }
      const std::string out_path = rot_flags.out_opt->count() > 0 ? rot_flags.out : "-";
      prodcurv::write_output(
          prodcurv::render_rotation(sf, rot_c, rot_r, range, format, tol), out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      std::string text;
      bool pass = true;
      if (suite_name == "all") {
        text = "[";
        const std::vector<prodcurv::SuiteResult> results = prodcurv::run_all_suites();
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (i > 0) text += ",";
          text += prodcurv::to_json(results[i]);
          pass = pass && results[i].pass;
        }
        text += "]\n";
      } else {
        const prodcurv::SuiteResult result = prodcurv::run_verify(prodcurv::parse_suite(suite_name));
        text = prodcurv::to_json(result) + "\n";
        pass = result.pass;
      }
      const std::string out_path = verify_flags.out_opt->count() > 0 ? verify_flags.out : "-";
      prodcurv::write_output(text, out_path);
      return pass ? 0 : 1;
    }
  } catch (const prodcurv::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
