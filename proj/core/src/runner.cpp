#include "prodcurv/runner.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <thread>

#include "json.hpp"
#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

nlohmann::ordered_json row_json(const RowResult& row) {
  nlohmann::ordered_json j;
  j["s"] = row.frame.s;
  j["lambda"] = row.frame.lambda;
  j["t_norm"] = row.frame.t_norm;
  j["nu"] = row.frame.nu;
  j["H"] = row.frame.mean_curvature;
  j["rho"] = row.report.rho;
  j["einstein_defect"] = row.report.einstein_defect;
  j["k_spread"] = row.report.k_spread;
  j["ric_diag"] = row.report.ric_diag;
  j["sectional"] = row.report.sectional;
  return j;
}

nlohmann::ordered_json summary_json(const TheoremSummary& summary) {
  return nlohmann::ordered_json::parse(to_json(summary));
}

std::vector<RowResult> evaluate_frames(const IsoparametricBase& base, const Profile& pr,
                                       const std::vector<double>& points, double tol,
                                       int jobs) {
  const std::size_t count = points.size();
  std::vector<RowResult> rows(count);
  std::vector<std::exception_ptr> failures(count);

  auto eval_one = [&](std::size_t i) {
    try {
      RowResult row;
      row.frame = frame_data(base, pr, points[i], tol);
      row.report = curvature_report(row.frame, base.sf);
      rows[i] = std::move(row);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const int workers = std::min<int>(std::max(jobs, 1), static_cast<int>(count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) eval_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          eval_one(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
  }
  return rows;
}

void append_csv_rows(std::string& out, const std::vector<RowResult>& rows) {
  for (const auto& row : rows) {
    out += csv_row(row.frame, row.report);
    out += '\n';
  }
}

TheoremSummary summarize(const std::vector<RowResult>& rows, const SpaceForm& sf, double tol) {
  std::vector<FrameData> frames;
  frames.reserve(rows.size());
  for (const auto& row : rows) frames.push_back(row.frame);
  return verify_theorem(std::span<const FrameData>(frames), sf, tol);
}

}  // namespace

std::vector<RowResult> evaluate_grid(const RunConfig& cfg, int jobs) {
  const IsoparametricBase base = make_base(cfg);
  const Profile pr = make_profile(cfg);
  return evaluate_frames(base, pr, cfg.s_range.points(), cfg.tol, jobs);
}

std::string render_report(const RunConfig& cfg, int jobs) {
  const std::vector<RowResult> rows = evaluate_grid(cfg, jobs);
  if (cfg.format == OutFormat::Csv) {
    std::string out = csv_header(cfg.sf.n);
    out += '\n';
    append_csv_rows(out, rows);
    return out;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : rows) j.push_back(row_json(row));
  return j.dump() + "\n";
}

double sweep_param(const RunConfig& cfg, const std::string& key) {
  if (key == "base.r") return cfg.base.r;
  if (key == "profile.alpha") return cfg.profile.alpha;
  if (key == "profile.beta") return cfg.profile.beta;
  if (key == "profile.gamma") return cfg.profile.gamma;
  if (key == "profile.theta") return cfg.profile.theta;
  if (key == "profile.c") return cfg.profile.c;
  throw DomainError("unknown sweep parameter '" + key + "'");
}

std::string render_sweep(const SweepPlan& plan, int jobs) {
  if (plan.cases.empty()) throw DomainError("sweep plan has no cases");
  const OutFormat format = plan.cases.front().format;

  if (format == OutFormat::Csv) {
    std::string out = csv_header(plan.cases.front().sf.n);
    out += '\n';
    for (std::size_t c = 0; c < plan.cases.size(); ++c) {
      const RunConfig& cfg = plan.cases[c];
      out += "# case " + std::to_string(c);
      for (std::size_t p = 0; p < plan.params.size(); ++p) {
        out += (p == 0 ? ": " : ", ");
        out += plan.params[p] + " = " + format_g17(sweep_param(cfg, plan.params[p]));
      }
      out += '\n';
      append_csv_rows(out, evaluate_grid(cfg, jobs));
    }
    return out;
  }

  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < plan.cases.size(); ++c) {
    const RunConfig& cfg = plan.cases[c];
    const std::vector<RowResult> rows = evaluate_grid(cfg, jobs);
    nlohmann::ordered_json case_json;
    case_json["case"] = c;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& key : plan.params) params[key] = sweep_param(cfg, key);
    case_json["params"] = std::move(params);
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) rows_json.push_back(row_json(row));
    case_json["rows"] = std::move(rows_json);
    case_json["theorem"] = summary_json(summarize(rows, cfg.sf, cfg.tol));
    j.push_back(std::move(case_json));
  }
  return j.dump() + "\n";
}

std::string render_rotation(const SpaceForm& sf, double c, double r, const SRange& range,
                            OutFormat format, double tol) {
  const std::vector<double> points = range.points();
  const RotationFamily fam = construct_constant_curvature_rotation(sf, c, r, points, tol);

  if (format == OutFormat::Csv) {
    std::string out = csv_header(sf.n);
    out += '\n';
    for (std::size_t i = 0; i < fam.frames.size(); ++i) {
      out += csv_row(fam.frames[i], fam.reports[i]);
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json j;
  j["mu"] = fam.mu;
  j["rho"] = fam.rho;
  j["max_einstein_defect"] = fam.max_einstein_defect;
  j["max_k_spread"] = fam.max_k_spread;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < fam.frames.size(); ++i) {
    rows.push_back(row_json({fam.frames[i], fam.reports[i]}));
  }
  j["rows"] = std::move(rows);
  j["theorem"] = summary_json(verify_theorem(
      std::span<const FrameData>(fam.frames), sf, tol));
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& sample : fam.profile_samples) {
    samples.push_back({{"s", sample.s}, {"a", sample.a}});
  }
  j["profile_samples"] = std::move(samples);
  return j.dump() + "\n";
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw Error("failed writing output file '" + out_path + "'");
}

}  // namespace prodcurv
