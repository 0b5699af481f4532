#include "prodcurv/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "prodcurv/classifier.hpp"
#include "prodcurv/curvature.hpp"
#include "prodcurv/errors.hpp"

namespace prodcurv {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<Entry> read_entries(std::istream& in) {
  std::vector<Entry> entries;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    Entry e;
    e.key = trim(line.substr(0, eq));
    e.value = trim(line.substr(eq + 1));
    e.line = lineno;
    if (e.key.empty()) throw ParseError(lineno, "empty key");
    if (e.value.empty()) throw ParseError(lineno, "empty value for key '" + e.key + "'");
    for (const auto& seen : entries) {
      if (seen.key == e.key) throw ParseError(lineno, "duplicate key '" + e.key + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

double parse_double(const Entry& e, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(e.line, "key '" + e.key + "': expected a number, got '" + text + "'");
  }
  return v;
}

double parse_double(const Entry& e) { return parse_double(e, e.value); }

int parse_int(const Entry& e, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ParseError(e.line, "key '" + e.key + "': expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

int parse_int(const Entry& e) { return parse_int(e, e.value); }

std::vector<std::string> split_list(std::string v) {
  v = trim(v);
  if (v.size() >= 2 && v.front() == '(' && v.back() == ')') {
    v = trim(v.substr(1, v.size() - 2));
  }
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = v.find(',', pos);
    if (comma == std::string::npos) {
      parts.push_back(trim(v.substr(pos)));
      break;
    }
    parts.push_back(trim(v.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return parts;
}

BaseKind parse_base_kind(const Entry& e) {
  for (BaseKind k : {BaseKind::TotallyGeodesic, BaseKind::GeodesicSphere, BaseKind::Horosphere,
                     BaseKind::Equidistant, BaseKind::CliffordProduct}) {
    if (e.value == to_string(k)) return k;
  }
  throw DomainError("base.kind must be one of totally_geodesic, geodesic_sphere, horosphere, "
                    "equidistant, clifford_product; got '" + e.value + "'");
}

ProfileFamily parse_profile_family(const Entry& e) {
  for (ProfileFamily f :
       {ProfileFamily::Linear, ProfileFamily::Quadratic, ProfileFamily::Exponential,
        ProfileFamily::Sinh, ProfileFamily::ConstantAngle, ProfileFamily::Rotation,
        ProfileFamily::Sampled}) {
    if (e.value == to_string(f)) return f;
  }
  throw DomainError("profile.family must be one of linear, quadratic, exponential, sinh, "
                    "constant_angle, rotation, sampled; got '" + e.value + "'");
}

struct RequiredSeen {
  bool epsilon = false;
  bool n = false;
  bool base_kind = false;
  bool profile_family = false;
  bool s_range = false;
};

void apply_entry(RunConfig& cfg, RequiredSeen& seen, const Entry& e) {
  if (e.key == "epsilon") {
    const int v = parse_int(e);
    if (v != 1 && v != -1) throw DomainError("epsilon must be ±1");
    cfg.sf.epsilon = v;
    seen.epsilon = true;
  } else if (e.key == "n") {
    const int v = parse_int(e);
    if (v < 2) throw DomainError("n must be an integer >= 2, got " + std::to_string(v));
    cfg.sf.n = v;
    seen.n = true;
  } else if (e.key == "base.kind") {
    cfg.base.kind = parse_base_kind(e);
    seen.base_kind = true;
  } else if (e.key == "base.r") {
    cfg.base.r = parse_double(e);
  } else if (e.key == "base.p") {
    cfg.base.p = parse_int(e);
  } else if (e.key == "base.q") {
    cfg.base.q = parse_int(e);
  } else if (e.key == "base.orientation") {
    const int v = parse_int(e);
    if (v != 1 && v != -1) throw DomainError("base.orientation must be ±1");
    cfg.base.orientation = v;
  } else if (e.key == "profile.family") {
    cfg.profile.family = parse_profile_family(e);
    seen.profile_family = true;
  } else if (e.key == "profile.alpha") {
    cfg.profile.alpha = parse_double(e);
  } else if (e.key == "profile.beta") {
    cfg.profile.beta = parse_double(e);
  } else if (e.key == "profile.gamma") {
    cfg.profile.gamma = parse_double(e);
  } else if (e.key == "profile.theta") {
    cfg.profile.theta = parse_double(e);
  } else if (e.key == "profile.c") {
    cfg.profile.c = parse_double(e);
  } else if (e.key == "profile.path") {
    cfg.profile.path = e.value;
  } else if (e.key == "s_range") {
    const auto parts = split_list(e.value);
    if (parts.size() != 3) {
      throw ParseError(e.line, "s_range must be 'start, stop, count'");
    }
    cfg.s_range.start = parse_double(e, parts[0]);
    cfg.s_range.stop = parse_double(e, parts[1]);
    cfg.s_range.count = parse_int(e, parts[2]);
    seen.s_range = true;
  } else if (e.key == "tol") {
    cfg.tol = parse_double(e);
    if (!(cfg.tol > 0.0)) throw DomainError("tol must be positive");
  } else if (e.key == "format") {
    cfg.format = parse_out_format(e.value);
  } else if (e.key == "out") {
    cfg.out = e.value;
  } else {
    throw ParseError(e.line, "unknown key '" + e.key + "'");
  }
}

RunConfig config_from_entries(const std::vector<Entry>& entries) {
  RunConfig cfg;
  RequiredSeen seen;
  for (const auto& e : entries) apply_entry(cfg, seen, e);
  if (!seen.epsilon) throw DomainError("config is missing required key 'epsilon'");
  if (!seen.n) throw DomainError("config is missing required key 'n'");
  if (!seen.base_kind) throw DomainError("config is missing required key 'base.kind'");
  if (!seen.profile_family) throw DomainError("config is missing required key 'profile.family'");
  if (!seen.s_range) throw DomainError("config is missing required key 's_range'");
  cfg.s_range.points();       // validates the grid shape
  make_base(cfg);             // validates base parameters against the space form
  return cfg;
}

bool sweepable_key(const std::string& key) {
  static const char* kKeys[] = {"base.r",        "profile.alpha", "profile.beta",
                                "profile.gamma", "profile.theta", "profile.c"};
  return std::any_of(std::begin(kKeys), std::end(kKeys),
                     [&key](const char* k) { return key == k; });
}

}  // namespace

std::string to_string(OutFormat format) {
  return format == OutFormat::Csv ? "csv" : "json";
}

OutFormat parse_out_format(const std::string& text) {
  if (text == "csv") return OutFormat::Csv;
  if (text == "json") return OutFormat::Json;
  throw DomainError("format must be csv or json, got '" + text + "'");
}

std::vector<double> SRange::points() const {
  if (count < 1) throw DomainError("s_range: count must be >= 1, got " + std::to_string(count));
  if (count > 1 && !(start < stop)) {
    throw DomainError("s_range: start must be < stop when count > 1");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double h = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + i * h;
  out.back() = stop;
  return out;
}

RunConfig parse_config(std::istream& in) { return config_from_entries(read_entries(in)); }

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  return parse_config(in);
}

SweepPlan expand_sweep(std::istream& in) {
  const std::vector<Entry> entries = read_entries(in);

  struct Axis {
    std::size_t entry_index;
    std::vector<double> values;
  };
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (!sweepable_key(e.key) || e.value.find(',') == std::string::npos) continue;
    const auto parts = split_list(e.value);
    if (parts.size() != 3) {
      throw ParseError(e.line, "swept key '" + e.key + "' must be 'lo, hi, count'");
    }
    SRange axis_range;
    axis_range.start = parse_double(e, parts[0]);
    axis_range.stop = parse_double(e, parts[1]);
    axis_range.count = parse_int(e, parts[2]);
    axes.push_back({i, axis_range.points()});
  }

  SweepPlan plan;
  for (const Axis& ax : axes) plan.params.push_back(entries[ax.entry_index].key);

  std::size_t total = 1;
  for (const Axis& ax : axes) total *= ax.values.size();

  std::vector<std::size_t> pick(axes.size(), 0);
  for (std::size_t row = 0; row < total; ++row) {
    std::vector<Entry> concrete = entries;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      concrete[axes[a].entry_index].value = format_g17(axes[a].values[pick[a]]);
    }
    plan.cases.push_back(config_from_entries(concrete));
    // odometer increment, last axis fastest
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++pick[a] < axes[a].values.size()) break;
      pick[a] = 0;
    }
  }
  return plan;
}

SweepPlan expand_sweep_text(const std::string& text) {
  std::istringstream in(text);
  return expand_sweep(in);
}

SweepPlan expand_sweep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sweep config file '" + path + "'");
  return expand_sweep(in);
}

IsoparametricBase make_base(const RunConfig& cfg) { return make_base(cfg.sf, cfg.base); }

Profile make_profile(const RunConfig& cfg) {
  const ProfileSpec& p = cfg.profile;
  switch (p.family) {
    case ProfileFamily::Linear: return linear_profile(p.alpha, p.beta);
    case ProfileFamily::Quadratic: return quadratic_profile(p.alpha, p.beta, p.gamma);
    case ProfileFamily::Exponential: return exponential_profile(p.alpha, p.beta);
    case ProfileFamily::Sinh: return sinh_profile(p.alpha, p.beta);
    case ProfileFamily::ConstantAngle: return constant_angle_profile(p.theta);
    case ProfileFamily::Rotation:
      if (cfg.base.kind != BaseKind::GeodesicSphere) {
        throw DomainError("rotation profiles require base.kind = geodesic_sphere");
      }
      return rotation_profile(cfg.sf, p.c, cfg.base.r);
    case ProfileFamily::Sampled:
      if (p.path.empty()) {
        throw DomainError("profile.path is required when profile.family = sampled");
      }
      return load_sampled_profile(p.path);
  }
  throw DomainError("unsupported profile family");
}

}  // namespace prodcurv
