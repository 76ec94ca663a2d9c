#include "ttfp/grids.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ttfp {

VelocityGrid::VelocityGrid(double vmin, double vmax, int nv)
    : v_min(vmin), v_max(vmax), Nv(nv), dv((vmax - vmin) / nv) {}

std::vector<double> VelocityGrid::nodes() const {
  std::vector<double> v(Nv);
  for (int k = 1; k <= Nv; ++k) v[k - 1] = node(k);
  return v;
}

double VelocityGrid::max_abs_v() const { return std::max(std::abs(v_min), std::abs(v_max)); }

SpatialGrid::SpatialGrid(double lx, int nx) : L_x(lx), Nx(nx), dx(lx / nx) {}

const char* case_name(CaseKind c) {
  switch (c) {
    case CaseKind::HomogeneousFP: return "homogeneous_fp";
    case CaseKind::InhomogeneousFP: return "inhomogeneous_fp";
    case CaseKind::LandauDamping: return "landau_damping";
    case CaseKind::TwoStream: return "two_stream";
    case CaseKind::Heat: return "heat";
  }
  return "?";
}

CaseKind case_from_name(const std::string& name) {
  if (name == "homogeneous_fp") return CaseKind::HomogeneousFP;
  if (name == "inhomogeneous_fp") return CaseKind::InhomogeneousFP;
  if (name == "landau_damping") return CaseKind::LandauDamping;
  if (name == "two_stream") return CaseKind::TwoStream;
  if (name == "heat") return CaseKind::Heat;
  throw std::invalid_argument("unknown case name: " + name);
}

double SimConfig::param(const std::string& key, double fallback) const {
  auto it = case_params.find(key);
  return it == case_params.end() ? fallback : it->second;
}

void SimConfig::validate() const {
  if (eta < 0) throw std::invalid_argument("eta must be non-negative");
  if (v_grid.Nv <= 0) throw std::invalid_argument("nv must be positive");
  if (!(v_grid.dv > 0)) throw std::invalid_argument("velocity grid requires v_max > v_min");
  if (x_grid.Nx <= 0) throw std::invalid_argument("nx must be positive");
  if (!(x_grid.dx > 0)) throw std::invalid_argument("spatial grid requires l_x > 0");
  if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("ranks must be positive");
  if (r1 > v_grid.Nv || r2 > v_grid.Nv) throw std::invalid_argument("rank exceeds Nv");
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end > 0)) throw std::invalid_argument("t_end must be positive");
  if (dt > t_end) throw std::invalid_argument("dt must not exceed t_end");
  if (snapshot_stride <= 0) throw std::invalid_argument("snapshot_stride must be positive");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line_no) {
  try {
    size_t pos = 0;
    double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                             ": not a number: '" + value + "'");
  }
}

}  // namespace

SimConfig load_config(const std::string& text) {
  std::map<std::string, std::string> top;
  std::map<std::string, std::map<std::string, double>> sections;
  std::map<std::string, int> key_lines;

  std::istringstream in(text);
  std::string line;
  std::string section;  // empty = top level
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                                 ": unterminated section header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name.rfind("case.", 0) != 0)
        throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                                 ": section must be [case.<name>]");
      section = name.substr(5);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                               ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                               ": empty key or value");
    if (section.empty()) {
      top[key] = value;
      key_lines[key] = line_no;
    } else {
      sections[section][key] = parse_number(value, line_no);
    }
  }

  auto require = [&](const std::string& key) -> std::string {
    auto it = top.find(key);
    if (it == top.end()) throw std::runtime_error("config missing required key: " + key);
    return it->second;
  };
  auto number = [&](const std::string& key) { return parse_number(require(key), key_lines[key]); };

  SimConfig cfg;
  cfg.eta = number("eta");
  cfg.t_end = number("t_end");
  cfg.r1 = static_cast<int>(number("r1"));
  cfg.r2 = static_cast<int>(number("r2"));
  cfg.v_grid = VelocityGrid(number("v_min"), number("v_max"), static_cast<int>(number("nv")));
  cfg.x_grid = SpatialGrid(number("l_x"), static_cast<int>(number("nx")));
  cfg.kind = case_from_name(require("case"));
  cfg.output_dir = require("output_dir");
  cfg.snapshot_stride = static_cast<int>(number("snapshot_stride"));
  if (top.count("workers")) cfg.workers = static_cast<int>(number("workers"));

  auto it = sections.find(case_name(cfg.kind));
  if (it != sections.end()) cfg.case_params = it->second;

  std::string dt_str = require("dt");
  if (dt_str == "auto") {
    cfg.dt_auto = true;
    double max_E = 0.0;
    if (cfg.kind == CaseKind::LandauDamping || cfg.kind == CaseKind::TwoStream) {
      double A = cfg.param("A", 0.0);
      double kappa = cfg.param("kappa", 0.0);
      if (kappa == 0.0) throw std::invalid_argument("dt = auto requires kappa != 0");
      max_E = std::abs(A / kappa);
    }
    cfg.dt = cfg.t_end;  // placeholder so validate() can run after the CFL rule
    cfg.dt = cfl_time_step(cfg, max_E);
  } else {
    cfg.dt = parse_number(dt_str, key_lines["dt"]);
  }

  cfg.validate();
  return cfg;
}

SimConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

double cfl_time_step(const SimConfig& cfg, double max_E) {
  double vmax = cfg.v_grid.max_abs_v();
  double bound = cfg.x_grid.dx / vmax;
  if (max_E > 0) bound = std::min(bound, cfg.v_grid.dv / max_E);
  return 0.1 * bound;
}

}  // namespace ttfp
