#pragma once

#include <map>
#include <string>
#include <vector>

namespace ttfp {

/// Uniform velocity grid on [v_min, v_max] with cell-centered nodes
/// v_k = v_min + (k - 1/2) dv, k = 1..Nv. The same grid is used in all
/// three velocity directions.
struct VelocityGrid {
  double v_min = 0.0;
  double v_max = 0.0;
  int Nv = 0;
  double dv = 0.0;

  VelocityGrid() = default;
  VelocityGrid(double vmin, double vmax, int nv);

  /// Node v_k for k = 1..Nv (1-based, matching the stencil convention).
  double node(int k) const { return v_min + (k - 0.5) * dv; }

  /// All Nv nodes in increasing order.
  std::vector<double> nodes() const;

  /// max(|v_min|, |v_max|); the conservative transport speed bound.
  double max_abs_v() const;
};

/// Periodic spatial grid on [0, L_x] with nodes x_j = (j - 1/2) dx.
struct SpatialGrid {
  double L_x = 0.0;
  int Nx = 0;
  double dx = 0.0;

  SpatialGrid() = default;
  SpatialGrid(double lx, int nx);

  double node(int j) const { return (j - 0.5) * dx; }

  /// Wraps any integer index into 0..Nx-1 (0-based storage index).
  int wrap(int j) const {
    int m = j % Nx;
    return m < 0 ? m + Nx : m;
  }
};

enum class CaseKind { HomogeneousFP, InhomogeneousFP, LandauDamping, TwoStream, Heat };

const char* case_name(CaseKind c);
CaseKind case_from_name(const std::string& name);

/// Full experiment description. Immutable after construction/validation.
struct SimConfig {
  double eta = 0.0;        // collision strength
  double dt = 0.0;         // time step (resolved value; "auto" handled by the loader)
  double t_end = 0.0;
  int r1 = 0;
  int r2 = 0;
  VelocityGrid v_grid;
  SpatialGrid x_grid;
  CaseKind kind = CaseKind::HomogeneousFP;
  std::map<std::string, double> case_params;  // A, kappa, v_star, delta, ...
  std::string output_dir = ".";
  int snapshot_stride = 1;
  int workers = 0;  // 0 = use hardware concurrency (env override wins)

  bool dt_auto = false;  // dt was requested as "auto" in the config document

  /// Case parameter with fallback default.
  double param(const std::string& key, double fallback) const;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
};

/// Parses the key=value config document. Lines are `key = value`, `#`
/// starts a comment, and `[case.<name>]` opens the parameter section for
/// one experiment; only the section matching the selected case is kept.
/// Throws std::runtime_error with a line number on malformed input and
/// std::invalid_argument on invariant violations.
SimConfig load_config(const std::string& text);
SimConfig load_config_file(const std::string& path);

/// Time step rule 0.1 * min(dx / max|v1|, dv / max_E); the second bound
/// is dropped when max_E == 0.
double cfl_time_step(const SimConfig& cfg, double max_E);

}  // namespace ttfp
