#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ttfp/tensor3.hpp"

namespace ttfp {

/// The five canonical orthogonality forms cycled by the integrator, plus
/// General for arbitrary cores. In forms II and IV the small factor S is
/// carried separately next to the orthonormal cores.
enum class Form { General, I, II, III, IV, V };

const char* form_name(Form f);

/// Rank-(r1, r2) three-core tensor train of an Nv x Nv x Nv tensor:
///   full(k1,k2,k3) = sum_{a1,a2} core1(k1,a1) core2(a1,k2,a2) core3(a2,k3).
struct TensorTrain3 {
  Eigen::MatrixXd core1;  // Nv x r1
  Tensor3 core2;          // r1 x Nv x r2
  Eigen::MatrixXd core3;  // r2 x Nv
  Form form = Form::General;
  Eigen::MatrixXd S;  // r1 x r1 (form II) or r2 x r2 (form IV); empty otherwise

  TensorTrain3() = default;
  TensorTrain3(Eigen::MatrixXd c1, Tensor3 c2, Eigen::MatrixXd c3, Form f = Form::General)
      : core1(std::move(c1)), core2(std::move(c2)), core3(std::move(c3)), form(f) {}

  Eigen::Index Nv() const { return core1.rows(); }
  Eigen::Index r1() const { return core1.cols(); }
  Eigen::Index r2() const { return core3.rows(); }

  /// core1 with the form-II factor folded in (P1*S1); core1 itself otherwise.
  Eigen::MatrixXd effective_core1() const;
  /// core3 with the form-IV factor folded in (S2*Q3); core3 itself otherwise.
  Eigen::MatrixXd effective_core3() const;

  /// Same tensor with S factors folded into the cores and form General.
  TensorTrain3 plain() const;

  void check_dims() const;
};

/// Formal sum of TT terms sharing Nv; the block-diagonal concatenation is
/// performed by tt_concat_sum, while projections may consume the terms
/// directly (the contraction is linear in the summand).
struct TTSum {
  std::vector<TensorTrain3> terms;

  void add(TensorTrain3 t) { terms.push_back(std::move(t)); }
  /// Adds coeff * t, folding the coefficient into core1.
  void add_scaled(const TensorTrain3& t, double coeff);
  bool empty() const { return terms.empty(); }
};

// --- Mode products (contraction against the ROW index of Y) -----------------
//
//   (X x_n Y)(..., j, ...) = sum_{i_n} X(..., i_n, ...) Y(i_n, j)

Eigen::MatrixXd mode_product(const Eigen::MatrixXd& X, int mode, const Eigen::MatrixXd& Y);
Tensor3 mode_product(const Tensor3& X, int mode, const Eigen::MatrixXd& Y);

// --- Dense evaluation and TT arithmetic --------------------------------------

/// Materializes the full Nv^3 tensor. Guarded by an entry cap since this is
/// oracle/testing machinery.
Tensor3 tt_to_full(const TensorTrain3& f, Eigen::Index max_entries = 1 << 24);

/// Block-diagonal concatenation: the result's full tensor is the exact sum
/// of the terms' full tensors, with per-bond ranks summed.
TensorTrain3 tt_concat_sum(const TTSum& terms);

/// Multiplies mode `mode`'s grid index by diag(weights); ranks unchanged.
TensorTrain3 scale_core_diag(const TensorTrain3& f, int mode, const Eigen::VectorXd& weights);

/// Inner product <f, g> over all Nv^3 entries, computed by core sweeps.
double tt_dot(const TensorTrain3& f, const TensorTrain3& g);
double tt_norm(const TensorTrain3& f);

// --- Orthogonalization -------------------------------------------------------

/// One transition of the canonical cycle I -> II -> III -> IV -> V -> I, or
/// the initialization path General -> I (full right-orthonormalization).
/// Preserves the represented tensor; QR factors are sign-fixed so runs are
/// deterministic. Rank-deficient R factors are carried as-is.
TensorTrain3 orthogonalize_step(const TensorTrain3& f, Form target);

/// Largest residual of the orthonormality conditions required by `form`
/// (spectral norm of Gram - I over the constrained cores).
double orthonormality_residual(const TensorTrain3& f, Form form);

// --- Projections (diagram contractions of the forward substeps) --------------

/// R_I(k1,a1) = sum_{k2,k3,a2} full(K)(k1,k2,k3) Q2(a1,k2,a2) Q3(a2,k3).
Eigen::MatrixXd project_right(const TensorTrain3& K, const Tensor3& Q2, const Eigen::MatrixXd& Q3);
/// R_III(a1,k2,a2) = sum_{k1,k3} full(K)(k1,k2,k3) P1(k1,a1) Q3(a2,k3).
Tensor3 project_middle(const TensorTrain3& K, const Eigen::MatrixXd& P1, const Eigen::MatrixXd& Q3);
/// R_V(a2,k3) = sum_{k1,k2,a1} full(K)(k1,k2,k3) P1(k1,a1) P2(a1,k2,a2).
Eigen::MatrixXd project_left(const TensorTrain3& K, const Eigen::MatrixXd& P1, const Tensor3& P2);

// Term-wise overloads; identical by linearity of the contraction.
Eigen::MatrixXd project_right(const TTSum& K, const Tensor3& Q2, const Eigen::MatrixXd& Q3);
Tensor3 project_middle(const TTSum& K, const Eigen::MatrixXd& P1, const Eigen::MatrixXd& Q3);
Eigen::MatrixXd project_left(const TTSum& K, const Eigen::MatrixXd& P1, const Tensor3& P2);

// --- Effective rank -----------------------------------------------------------

struct EffectiveRank {
  int r1 = 0;
  int r2 = 0;
  bool s1_zero = false;  // flagged when the S factor vanished entirely
  bool s2_zero = false;
};

/// Counts singular values of S^(1) (form II) and S^(2) (form IV) above
/// delta * sigma_1.
EffectiveRank effective_rank(const TensorTrain3& f, double delta);

// --- Rank padding -------------------------------------------------------------

/// Pads a TT to ranks (r1, r2) by appending orthonormal completion chains
/// scaled to eps_scale times the dominant singular value, then
/// re-orthogonalizes to form I. Deterministic for a fixed seed.
TensorTrain3 pad_to_rank(const TensorTrain3& f, int r1, int r2, double eps_scale = 1e-12,
                         std::uint64_t seed = 0x7475726275ULL);

// --- Snapshot IO ---------------------------------------------------------------

/// Binary field snapshot: magic "TT3F", u32 version/Nx/Nv/r1/r2 header,
/// then per-spatial-point cores (core1 column-major, core2 mode-(1,2)
/// unfolding column-major, core3 column-major) as little-endian doubles.
void write_tt_field(const std::string& path, const std::vector<TensorTrain3>& field);
std::vector<TensorTrain3> read_tt_field(const std::string& path);

// --- QR helper (shared deterministic convention) --------------------------------

/// Thin QR A = Q R with the diagonal of R made non-negative.
void thin_qr(const Eigen::MatrixXd& A, Eigen::MatrixXd& Q, Eigen::MatrixXd& R);

}  // namespace ttfp
