#pragma once

#include <Eigen/Dense>

namespace ttfp {

/// Dense order-3 tensor of shape (n1, n2, n3). Storage is the mode-(1,2)
/// unfolding: an (n1*n2) x n3 column-major matrix whose row index is
/// i1 + n1*i2. The QR of the (n1*n2) x n3 unfolding is then a plain
/// matrix operation on the underlying storage, with no reshape.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Eigen::Index n1, Eigen::Index n2, Eigen::Index n3)
      : n1_(n1), n2_(n2), n3_(n3), m_(Eigen::MatrixXd::Zero(n1 * n2, n3)) {}

  static Tensor3 from_unfolding12(Eigen::Index n1, Eigen::Index n2, Eigen::MatrixXd u) {
    Tensor3 t;
    t.n1_ = n1;
    t.n2_ = n2;
    t.n3_ = u.cols();
    t.m_ = std::move(u);
    return t;
  }

  Eigen::Index n1() const { return n1_; }
  Eigen::Index n2() const { return n2_; }
  Eigen::Index n3() const { return n3_; }
  bool empty() const { return m_.size() == 0; }

  double& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) { return m_(i + n1_ * j, k); }
  double operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return m_(i + n1_ * j, k);
  }

  /// Mode-(1,2) unfolding, rows (i1 + n1*i2), columns i3.
  Eigen::MatrixXd& unfolding12() { return m_; }
  const Eigen::MatrixXd& unfolding12() const { return m_; }

  /// Mode-1 unfolding: n1 x (n2*n3), columns ordered i2 + n2*i3.
  Eigen::MatrixXd unfolding1() const {
    Eigen::MatrixXd out(n1_, n2_ * n3_);
    for (Eigen::Index k = 0; k < n3_; ++k)
      for (Eigen::Index j = 0; j < n2_; ++j)
        out.col(j + n2_ * k) = m_.block(n1_ * j, k, n1_, 1);
    return out;
  }

  void setZero() { m_.setZero(); }

  double squaredNorm() const { return m_.squaredNorm(); }

  Tensor3& operator+=(const Tensor3& o) {
    m_ += o.m_;
    return *this;
  }
  Tensor3& operator*=(double a) {
    m_ *= a;
    return *this;
  }

 private:
  Eigen::Index n1_ = 0, n2_ = 0, n3_ = 0;
  Eigen::MatrixXd m_;
};

/// Complex counterpart used inside the Sylvester solvers.
class Tensor3c {
 public:
  Tensor3c() = default;
  Tensor3c(Eigen::Index n1, Eigen::Index n2, Eigen::Index n3)
      : n1_(n1), n2_(n2), n3_(n3), m_(Eigen::MatrixXcd::Zero(n1 * n2, n3)) {}

  Eigen::Index n1() const { return n1_; }
  Eigen::Index n2() const { return n2_; }
  Eigen::Index n3() const { return n3_; }

  std::complex<double>& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return m_(i + n1_ * j, k);
  }
  std::complex<double> operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return m_(i + n1_ * j, k);
  }

  Eigen::MatrixXcd& unfolding12() { return m_; }
  const Eigen::MatrixXcd& unfolding12() const { return m_; }

 private:
  Eigen::Index n1_ = 0, n2_ = 0, n3_ = 0;
  Eigen::MatrixXcd m_;
};

}  // namespace ttfp
