#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "frinkmetric/errors.hpp"

namespace frinkmetric {

enum class LaplacianConvention { none, symmetric_normalized };

template <typename Scalar>
struct SpectralDecomposition {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // column l pairs with eigenvalues(l), orthonormal
  LaplacianConvention convention = LaplacianConvention::none;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix until the off-diagonal
/// Frobenius norm drops below tol.
template <typename Derived>
SpectralDecomposition<typename Derived::Scalar> eig_symmetric(
    const Eigen::MatrixBase<Derived>& s, typename Derived::Scalar tol = 1e-10, int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename SpectralDecomposition<Scalar>::Matrix;
  using std::abs;
  using std::sqrt;

  if (s.rows() != s.cols()) throw DomainError("eig_symmetric: matrix is not square");
  const Eigen::Index n = s.rows();
  Matrix a = s;
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) {
    throw DomainError("eig_symmetric: matrix is not symmetric");
  }
  a = (a + a.transpose()) / Scalar(2);
  Matrix v = Matrix::Identity(n, n);

  const auto off_norm = [&] {
    Matrix off = a;
    off.diagonal().setZero();
    return off.norm();
  };

  int sweep = 0;
  for (; off_norm() >= tol; ++sweep) {
    if (sweep == max_sweeps) throw NumericError("eig_symmetric: no convergence within sweep cap");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar sn = t * c;

        // a <- R^T a R with R the (p,q) plane rotation [c s; -s c].
        const auto rotate_cols = [&](Matrix& m) {
          const auto cp = m.col(p).eval();
          m.col(p) = c * cp - sn * m.col(q);
          m.col(q) = sn * cp + c * m.col(q);
        };
        rotate_cols(a);
        const auto rp = a.row(p).eval();
        a.row(p) = c * rp - sn * a.row(q);
        a.row(q) = sn * rp + c * a.row(q);
        a(p, q) = a(q, p) = Scalar(0);
        rotate_cols(v);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  SpectralDecomposition<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    out.eigenvalues(l) = a(order[l], order[l]);
    out.eigenvectors.col(l) = v.col(order[l]);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace frinkmetric
