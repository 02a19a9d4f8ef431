#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "frinkmetric/errors.hpp"
#include "frinkmetric/kernel.hpp"
#include "frinkmetric/symmetric_eigen.hpp"

namespace frinkmetric {

/// L = D^(-1/2) K D^(-1/2) - I, D the diagonal of row sums. Spectrum in [-2, 0].
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> graph_laplacian(
    const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (k.rows() != k.cols()) throw ShapeError("graph_laplacian: matrix is not square");
  const Vector degree = k.rowwise().sum();
  for (Eigen::Index i = 0; i < degree.size(); ++i) {
    if (!(degree(i) > Scalar(0))) {
      throw DomainError("graph_laplacian: vertex " + std::to_string(i) + " has zero degree");
    }
  }
  const Vector inv_sqrt = degree.cwiseSqrt().cwiseInverse();
  Matrix l = inv_sqrt.asDiagonal() * k * inv_sqrt.asDiagonal();
  l -= Matrix::Identity(k.rows(), k.cols());
  // Exact symmetry for the eigensolver.
  return (l + l.transpose()) / Scalar(2);
}

inline Eigen::MatrixXd graph_laplacian(const AffinityMatrix& k) { return graph_laplacian(k.values()); }

template <typename Scalar>
SpectralDecomposition<Scalar> laplacian_spectrum(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& k, Scalar tol = Scalar(1e-10)) {
  auto decomp = eig_symmetric(graph_laplacian(k), tol);
  decomp.convention = LaplacianConvention::symmetric_normalized;
  return decomp;
}

inline SpectralDecomposition<double> laplacian_spectrum(const AffinityMatrix& k, double tol = 1e-10) {
  return laplacian_spectrum<double>(k.values(), tol);
}

/// d_t(i,j) = sqrt(sum_l exp(2 t nu_l) (x_i^l - x_j^l)^2).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> diffusion_distance_matrix(
    const SpectralDecomposition<Scalar>& decomp, Scalar t) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (!(t > Scalar(0))) throw ParameterError("diffusion time must be positive");
  // Row i of the embedding is (exp(t nu_l) x_i^l)_l.
  const Matrix embed =
      decomp.eigenvectors * (t * decomp.eigenvalues.array()).exp().matrix().asDiagonal();
  const Eigen::Index n = embed.rows();
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j + 1; i < n; ++i)
      d(i, j) = d(j, i) = (embed.row(i) - embed.row(j)).norm();
  return d;
}

/// {"eigenvalues": [...], "eigenvectors": [[...], ...]} with one inner array per eigenvector.
std::string spectrum_to_json(const SpectralDecomposition<double>& decomp);

}  // namespace frinkmetric
