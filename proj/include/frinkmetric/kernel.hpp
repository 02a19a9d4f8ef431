#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace frinkmetric {

using Index = Eigen::Index;

enum class KernelSource { generated, loaded };

/// Symmetric nonnegative affinity kernel K on the vertex set {0, ..., n-1}.
///
/// The constructor is the only way in and it enforces the invariants
/// (square, n >= 2, exact symmetry, finite nonnegative entries), so every
/// AffinityMatrix in circulation is valid. Values are immutable afterwards.
class AffinityMatrix {
 public:
  explicit AffinityMatrix(Eigen::MatrixXd values,
                          KernelSource source = KernelSource::loaded);

  Index size() const { return values_.rows(); }
  const Eigen::MatrixXd& values() const { return values_; }
  double operator()(Index i, Index j) const { return values_(i, j); }
  KernelSource source() const { return source_; }

  double min_entry() const { return values_.minCoeff(); }
  double max_entry() const { return values_.maxCoeff(); }

 private:
  Eigen::MatrixXd values_;
  KernelSource source_;
};

struct ValidationReport {
  bool symmetric = false;
  bool diag_dominant = false;         // K(x,x) = max_y K(x,y)
  bool tridiagonal_positive = false;  // K > 0 on the three main diagonals
  double min_entry = 0.0;
  double max_entry = 0.0;
  std::size_t distinct_value_count = 0;

  bool metrizable() const { return symmetric && diag_dominant && tridiagonal_positive; }
};

/// Discretized Newtonian potential: K_ii = diag_value, K_ij = |i-j|^(-alpha).
AffinityMatrix newtonian_kernel(Index n, double alpha, double diag_value = 2.0);

ValidationReport validate_kernel(const Eigen::Ref<const Eigen::MatrixXd>& values);
inline ValidationReport validate_kernel(const AffinityMatrix& kernel) {
  return validate_kernel(kernel.values());
}

/// Sorted distinct entries of K.
std::vector<double> distinct_values(const Eigen::Ref<const Eigen::MatrixXd>& values);

}  // namespace frinkmetric
