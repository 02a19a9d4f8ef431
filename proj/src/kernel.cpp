#include "frinkmetric/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frinkmetric/errors.hpp"

namespace frinkmetric {

AffinityMatrix::AffinityMatrix(Eigen::MatrixXd values, KernelSource source)
    : values_(std::move(values)), source_(source) {
  if (values_.rows() != values_.cols()) {
    throw ShapeError("affinity matrix must be square, got " + std::to_string(values_.rows()) +
                     "x" + std::to_string(values_.cols()));
  }
  if (values_.rows() < 2) {
    throw ShapeError("affinity matrix needs at least 2 vertices");
  }
  const Index n = values_.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = values_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("affinity entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") must be finite and nonnegative");
      }
      if (j > i && v != values_(j, i)) {
        throw SymmetryError("affinity matrix is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      }
    }
  }
}

AffinityMatrix newtonian_kernel(Index n, double alpha, double diag_value) {
  if (n < 2) throw ParameterError("newtonian kernel needs n >= 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be positive");
  // Off-diagonal entries are at most 1 (|i-j| >= 1), so diag >= 1 keeps K(x,x) the row maximum.
  if (!(diag_value >= 1.0) || !std::isfinite(diag_value)) {
    throw ParameterError("diagonal value must be >= 1");
  }
  Eigen::MatrixXd k(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      k(i, j) = i == j ? diag_value : std::pow(static_cast<double>(std::abs(i - j)), -alpha);
    }
  }
  return AffinityMatrix(std::move(k), KernelSource::generated);
}

ValidationReport validate_kernel(const Eigen::Ref<const Eigen::MatrixXd>& k) {
  ValidationReport report;
  if (k.rows() != k.cols() || k.rows() == 0) return report;
  const Index n = k.rows();

  report.symmetric = (k - k.transpose()).cwiseAbs().maxCoeff() == 0.0;
  report.min_entry = k.minCoeff();
  report.max_entry = k.maxCoeff();
  report.distinct_value_count = distinct_values(k).size();

  report.diag_dominant = true;
  for (Index i = 0; i < n; ++i) {
    if (k(i, i) < k.row(i).maxCoeff()) {
      report.diag_dominant = false;
      break;
    }
  }

  report.tridiagonal_positive = true;
  for (Index i = 0; i < n && report.tridiagonal_positive; ++i) {
    if (!(k(i, i) > 0.0)) report.tridiagonal_positive = false;
    if (i + 1 < n && !(k(i, i + 1) > 0.0 && k(i + 1, i) > 0.0)) {
      report.tridiagonal_positive = false;
    }
  }
  return report;
}

std::vector<double> distinct_values(const Eigen::Ref<const Eigen::MatrixXd>& k) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k.size()));
  for (Index j = 0; j < k.cols(); ++j)
    for (Index i = 0; i < k.rows(); ++i) out.push_back(k(i, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace frinkmetric
