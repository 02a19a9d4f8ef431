#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frinkmetric/kernel.hpp"
#include "frinkmetric/relation.hpp"

namespace frinkmetric {

/// Ascending thresholds lambda(0) < ... < lambda(k), all harvested from K.
struct LambdaSequence {
  std::vector<double> values;
  int iterations = 0;  // number of cube-and-harvest rounds performed

  int k() const { return static_cast<int>(values.size()) - 1; }
  double front() const { return values.front(); }
  /// The initial threshold Lambda_0, which ends up as lambda(k).
  double lambda0_raw() const { return values.back(); }
};

struct SequenceOptions {
  /// Width of the diagonal band used for the initial threshold (3 or 5, odd).
  int diagonal_band = 3;
  /// Replaces the initial threshold; snapped up to the nearest kernel value.
  std::optional<double> lambda0_override;
};

/// Minimum of K over the band |i-j| <= (band-1)/2.
double initial_threshold(const AffinityMatrix& k, int diagonal_band = 3);

/// Lambda_{h+1} = min of K over the support of {K >= Lambda_h}^(3), starting
/// from the band minimum, until the level set covers X x X. Returned ascending.
LambdaSequence compute_lambda_sequence(const AffinityMatrix& k, const SequenceOptions& opts = {});

/// Interval conventions for extending lambda to a step function and inverting it.
///   script: 0 for t < l(0), i+1 for l(i) <= t < l(i+1), k+1 for t >= l(k)
///   upper:  0 for t <= l(0), i for l(i-1) < t <= l(i), k+1 for t > l(k)
///   lower:  max(upper - 1, 0)
enum class InverseVariant { script, upper, lower };

std::string_view to_string(InverseVariant v);
InverseVariant parse_inverse_variant(std::string_view name);

int lambda_inverse(double t, const LambdaSequence& lambda, InverseVariant variant);

struct QuasiMetricMatrix {
  Eigen::MatrixXd values;
  InverseVariant variant = InverseVariant::script;
};

/// delta(i,j) = 2^(-lambda_inverse(K_ij)) off the diagonal, 0 on it.
QuasiMetricMatrix delta_matrix(const AffinityMatrix& k, const LambdaSequence& lambda,
                               InverseVariant variant = InverseVariant::script);

struct PseudoMetricMatrix {
  Eigen::MatrixXd values;         // chain metric d
  Eigen::MatrixXd chain_weights;  // one-step weights f
};

/// U_i = {K >= lambda(i)} for i = 0..k.
std::vector<BinaryRelation> frink_levels(const AffinityMatrix& k, const LambdaSequence& lambda);

/// Frink's chain pseudo-metric: f(x,y) = 2^-(m+1) where m is the deepest level
/// containing (x,y), f(x,x) = 0, and d is the infimum of f over chains
/// (all-pairs shortest paths, exact on a finite set).
PseudoMetricMatrix frink_chain_metric(const AffinityMatrix& k, const LambdaSequence& lambda);

/// Index i of the first level with power3(U_i) not inside U_{i-1}, or nullopt if all hold.
std::optional<int> first_triple_composition_failure(const AffinityMatrix& k,
                                                    const LambdaSequence& lambda);

/// Thresholds v'(i) with {K >= lambda(i)} = {K > v'(i)}: the largest kernel value
/// below lambda(i), or 0 when lambda(i) is the minimum and positive.
std::vector<double> strict_form_thresholds(const AffinityMatrix& k, const LambdaSequence& lambda);

struct SandwichLevel {
  int n = 0;
  bool inner_ok = false;  // U_n inside {d < 2^-n}
  bool outer_ok = false;  // {d < 2^-n} inside U_{n-1}
};

struct SandwichReport {
  std::vector<SandwichLevel> levels;  // n = 1..k
  bool base_ok = true;                // U_0 inside {d < 1}
  /// Largest s with {d < 2^-n} inside U_{n+s} for every n = 1..k (U_j is
  /// X x X for j < 0 and the diagonal for j > k). -1 is the classical form.
  std::optional<int> best_shift;

  bool passed() const;
};

SandwichReport verify_sandwich(const AffinityMatrix& k, const LambdaSequence& lambda,
                               const PseudoMetricMatrix& d);

inline constexpr double kEquivalenceLower = 0.125;
inline constexpr double kEquivalenceUpper = 2.0;
inline constexpr double kQuasiTriangleBound = 8.0;

struct EquivalenceReport {
  double c_lo = 0.0;  // min d/delta over pairs with d > 0
  double c_hi = 0.0;  // max d/delta
  Index pairs = 0;
  bool passed = true;
};

EquivalenceReport verify_equivalence(const QuasiMetricMatrix& delta, const PseudoMetricMatrix& d);

/// max over (i,j,m) of delta(i,m) / (delta(i,j) + delta(j,m)), positive denominators only.
double quasi_triangle_constant(const Eigen::Ref<const Eigen::MatrixXd>& delta);
inline double quasi_triangle_constant(const QuasiMetricMatrix& delta) {
  return quasi_triangle_constant(delta.values);
}

/// Floyd-Warshall on a dense weight matrix. Returns the relaxed copy.
Eigen::MatrixXd all_pairs_shortest_paths(Eigen::MatrixXd weights);

/// Largest violation of d(i,j) <= d(i,m) + d(m,j); <= 0 means the triangle inequality holds.
double triangle_violation(const Eigen::Ref<const Eigen::MatrixXd>& d);

}  // namespace frinkmetric
