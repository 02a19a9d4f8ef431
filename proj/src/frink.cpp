#include "frinkmetric/frink.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frinkmetric/errors.hpp"

namespace frinkmetric {
namespace {

// Number of thresholds <= t (or < t when strict).
int count_below(double t, const std::vector<double>& values, bool strict) {
  const auto it = strict ? std::lower_bound(values.begin(), values.end(), t)
                         : std::upper_bound(values.begin(), values.end(), t);
  return static_cast<int>(it - values.begin());
}

void require_metrizable(const AffinityMatrix& k) {
  const ValidationReport report = validate_kernel(k);
  if (!report.diag_dominant) {
    throw NotMetrizableError("kernel is not diagonally dominant (diag_dominant = false)");
  }
  if (!report.tridiagonal_positive) {
    throw NotMetrizableError("kernel vanishes on the three main diagonals (tridiagonal_positive = false)");
  }
}

}  // namespace

double initial_threshold(const AffinityMatrix& k, int diagonal_band) {
  if (diagonal_band < 1 || diagonal_band % 2 == 0) {
    throw ParameterError("diagonal band width must be odd and positive");
  }
  const Index half = diagonal_band / 2;
  const Index n = k.size();
  double lo = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i)
    for (Index j = std::max<Index>(0, i - half); j <= std::min<Index>(n - 1, i + half); ++j)
      lo = std::min(lo, k(i, j));
  return lo;
}

LambdaSequence compute_lambda_sequence(const AffinityMatrix& k, const SequenceOptions& opts) {
  require_metrizable(k);
  const Index n = k.size();
  const double k_min = k.min_entry();

  double start = initial_threshold(k, opts.diagonal_band);
  if (opts.lambda0_override) {
    const auto levels = distinct_values(k.values());
    const auto it = std::lower_bound(levels.begin(), levels.end(), *opts.lambda0_override);
    if (it == levels.end()) {
      throw ParameterError("lambda0 override exceeds every kernel value");
    }
    start = *it;
    const BinaryRelation u = level_set(k, start, Comparison::at_least);
    if (!u.contains_diagonal() || !covering_index(u, static_cast<int>(n))) {
      throw ParameterError("lambda0 override is too large: its level set never covers X x X");
    }
  }

  std::vector<double> descending{start};
  int iterations = 0;
  const long long cap = static_cast<long long>(n) * n;
  while (descending.back() > k_min) {
    if (iterations >= cap) {
      throw NumericError("threshold sequence did not terminate within n^2 iterations");
    }
    const BinaryRelation cube = power3(level_set(k, descending.back(), Comparison::at_least));
    double next = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (cube.test(i, j)) next = std::min(next, k(i, j));
    ++iterations;
    // The cube of a connected reflexive level set strictly grows until it is
    // X x X, so a non-decreasing harvest only happens at a fixed point.
    if (!(next < descending.back())) break;
    descending.push_back(next);
  }

  LambdaSequence seq;
  seq.values.assign(descending.rbegin(), descending.rend());
  seq.values.erase(std::unique(seq.values.begin(), seq.values.end()), seq.values.end());
  seq.iterations = iterations;
  return seq;
}

std::string_view to_string(InverseVariant v) {
  switch (v) {
    case InverseVariant::script: return "script";
    case InverseVariant::upper: return "upper";
    case InverseVariant::lower: return "lower";
  }
  return "script";
}

InverseVariant parse_inverse_variant(std::string_view name) {
  if (name == "script") return InverseVariant::script;
  if (name == "upper") return InverseVariant::upper;
  if (name == "lower") return InverseVariant::lower;
  throw ParameterError("unknown lambda inverse variant '" + std::string(name) + "'");
}

int lambda_inverse(double t, const LambdaSequence& lambda, InverseVariant variant) {
  if (!(t >= 0.0)) throw DomainError("lambda_inverse needs t >= 0");
  switch (variant) {
    case InverseVariant::script:
      return count_below(t, lambda.values, false);
    case InverseVariant::upper:
      return count_below(t, lambda.values, true);
    case InverseVariant::lower:
      return std::max(count_below(t, lambda.values, true) - 1, 0);
  }
  return 0;
}

QuasiMetricMatrix delta_matrix(const AffinityMatrix& k, const LambdaSequence& lambda,
                               InverseVariant variant) {
  const Index n = k.size();
  QuasiMetricMatrix delta{Eigen::MatrixXd::Zero(n, n), variant};
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (i != j) delta.values(i, j) = std::ldexp(1.0, -lambda_inverse(k(i, j), lambda, variant));
  return delta;
}

std::vector<BinaryRelation> frink_levels(const AffinityMatrix& k, const LambdaSequence& lambda) {
  std::vector<BinaryRelation> levels;
  levels.reserve(lambda.values.size());
  for (const double v : lambda.values) levels.push_back(level_set(k, v, Comparison::at_least));
  return levels;
}

Eigen::MatrixXd all_pairs_shortest_paths(Eigen::MatrixXd d) {
  const Index n = d.rows();
  for (Index m = 0; m < n; ++m) {
    // Row and column m are fixed points of this round since d(m,m) = 0.
    const Eigen::VectorXd via_col = d.col(m);
    const Eigen::RowVectorXd via_row = d.row(m);
    d = d.cwiseMin(via_col.replicate(1, n) + via_row.replicate(n, 1));
  }
  return d;
}

PseudoMetricMatrix frink_chain_metric(const AffinityMatrix& k, const LambdaSequence& lambda) {
  const Index n = k.size();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i == j) continue;
      // (i,j) lies in U_0..U_{c-1} with c = #{lambda <= K_ij}; f = 2^-(deepest + 1) = 2^-c.
      f(i, j) = std::ldexp(1.0, -count_below(k(i, j), lambda.values, false));
    }
  }
  return {all_pairs_shortest_paths(f), std::move(f)};
}

std::optional<int> first_triple_composition_failure(const AffinityMatrix& k,
                                                    const LambdaSequence& lambda) {
  const auto levels = frink_levels(k, lambda);
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!power3(levels[i]).is_subset_of(levels[i - 1])) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<double> strict_form_thresholds(const AffinityMatrix& k, const LambdaSequence& lambda) {
  const auto distinct = distinct_values(k.values());
  std::vector<double> out;
  out.reserve(lambda.values.size());
  for (const double v : lambda.values) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
    if (it != distinct.begin()) {
      out.push_back(*std::prev(it));
    } else {
      out.push_back(v > 0.0 ? 0.0 : -1.0);
    }
  }
  return out;
}

bool SandwichReport::passed() const {
  if (!base_ok) return false;
  return std::all_of(levels.begin(), levels.end(),
                     [](const SandwichLevel& l) { return l.inner_ok && l.outer_ok; });
}

SandwichReport verify_sandwich(const AffinityMatrix& k, const LambdaSequence& lambda,
                               const PseudoMetricMatrix& d) {
  const Index n = k.size();
  if (d.values.rows() != n) throw DimensionMismatch("chain metric size does not match kernel");
  const auto levels = frink_levels(k, lambda);
  const int top = lambda.k();
  const BinaryRelation everything = BinaryRelation::full(n);
  const BinaryRelation diagonal = BinaryRelation::diagonal(n);
  const auto level = [&](int j) -> const BinaryRelation& {
    if (j < 0) return everything;
    if (j > top) return diagonal;
    return levels[static_cast<std::size_t>(j)];
  };
  const auto ball_set = [&](int idx) {
    BinaryRelation r(n);
    const double radius = std::ldexp(1.0, -idx);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (d.values(i, j) < radius) r.set(i, j);
    return r;
  };

  SandwichReport report;
  report.base_ok = level(0).is_subset_of(ball_set(0));
  std::vector<BinaryRelation> balls;
  for (int idx = 1; idx <= top; ++idx) {
    balls.push_back(ball_set(idx));
    report.levels.push_back({idx, level(idx).is_subset_of(balls.back()),
                             balls.back().is_subset_of(level(idx - 1))});
  }
  // Inclusion into U_{n+s} is monotone in s, so scan downwards from the printed +1.
  for (int s = 1; s >= -top - 1; --s) {
    bool ok = true;
    for (int idx = 1; idx <= top && ok; ++idx)
      ok = balls[static_cast<std::size_t>(idx - 1)].is_subset_of(level(idx + s));
    if (ok) {
      report.best_shift = s;
      break;
    }
  }
  return report;
}

EquivalenceReport verify_equivalence(const QuasiMetricMatrix& delta, const PseudoMetricMatrix& d) {
  if (delta.values.rows() != d.values.rows() || delta.values.cols() != d.values.cols()) {
    throw DimensionMismatch("delta and chain metric have different sizes");
  }
  EquivalenceReport report;
  report.c_lo = std::numeric_limits<double>::infinity();
  report.c_hi = 0.0;
  const Index n = d.values.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i == j || !(d.values(i, j) > 0.0)) continue;
      const double ratio = delta.values(i, j) > 0.0
                               ? d.values(i, j) / delta.values(i, j)
                               : std::numeric_limits<double>::infinity();
      report.c_lo = std::min(report.c_lo, ratio);
      report.c_hi = std::max(report.c_hi, ratio);
      ++report.pairs;
    }
  }
  if (report.pairs == 0) {
    report.c_lo = report.c_hi = 1.0;
    return report;
  }
  report.passed = report.c_lo >= kEquivalenceLower && report.c_hi <= kEquivalenceUpper;
  return report;
}

double quasi_triangle_constant(const Eigen::Ref<const Eigen::MatrixXd>& delta) {
  const Index n = delta.rows();
  if (n < 3) throw DomainError("quasi-triangle constant needs at least 3 points");
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index m = 0; m < n; ++m) {
        const double denom = delta(i, j) + delta(j, m);
        if (denom > 0.0) worst = std::max(worst, delta(i, m) / denom);
      }
  return worst;
}

double triangle_violation(const Eigen::Ref<const Eigen::MatrixXd>& d) {
  const Index n = d.rows();
  double worst = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index m = 0; m < n; ++m) worst = std::max(worst, d(i, j) - (d(i, m) + d(m, j)));
  return worst;
}

}  // namespace frinkmetric
