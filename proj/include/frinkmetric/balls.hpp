#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "frinkmetric/frink.hpp"
#include "frinkmetric/kernel.hpp"

namespace frinkmetric {

enum class MetricKind { frink, diffusion, euclidean };

std::string_view to_string(MetricKind m);  // "F", "D", "E"
MetricKind parse_metric_kind(std::string_view name);

struct BallResult {
  Index center = 0;
  double radius = 0.0;
  std::vector<Index> members;  // ascending
  MetricKind metric = MetricKind::frink;
};

inline constexpr std::array<std::string_view, 5> kBandPalette{"yellow", "green", "turquoise",
                                                              "lavender", "purple"};

struct AnnulusBands {
  Index center = 0;
  std::vector<double> radii;
  std::vector<int> band_of;  // per vertex, 0..radii.size()

  int band_count() const { return static_cast<int>(radii.size()) + 1; }
  std::vector<Index> members_of(int band) const;
  static std::string_view color_of_band(int band) {
    return kBandPalette[static_cast<std::size_t>(band) % kBandPalette.size()];
  }
};

/// Largest integer p with 2^-p >= r, for r in (0, 1].
int dyadic_level(double r);

/// The delta ball {y : delta(center, y) < r} computed directly as a level set of
/// the kernel row: K >= lambda(p) for script, K > lambda(p) for upper,
/// K > lambda(p+1) for lower, with p = dyadic_level(r). The center is always a member.
BallResult delta_ball(const AffinityMatrix& k, const LambdaSequence& lambda, Index center, double r,
                      InverseVariant variant = InverseVariant::script);

/// {y : distances(y) < r} for a row of distances from center.
BallResult metric_ball(const Eigen::Ref<const Eigen::VectorXd>& distances, Index center, double r,
                       MetricKind metric);

/// Band of v = number of radii <= distances(v).
AnnulusBands annuli(const Eigen::Ref<const Eigen::VectorXd>& distances,
                    const std::vector<double>& radii, Index center);

/// |center - j| for j = 0..n-1.
Eigen::VectorXd euclidean_distances(Index n, Index center);

/// Dyadic radii 2^-k, ..., 2^-1, 1 separating consecutive lambda levels.
std::vector<double> frink_band_radii(const LambdaSequence& lambda);

double jaccard(const std::vector<Index>& a, const std::vector<Index>& b);

/// True if members form a contiguous run of vertex indices containing center.
bool is_interval_around(const std::vector<Index>& members, Index center);

std::string ball_to_json(const BallResult& ball);
std::string bands_to_json(const AnnulusBands& bands, MetricKind metric);

/// Undirected DOT graph; nodes filled by band color, edges for K_ij >= edge_threshold (i < j).
std::string bands_to_dot(const AffinityMatrix& k, const AnnulusBands& bands,
                         double edge_threshold = 0.0);

}  // namespace frinkmetric
