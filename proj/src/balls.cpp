#include "frinkmetric/balls.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "frinkmetric/errors.hpp"
#include "frinkmetric/io.hpp"

namespace frinkmetric {
namespace {

void check_center(Index center, Index n) {
  if (center < 0 || center >= n) {
    throw ParameterError("center " + std::to_string(center) + " out of range [0, " +
                         std::to_string(n) + ")");
  }
}

}  // namespace

std::string_view to_string(MetricKind m) {
  switch (m) {
    case MetricKind::frink: return "F";
    case MetricKind::diffusion: return "D";
    case MetricKind::euclidean: return "E";
  }
  return "F";
}

MetricKind parse_metric_kind(std::string_view name) {
  if (name == "F" || name == "f") return MetricKind::frink;
  if (name == "D" || name == "d") return MetricKind::diffusion;
  if (name == "E" || name == "e") return MetricKind::euclidean;
  throw ParameterError("unknown metric '" + std::string(name) + "' (expected F, D or E)");
}

std::vector<Index> AnnulusBands::members_of(int band) const {
  std::vector<Index> out;
  for (std::size_t v = 0; v < band_of.size(); ++v)
    if (band_of[v] == band) out.push_back(static_cast<Index>(v));
  return out;
}

int dyadic_level(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("ball radius must lie in (0, 1]");
  int p = 0;
  while (std::ldexp(1.0, -(p + 1)) >= r) ++p;
  return p;
}

BallResult delta_ball(const AffinityMatrix& k, const LambdaSequence& lambda, Index center, double r,
                      InverseVariant variant) {
  check_center(center, k.size());
  const int p = dyadic_level(r);
  const int top = lambda.k();

  // delta < 2^-p  <=>  lambda_inverse >= p + 1, which is a single level set of K.
  int level = p;
  Comparison cmp = Comparison::strictly_greater;
  switch (variant) {
    case InverseVariant::script: cmp = Comparison::at_least; break;
    case InverseVariant::upper: break;
    case InverseVariant::lower: level = p + 1; break;
  }

  BallResult ball{center, r, {}, MetricKind::frink};
  for (Index y = 0; y < k.size(); ++y) {
    bool in = y == center;
    if (!in && level <= top) {
      const double threshold = lambda.values[static_cast<std::size_t>(level)];
      in = cmp == Comparison::at_least ? k(center, y) >= threshold : k(center, y) > threshold;
    }
    if (in) ball.members.push_back(y);
  }
  return ball;
}

BallResult metric_ball(const Eigen::Ref<const Eigen::VectorXd>& distances, Index center, double r,
                       MetricKind metric) {
  check_center(center, distances.size());
  BallResult ball{center, r, {}, metric};
  for (Index y = 0; y < distances.size(); ++y)
    if (distances(y) < r) ball.members.push_back(y);
  return ball;
}

AnnulusBands annuli(const Eigen::Ref<const Eigen::VectorXd>& distances,
                    const std::vector<double>& radii, Index center) {
  if (radii.empty()) throw DomainError("annuli need at least one radius");
  if (std::adjacent_find(radii.begin(), radii.end(), std::greater_equal<>()) != radii.end()) {
    throw DomainError("annulus radii must be strictly ascending");
  }
  check_center(center, distances.size());
  AnnulusBands bands{center, radii, {}};
  bands.band_of.reserve(static_cast<std::size_t>(distances.size()));
  for (Index v = 0; v < distances.size(); ++v) {
    const auto past = std::upper_bound(radii.begin(), radii.end(), distances(v));
    bands.band_of.push_back(static_cast<int>(past - radii.begin()));
  }
  return bands;
}

Eigen::VectorXd euclidean_distances(Index n, Index center) {
  check_center(center, n);
  return (Eigen::VectorXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)).array() -
          static_cast<double>(center))
      .abs()
      .matrix();
}

std::vector<double> frink_band_radii(const LambdaSequence& lambda) {
  std::vector<double> radii;
  for (int p = lambda.k(); p >= 0; --p) radii.push_back(std::ldexp(1.0, -p));
  return radii;
}

double jaccard(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<Index> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  const std::size_t uni = sa.size() + sb.size() - common.size();
  return uni == 0 ? 1.0 : static_cast<double>(common.size()) / static_cast<double>(uni);
}

bool is_interval_around(const std::vector<Index>& members, Index center) {
  if (members.empty()) return false;
  const auto [lo, hi] = std::minmax_element(members.begin(), members.end());
  return *lo <= center && center <= *hi &&
         static_cast<Index>(members.size()) == *hi - *lo + 1;
}

std::string ball_to_json(const BallResult& ball) {
  nlohmann::json doc;
  doc["center"] = ball.center;
  doc["radius"] = ball.radius;
  doc["members"] = ball.members;
  doc["metric"] = to_string(ball.metric);
  return doc.dump(2) + "\n";
}

std::string bands_to_json(const AnnulusBands& bands, MetricKind metric) {
  nlohmann::json doc;
  doc["center"] = bands.center;
  doc["metric"] = to_string(metric);
  doc["radii"] = bands.radii;
  doc["band_of"] = bands.band_of;
  auto palette = nlohmann::json::array();
  auto members = nlohmann::json::array();
  for (int b = 0; b < bands.band_count(); ++b) {
    palette.push_back(AnnulusBands::color_of_band(b));
    members.push_back(bands.members_of(b));
  }
  doc["palette"] = std::move(palette);
  doc["bands"] = std::move(members);
  return doc.dump(2) + "\n";
}

std::string bands_to_dot(const AffinityMatrix& k, const AnnulusBands& bands, double edge_threshold) {
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (std::size_t v = 0; v < bands.band_of.size(); ++v) {
    out << "  " << v << " [fillcolor=" << AnnulusBands::color_of_band(bands.band_of[v])
        << ", label=\"" << v << "\"];\n";
  }
  for (Index i = 0; i < k.size(); ++i)
    for (Index j = i + 1; j < k.size(); ++j)
      if (k(i, j) > 0.0 && k(i, j) >= edge_threshold)
        out << "  " << i << " -- " << j << " [weight=" << format_double(k(i, j)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace frinkmetric
