#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "frinkmetric/balls.hpp"
#include "frinkmetric/diffusion.hpp"
#include "frinkmetric/errors.hpp"
#include "oracles.hpp"

using namespace frinkmetric;

namespace {

std::vector<Index> range(Index lo, Index hi) {
  std::vector<Index> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<Index> sublevel(const Eigen::MatrixXd& delta, Index center, double r) {
  std::vector<Index> out;
  for (Index y = 0; y < delta.cols(); ++y)
    if (delta(center, y) < r) out.push_back(y);
  return out;
}

}  // namespace

TEST_CASE("dyadic level") {
  CHECK(dyadic_level(1.0) == 0);
  CHECK(dyadic_level(0.5) == 1);
  CHECK(dyadic_level(0.3) == 1);
  CHECK(dyadic_level(0.26) == 1);
  CHECK(dyadic_level(0.25) == 2);
  CHECK(dyadic_level(std::ldexp(1.0, -40)) == 40);
  CHECK_THROWS_AS(dyadic_level(0.0), DomainError);
  CHECK_THROWS_AS(dyadic_level(1.5), DomainError);
}

TEST_CASE("delta balls on the 60-vertex kernel") {
  const auto k = newtonian_kernel(60, 1.0, 2.0);
  const auto lam = compute_lambda_sequence(k);
  REQUIRE(lam.values[3] == 1.0 / 3.0);

  // threshold lambda(3) = 1/3: K > 1/3 iff |i-j| < 3
  const auto strict = delta_ball(k, lam, 50, 0.125, InverseVariant::upper);
  CHECK(strict.members == range(48, 52));
  CHECK(strict.metric == MetricKind::frink);
  CHECK(delta_ball(k, lam, 50, 0.125, InverseVariant::script).members == range(47, 53));

  CHECK(delta_ball(k, lam, 50, 1.0, InverseVariant::upper).members == range(0, 59));
  CHECK(delta_ball(k, lam, 50, 1.0, InverseVariant::script).members == range(0, 59));
  CHECK(delta_ball(k, lam, 59, 1.0, InverseVariant::upper).members == range(1, 59));

  for (const double r : {1.0, 0.5, 0.01, 1e-6})
    for (const auto v : {InverseVariant::script, InverseVariant::upper, InverseVariant::lower}) {
      const auto b = delta_ball(k, lam, 17, r, v);
      CHECK(std::find(b.members.begin(), b.members.end(), 17) != b.members.end());
    }

  CHECK_THROWS_AS(delta_ball(k, lam, 50, 0.0), DomainError);
  CHECK_THROWS_AS(delta_ball(k, lam, 50, 2.0), DomainError);
  CHECK_THROWS_AS(delta_ball(k, lam, 60, 0.5), ParameterError);
}

TEST_CASE("delta balls are sublevel sets of the delta matrix") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 20;
    const AffinityMatrix k(oracle::random_kernel(rng, n));
    const auto lam = compute_lambda_sequence(k);
    for (const auto v : {InverseVariant::script, InverseVariant::upper, InverseVariant::lower}) {
      const auto delta = delta_matrix(k, lam, v);
      for (Index c = 0; c < n; ++c) {
        for (int p = 0; p <= lam.k() + 2; ++p) {
          const double r = std::ldexp(1.0, -p);
          CHECK(delta_ball(k, lam, c, r, v).members == sublevel(delta.values, c, r));
        }
        for (const double r : {0.3, 0.7, 0.06})
          CHECK(delta_ball(k, lam, c, r, v).members == sublevel(delta.values, c, r));
      }
    }
  }
}

TEST_CASE("newtonian delta balls are intervals matching euclidean balls") {
  const auto k = newtonian_kernel(60, 1.0, 2.0);
  const auto lam = compute_lambda_sequence(k);
  for (Index c = 0; c < 60; ++c) {
    const auto e = euclidean_distances(60, c);
    for (int p = 0; p <= lam.k(); ++p) {
      const auto f = delta_ball(k, lam, c, std::ldexp(1.0, -p), InverseVariant::upper);
      CHECK(is_interval_around(f.members, c));
      const auto eb = metric_ball(e, c, 1.0 / lam.values[static_cast<std::size_t>(p)],
                                  MetricKind::euclidean);
      CHECK(jaccard(f.members, eb.members) == 1.0);
    }
  }
}

TEST_CASE("ball monotonicity in the radius") {
  const auto k = newtonian_kernel(25, 1.5, 2.0);
  const auto lam = compute_lambda_sequence(k);
  const auto dt = diffusion_distance_matrix(laplacian_spectrum(k), 0.005);
  const auto e = euclidean_distances(25, 9);
  const std::vector<double> radii{0.01, 0.1, 0.2, 0.5, 0.9, 1.0};
  for (std::size_t a = 0; a + 1 < radii.size(); ++a) {
    const double r1 = radii[a], r2 = radii[a + 1];
    const auto sub = [](const std::vector<Index>& x, const std::vector<Index>& y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    CHECK(sub(delta_ball(k, lam, 9, r1).members, delta_ball(k, lam, 9, r2).members));
    const Eigen::VectorXd drow = dt.row(9).transpose();
    CHECK(sub(metric_ball(drow, 9, r1, MetricKind::diffusion).members,
              metric_ball(drow, 9, r2, MetricKind::diffusion).members));
    CHECK(sub(metric_ball(e, 9, 10 * r1, MetricKind::euclidean).members,
              metric_ball(e, 9, 10 * r2, MetricKind::euclidean).members));
  }
}

TEST_CASE("annuli") {
  Eigen::VectorXd d(4);
  d << 0, 0.25, 0.5, 0.5;
  CHECK(annuli(d, {0.3, 0.6}, 0).band_of == std::vector<int>{0, 0, 1, 1});
  CHECK(annuli(d, {0.7, 0.8}, 0).band_of == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS_AS(annuli(d, {0.6, 0.3}, 0), DomainError);
  CHECK_THROWS_AS(annuli(d, {0.3, 0.3}, 0), DomainError);
  CHECK_THROWS_AS(annuli(d, {}, 0), DomainError);

  CHECK(AnnulusBands::color_of_band(0) == "yellow");
  CHECK(AnnulusBands::color_of_band(4) == "purple");
  CHECK(AnnulusBands::color_of_band(5) == "yellow");
}

TEST_CASE("euclidean annuli around vertex 25") {
  const std::vector<double> radii{1, 3, 27, 59};
  const auto bands = annuli(euclidean_distances(60, 25), radii, 25);
  std::vector<std::size_t> counted(5, 0);
  for (int j = 0; j < 60; ++j) {
    const int dist = std::abs(j - 25);
    std::size_t b = 0;
    for (const double r : radii)
      if (r <= dist) ++b;
    ++counted[b];
  }
  for (int b = 0; b < 5; ++b) CHECK(bands.members_of(b).size() == counted[static_cast<std::size_t>(b)]);
  CHECK(counted == std::vector<std::size_t>{1, 4, 47, 8, 0});
}

TEST_CASE("frink bands around vertex 50 follow the kernel levels") {
  const auto k = newtonian_kernel(60, 1.0, 2.0);
  const auto lam = compute_lambda_sequence(k);
  const auto radii = frink_band_radii(lam);
  CHECK(radii == std::vector<double>{0.0625, 0.125, 0.25, 0.5, 1.0});
  const Eigen::VectorXd row = delta_matrix(k, lam, InverseVariant::upper).values.row(50).transpose();
  const auto bands = annuli(row, radii, 50);
  CHECK(bands.members_of(0) == std::vector<Index>{50});
  CHECK(bands.members_of(1) == std::vector<Index>{48, 49, 51, 52});
  CHECK(bands.members_of(2).size() == 12);  // 3 <= |j - 50| <= 8, clipped at 59
  CHECK(bands.members_of(5).empty());
}

TEST_CASE("euclidean distances and jaccard") {
  const Eigen::VectorXd e = euclidean_distances(4, 0);
  CHECK(e == Eigen::Vector4d(0, 1, 2, 3));
  CHECK(euclidean_distances(60, 59).maxCoeff() == 59.0);
  CHECK(euclidean_distances(10, 3)(7) == euclidean_distances(10, 7)(3));
  CHECK_THROWS_AS(euclidean_distances(4, 4), ParameterError);

  CHECK(jaccard({1, 2, 3}, {3, 2, 1}) == 1.0);
  CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
  CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == 0.5);
  CHECK(jaccard({}, {}) == 1.0);

  CHECK(is_interval_around({3, 4, 5}, 4));
  CHECK_FALSE(is_interval_around({3, 5}, 3));
  CHECK_FALSE(is_interval_around({3, 4}, 7));
}

TEST_CASE("serialization") {
  const auto k = newtonian_kernel(5, 1.0, 2.0);
  const auto bands = annuli(euclidean_distances(5, 2), {1, 2}, 2);
  const auto dot = bands_to_dot(k, bands, 0.5);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("2 [fillcolor=yellow") != std::string::npos);
  CHECK(dot.find("1 [fillcolor=green") != std::string::npos);
  CHECK(dot.find("0 [fillcolor=turquoise") != std::string::npos);
  CHECK(dot.find("0 -- 1 [weight=1]") != std::string::npos);
  CHECK(dot.find("0 -- 3") == std::string::npos);  // K = 1/3 below the edge threshold

  const auto json = bands_to_json(bands, MetricKind::euclidean);
  CHECK(json.find("\"metric\": \"E\"") != std::string::npos);
  CHECK(json.find("\"palette\"") != std::string::npos);
  CHECK(ball_to_json(metric_ball(euclidean_distances(5, 2), 2, 1.5, MetricKind::euclidean))
            .find("\"members\"") != std::string::npos);

  CHECK(parse_metric_kind("D") == MetricKind::diffusion);
  CHECK_THROWS_AS(parse_metric_kind("X"), ParameterError);
}
