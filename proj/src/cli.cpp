#include "frinkmetric/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "frinkmetric/balls.hpp"
#include "frinkmetric/diffusion.hpp"
#include "frinkmetric/errors.hpp"
#include "frinkmetric/frink.hpp"
#include "frinkmetric/io.hpp"
#include "frinkmetric/kernel.hpp"

namespace frinkmetric::cli {
namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string format;  // csv | json | "" (from extension)
  std::string lambda_path;
  Index n = 0;
  double alpha = 1.0;
  double diag = 2.0;
  double t = 0.005;
  Index center = 0;
  std::string metric = "F";
  std::vector<double> radii;
  std::string variant;  // empty: command default
  int diagonal_band = 3;
  std::optional<double> lambda0_override;
  std::string dot_path;
  double dot_edge_threshold = 0.0;
  std::string spectrum_path;
  std::string weights_path;
  std::string report_path;
  double radius_f = 0.0, radius_d = 0.0, radius_e = 0.0;
};

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err) {}

  int gen() {
    const auto k = newtonian_kernel(cfg_.n, cfg_.alpha, cfg_.diag);
    if (output_format() == MatrixFormat::json) {
      nlohmann::json doc;
      doc["n"] = k.size();
      auto rows = nlohmann::json::array();
      for (Index i = 0; i < k.size(); ++i) {
        const Eigen::RowVectorXd row = k.values().row(i);
        rows.push_back(std::vector<double>(row.data(), row.data() + row.size()));
      }
      doc["values"] = std::move(rows);
      emit(doc.dump(2) + "\n");
    } else {
      emit(to_csv(k.values()));
    }
    return kOk;
  }

  int lambda() {
    emit(lambda_to_json(compute_lambda_sequence(kernel(), sequence_options())));
    return kOk;
  }

  int delta() {
    const auto variant = parse_inverse_variant(variant_or("script"));
    emit(to_csv(delta_matrix(kernel(), lambda_for(kernel()), variant).values));
    return kOk;
  }

  int chain() {
    const auto d = frink_chain_metric(kernel(), lambda_for(kernel()));
    if (!cfg_.weights_path.empty()) save_matrix_csv(cfg_.weights_path, d.chain_weights);
    emit(to_csv(d.values));
    return kOk;
  }

  int diffusion() {
    const auto decomp = laplacian_spectrum(kernel());
    if (!cfg_.spectrum_path.empty()) write_file(cfg_.spectrum_path, spectrum_to_json(decomp));
    emit(to_csv(diffusion_distance_matrix(decomp, cfg_.t)));
    return kOk;
  }

  int balls() {
    const auto& k = kernel();
    const auto metric = parse_metric_kind(cfg_.metric);
    std::vector<double> radii = cfg_.radii;
    Eigen::VectorXd dist;
    switch (metric) {
      case MetricKind::frink: {
        const auto& lam = lambda_for(k);
        const auto variant = parse_inverse_variant(variant_or("upper"));
        dist = delta_matrix(k, lam, variant).values.row(center()).transpose();
        if (radii.empty()) radii = frink_band_radii(lam);
        break;
      }
      case MetricKind::diffusion:
        dist = diffusion_row();
        break;
      case MetricKind::euclidean:
        dist = euclidean_distances(k.size(), center());
        break;
    }
    if (radii.empty()) throw ParameterError("--radii is required for metric " + cfg_.metric);
    const auto bands = annuli(dist, radii, center());
    if (!cfg_.dot_path.empty()) {
      write_file(cfg_.dot_path, bands_to_dot(k, bands, cfg_.dot_edge_threshold));
    }
    emit(bands_to_json(bands, metric));
    return kOk;
  }

  int compare() {
    const auto& k = kernel();
    const auto variant = parse_inverse_variant(variant_or("upper"));
    std::vector<std::pair<std::string, BallResult>> balls;
    if (cfg_.radius_f > 0.0) {
      balls.emplace_back("F", delta_ball(k, lambda_for(k), center(), cfg_.radius_f, variant));
    }
    if (cfg_.radius_d > 0.0) {
      balls.emplace_back("D", metric_ball(diffusion_row(), center(), cfg_.radius_d,
                                          MetricKind::diffusion));
    }
    if (cfg_.radius_e > 0.0) {
      balls.emplace_back("E", metric_ball(euclidean_distances(k.size(), center()), center(),
                                          cfg_.radius_e, MetricKind::euclidean));
    }
    if (balls.size() < 2) {
      throw ParameterError("compare needs at least two of --radius-f, --radius-d, --radius-e");
    }
    nlohmann::json doc;
    doc["center"] = center();
    for (const auto& [name, ball] : balls) {
      doc["radii"][name] = ball.radius;
      doc["members"][name] = ball.members;
    }
    for (std::size_t a = 0; a < balls.size(); ++a)
      for (std::size_t b = a + 1; b < balls.size(); ++b)
        doc["jaccard"][balls[a].first + "-" + balls[b].first] =
            jaccard(balls[a].second.members, balls[b].second.members);
    emit(doc.dump(2) + "\n");
    return kOk;
  }

  int verify() {
    const auto& k = kernel();
    nlohmann::json report;
    bool all_ok = true;
    const auto check = [&](const std::string& name, bool ok) {
      report["checks"][name] = ok;
      err_ << (ok ? "PASS " : "FAIL ") << name << '\n';
      all_ok = all_ok && ok;
    };

    const ValidationReport v = validate_kernel(k);
    report["kernel"] = {{"symmetric", v.symmetric},
                        {"diag_dominant", v.diag_dominant},
                        {"tridiagonal_positive", v.tridiagonal_positive},
                        {"min_entry", v.min_entry},
                        {"max_entry", v.max_entry},
                        {"distinct_value_count", v.distinct_value_count}};
    check("kernel", v.metrizable());
    if (v.metrizable()) {
      const auto& lam = lambda_for(k);
      const auto variant = parse_inverse_variant(variant_or("script"));
      const auto delta = delta_matrix(k, lam, variant);
      const auto d = frink_chain_metric(k, lam);

      report["lambda"] = lam.values;
      check("triple_composition", !first_triple_composition_failure(k, lam));
      check("chain_triangle", triangle_violation(d.values) <= 0.0 &&
                                  (d.values.array() <= d.chain_weights.array()).all());

      const auto sandwich = verify_sandwich(k, lam, d);
      report["sandwich"]["best_shift"] =
          sandwich.best_shift ? nlohmann::json(*sandwich.best_shift) : nlohmann::json(nullptr);
      check("sandwich", sandwich.passed());

      const auto eq = verify_equivalence(delta, d);
      report["equivalence"] = {{"c_lo", eq.c_lo}, {"c_hi", eq.c_hi}, {"pairs", eq.pairs}};
      check("equivalence", eq.passed);

      if (k.size() >= 3) {
        const double c = quasi_triangle_constant(delta);
        report["quasi_triangle_constant"] = c;
        check("quasi_triangle", c <= kQuasiTriangleBound);
      }
    }
    report["passed"] = all_ok;
    if (!cfg_.report_path.empty()) write_file(cfg_.report_path, report.dump(2) + "\n");
    return all_ok ? kOk : kVerificationFailed;
  }

 private:
  const AffinityMatrix& kernel() {
    if (!kernel_) {
      if (cfg_.input.empty()) throw ParameterError("an input kernel (-i) is required");
      kernel_ = cfg_.format.empty()
                    ? load_affinity(cfg_.input)
                    : load_affinity(cfg_.input, cfg_.format == "json" ? MatrixFormat::json
                                                                      : MatrixFormat::csv);
    }
    return *kernel_;
  }

  SequenceOptions sequence_options() const {
    if (cfg_.diagonal_band != 3 && cfg_.diagonal_band != 5) {
      throw ParameterError("--band must be 3 or 5");
    }
    return {cfg_.diagonal_band, cfg_.lambda0_override};
  }

  const LambdaSequence& lambda_for(const AffinityMatrix& k) {
    if (!lambda_) {
      lambda_ = cfg_.lambda_path.empty() ? compute_lambda_sequence(k, sequence_options())
                                         : parse_lambda_json(read_file(cfg_.lambda_path));
    }
    return *lambda_;
  }

  Index center() {
    const Index n = kernel().size();
    if (cfg_.center < 0 || cfg_.center >= n) {
      throw ParameterError("--center must lie in [0, " + std::to_string(n) + ")");
    }
    return cfg_.center;
  }

  Eigen::VectorXd diffusion_row() {
    const auto decomp = laplacian_spectrum(kernel());
    return diffusion_distance_matrix(decomp, cfg_.t).row(center()).transpose();
  }

  std::string variant_or(const std::string& fallback) const {
    return cfg_.variant.empty() ? fallback : cfg_.variant;
  }

  MatrixFormat output_format() const {
    if (!cfg_.format.empty()) return cfg_.format == "json" ? MatrixFormat::json : MatrixFormat::csv;
    return cfg_.output.empty() ? MatrixFormat::csv : format_from_path(cfg_.output);
  }

  static std::string to_csv(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    std::ostringstream ss;
    write_matrix_csv(ss, m);
    return ss.str();
  }

  void emit(const std::string& data) {
    if (cfg_.output.empty()) {
      out_ << data;
    } else {
      write_file(cfg_.output, data);
    }
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<AffinityMatrix> kernel_;
  std::optional<LambdaSequence> lambda_;
};

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "Affinity kernel (CSV or JSON)")->required();
  cmd->add_option("--format", cfg.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_output(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
}

void add_lambda(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda", cfg.lambda_path, "Precomputed lambda sequence JSON");
  cmd->add_option("--band", cfg.diagonal_band, "Diagonal band width for the initial threshold")
      ->check(CLI::IsMember({3, 5}));
  cmd->add_option("--lambda0-override", cfg.lambda0_override,
                  "Initial threshold replacing the band minimum");
}

void add_variant(CLI::App* cmd, RunConfig& cfg, const std::string& fallback) {
  cmd->add_option("--variant", cfg.variant, "lambda inverse convention (default: " + fallback + ")")
      ->check(CLI::IsMember({"script", "upper", "lower"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Metrics on affinity-weighted graphs from nested threshold relations"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a Newtonian kernel |i-j|^-alpha");
  gen->add_option("--n", cfg.n, "Vertex count")->required();
  gen->add_option("--alpha", cfg.alpha, "Decay exponent");
  gen->add_option("--diag", cfg.diag, "Diagonal value");
  gen->add_option("--format", cfg.format, "Output format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_output(gen, cfg);

  auto* lambda = app.add_subcommand("lambda", "Compute the threshold sequence");
  add_input(lambda, cfg);
  add_lambda(lambda, cfg);
  add_output(lambda, cfg);

  auto* delta = app.add_subcommand("delta", "Quasi-metric 2^-lambda_inverse(K) as CSV");
  add_input(delta, cfg);
  add_lambda(delta, cfg);
  add_variant(delta, cfg, "script");
  add_output(delta, cfg);

  auto* chain = app.add_subcommand("chain", "Chain pseudo-metric as CSV");
  add_input(chain, cfg);
  add_lambda(chain, cfg);
  chain->add_option("--weights", cfg.weights_path, "Also write the one-step weights as CSV");
  add_output(chain, cfg);

  auto* diffusion = app.add_subcommand("diffusion", "Diffusion distance d_t as CSV");
  add_input(diffusion, cfg);
  diffusion->add_option("--t", cfg.t, "Diffusion time")->check(CLI::PositiveNumber);
  diffusion->add_option("--spectrum", cfg.spectrum_path, "Also write the Laplacian spectrum JSON");
  add_output(diffusion, cfg);

  auto* balls = app.add_subcommand("balls", "Annulus bands around a center");
  add_input(balls, cfg);
  add_lambda(balls, cfg);
  add_variant(balls, cfg, "upper");
  balls->add_option("--center", cfg.center, "Center vertex")->required();
  balls->add_option("--metric", cfg.metric, "F, D or E")->check(CLI::IsMember({"F", "D", "E"}));
  balls->add_option("--radii", cfg.radii, "Ascending radii (F default: 2^-k .. 1)")->delimiter(',');
  balls->add_option("--t", cfg.t, "Diffusion time for D")->check(CLI::PositiveNumber);
  balls->add_option("--dot", cfg.dot_path, "Also write a DOT graph colored by band");
  balls->add_option("--dot-edge-threshold", cfg.dot_edge_threshold,
                    "Only emit edges with K_ij >= this value");
  add_output(balls, cfg);

  auto* compare = app.add_subcommand("compare", "Jaccard overlap of F, D and E balls");
  add_input(compare, cfg);
  add_lambda(compare, cfg);
  add_variant(compare, cfg, "upper");
  compare->add_option("--center", cfg.center, "Center vertex")->required();
  compare->add_option("--radius-f", cfg.radius_f, "Radius of the F ball, in (0, 1]");
  compare->add_option("--radius-d", cfg.radius_d, "Radius of the D ball");
  compare->add_option("--radius-e", cfg.radius_e, "Radius of the E ball");
  compare->add_option("--t", cfg.t, "Diffusion time for D")->check(CLI::PositiveNumber);
  add_output(compare, cfg);

  auto* verify = app.add_subcommand("verify", "Check every metric invariant on a kernel");
  add_input(verify, cfg);
  add_lambda(verify, cfg);
  add_variant(verify, cfg, "script");
  verify->add_option("--report", cfg.report_path, "Write the verification report as JSON");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed;
  if (!args.empty()) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  Session session(cfg, out, err);
  try {
    if (*gen) return session.gen();
    if (*lambda) return session.lambda();
    if (*delta) return session.delta();
    if (*chain) return session.chain();
    if (*diffusion) return session.diffusion();
    if (*balls) return session.balls();
    if (*compare) return session.compare();
    if (*verify) return session.verify();
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace frinkmetric::cli
