#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "frinkmetric/frink.hpp"
#include "frinkmetric/kernel.hpp"
#include "frinkmetric/relation.hpp"

namespace frinkmetric {

enum class MatrixFormat { csv, json };

/// Picks the format from the file extension (.json, everything else CSV).
MatrixFormat format_from_path(const std::filesystem::path& path);

AffinityMatrix parse_affinity_csv(std::string_view text);
AffinityMatrix parse_affinity_json(std::string_view text);
AffinityMatrix load_affinity(const std::filesystem::path& path, MatrixFormat format);
inline AffinityMatrix load_affinity(const std::filesystem::path& path) {
  return load_affinity(path, format_from_path(path));
}

/// Raw numeric CSV table (no shape or symmetry checks beyond rectangularity).
Eigen::MatrixXd parse_csv_table(std::string_view text);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

void write_matrix_csv(std::ostream& out, const Eigen::Ref<const Eigen::MatrixXd>& m);
void save_matrix_csv(const std::filesystem::path& path, const Eigen::Ref<const Eigen::MatrixXd>& m);

/// {"iterations": int, "values": [...]}
std::string lambda_to_json(const LambdaSequence& lambda);
LambdaSequence parse_lambda_json(std::string_view text);

/// {"n": int, "rows": ["0110", ...]}
std::string relation_to_json(const BinaryRelation& u);
BinaryRelation parse_relation_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace frinkmetric
