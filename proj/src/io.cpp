#include "frinkmetric/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <vector>

#include "frinkmetric/errors.hpp"

namespace frinkmetric {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + std::string(field) +
                     "'");
  }
  return value;
}

nlohmann::json parse_json_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

MatrixFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? MatrixFormat::json : MatrixFormat::csv;
}

Eigen::MatrixXd parse_csv_table(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;

    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_number(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ShapeError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ShapeError("empty matrix");

  Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

AffinityMatrix parse_affinity_csv(std::string_view text) {
  return AffinityMatrix(parse_csv_table(text), KernelSource::loaded);
}

AffinityMatrix parse_affinity_json(std::string_view text) {
  const nlohmann::json doc = parse_json_document(text);
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("JSON affinity must be an object with a \"values\" array");
  }
  const auto& rows = doc["values"];
  const auto n_rows = static_cast<Index>(rows.size());
  if (n_rows == 0) throw ShapeError("empty matrix");
  if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<Index>() != n_rows)) {
    throw ShapeError("\"n\" does not match the number of rows");
  }
  Index n_cols = -1;
  Eigen::MatrixXd m;
  for (Index i = 0; i < n_rows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw ParseError("row " + std::to_string(i) + " is not an array");
    if (n_cols < 0) {
      n_cols = static_cast<Index>(row.size());
      m.resize(n_rows, n_cols);
    } else if (static_cast<Index>(row.size()) != n_cols) {
      throw ShapeError("ragged rows in JSON matrix");
    }
    for (Index j = 0; j < n_cols; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw ParseError("non-numeric entry in JSON matrix");
      m(i, j) = v.get<double>();
    }
  }
  return AffinityMatrix(std::move(m), KernelSource::loaded);
}

AffinityMatrix load_affinity(const std::filesystem::path& path, MatrixFormat format) {
  const std::string text = read_file(path);
  return format == MatrixFormat::json ? parse_affinity_json(text) : parse_affinity_csv(text);
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw NumericError("cannot format number");
  return std::string(buf.data(), ptr);
}

void write_matrix_csv(std::ostream& out, const Eigen::Ref<const Eigen::MatrixXd>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void save_matrix_csv(const std::filesystem::path& path, const Eigen::Ref<const Eigen::MatrixXd>& m) {
  std::ostringstream ss;
  write_matrix_csv(ss, m);
  write_file(path, ss.str());
}

std::string lambda_to_json(const LambdaSequence& lambda) {
  nlohmann::json doc;
  doc["values"] = lambda.values;
  doc["iterations"] = lambda.iterations;
  return doc.dump(2) + "\n";
}

LambdaSequence parse_lambda_json(std::string_view text) {
  const auto doc = parse_json_document(text);
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array() ||
      doc["values"].empty()) {
    throw ParseError("lambda JSON needs a non-empty \"values\" array");
  }
  LambdaSequence seq;
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) throw ParseError("lambda values must be numbers");
    seq.values.push_back(v.get<double>());
  }
  if (std::adjacent_find(seq.values.begin(), seq.values.end(), std::greater_equal<>()) !=
      seq.values.end()) {
    throw DomainError("lambda values must be strictly increasing");
  }
  if (doc.contains("iterations") && doc["iterations"].is_number_integer()) {
    seq.iterations = doc["iterations"].get<int>();
  }
  return seq;
}

std::string relation_to_json(const BinaryRelation& u) {
  nlohmann::json doc;
  doc["n"] = u.size();
  doc["rows"] = to_bit_strings(u);
  return doc.dump(2) + "\n";
}

BinaryRelation parse_relation_json(std::string_view text) {
  const auto doc = parse_json_document(text);
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("relation JSON needs a \"rows\" array");
  }
  auto rows = doc["rows"].get<std::vector<std::string>>();
  if (doc.contains("n") && doc["n"].get<std::size_t>() != rows.size()) {
    throw ShapeError("\"n\" does not match the number of rows");
  }
  return from_bit_strings(rows);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace frinkmetric
