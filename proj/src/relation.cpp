#include "frinkmetric/relation.hpp"

#include <algorithm>
#include <bit>

#include "frinkmetric/errors.hpp"

namespace frinkmetric {

BinaryRelation::BinaryRelation(Index n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(static_cast<std::size_t>(n * words_), 0) {
  if (n < 1) throw ParameterError("relation size must be positive");
}

BinaryRelation BinaryRelation::full(Index n) { return band(n, n); }

BinaryRelation BinaryRelation::diagonal(Index n) { return band(n, 0); }

BinaryRelation BinaryRelation::band(Index n, Index half_width) {
  BinaryRelation r(n);
  for (Index i = 0; i < n; ++i) {
    const Index lo = std::max<Index>(0, i - half_width);
    const Index hi = std::min<Index>(n - 1, i + half_width);
    for (Index j = lo; j <= hi; ++j) r.set(i, j);
  }
  return r;
}

void BinaryRelation::set(Index i, Index j, bool value) {
  Word& w = row_data(i)[j / kWordBits];
  const Word mask = Word{1} << (j % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

Index BinaryRelation::count() const {
  Index total = 0;
  for (const Word w : bits_) total += std::popcount(w);
  return total;
}

bool BinaryRelation::is_symmetric() const { return *this == transpose(); }

bool BinaryRelation::contains_diagonal() const {
  for (Index i = 0; i < n_; ++i)
    if (!test(i, i)) return false;
  return true;
}

bool BinaryRelation::is_subset_of(const BinaryRelation& other) const {
  if (other.n_ != n_) throw DimensionMismatch("relations have different sizes");
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation t(n_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j)
      if (test(i, j)) t.set(j, i);
  return t;
}

BinaryRelation level_set(const Eigen::Ref<const Eigen::MatrixXd>& k, double threshold,
                         Comparison cmp) {
  if (k.rows() != k.cols()) throw ShapeError("level set of a non-square matrix");
  BinaryRelation r(k.rows());
  for (Index i = 0; i < k.rows(); ++i) {
    for (Index j = 0; j < k.cols(); ++j) {
      const bool in = cmp == Comparison::strictly_greater ? k(i, j) > threshold
                                                          : k(i, j) >= threshold;
      if (in) r.set(i, j);
    }
  }
  return r;
}

BinaryRelation compose(const BinaryRelation& u, const BinaryRelation& v) {
  if (u.size() != v.size()) throw DimensionMismatch("compose: relations have different sizes");
  const Index n = u.size();
  const Index words = u.words_per_row();
  BinaryRelation out(n);
  // Row i of the result is the OR of the rows of v selected by row i of u.
  for (Index i = 0; i < n; ++i) {
    auto* dst = out.row_data(i);
    const auto* sel = u.row_data(i);
    for (Index w = 0; w < words; ++w) {
      for (auto bits = sel[w]; bits != 0; bits &= bits - 1) {
        const Index m = w * BinaryRelation::kWordBits + std::countr_zero(bits);
        const auto* src = v.row_data(m);
        for (Index x = 0; x < words; ++x) dst[x] |= src[x];
      }
    }
  }
  return out;
}

BinaryRelation power3(const BinaryRelation& u) { return compose(compose(u, u), u); }

std::optional<int> covering_index(const BinaryRelation& u, int max_m) {
  BinaryRelation acc = u;
  for (int m = 1; m <= max_m; ++m) {
    if (acc.is_full()) return m;
    if (m == max_m) break;
    BinaryRelation next = compose(acc, u);
    if (next == acc) return std::nullopt;  // fixed point short of X x X
    acc = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::string> to_bit_strings(const BinaryRelation& u) {
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(u.size()));
  for (Index i = 0; i < u.size(); ++i) {
    std::string row(static_cast<std::size_t>(u.size()), '0');
    for (Index j = 0; j < u.size(); ++j)
      if (u.test(i, j)) row[static_cast<std::size_t>(j)] = '1';
    rows.push_back(std::move(row));
  }
  return rows;
}

BinaryRelation from_bit_strings(const std::vector<std::string>& rows) {
  const auto n = static_cast<Index>(rows.size());
  BinaryRelation r(n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != n) throw ShapeError("relation rows must have length n");
    for (Index j = 0; j < n; ++j) {
      const char c = row[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw ParseError("relation rows must be bit strings");
      if (c == '1') r.set(i, j);
    }
  }
  return r;
}

}  // namespace frinkmetric
