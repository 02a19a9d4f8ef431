#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frinkmetric/kernel.hpp"

namespace frinkmetric {

/// Subset U of {0..n-1}^2 stored as a bit-packed n x n matrix (the indicator
/// matrix A_U). Rows are padded to whole 64-bit words; padding bits stay zero.
class BinaryRelation {
 public:
  using Word = std::uint64_t;
  static constexpr Index kWordBits = 64;

  explicit BinaryRelation(Index n);

  static BinaryRelation empty(Index n) { return BinaryRelation(n); }
  static BinaryRelation full(Index n);
  static BinaryRelation diagonal(Index n);
  /// {(i,j) : |i - j| <= half_width}
  static BinaryRelation band(Index n, Index half_width);

  Index size() const { return n_; }
  bool test(Index i, Index j) const {
    return (row_data(i)[j / kWordBits] >> (j % kWordBits)) & Word{1};
  }
  void set(Index i, Index j, bool value = true);

  Index count() const;
  bool is_full() const { return count() == n_ * n_; }
  bool is_symmetric() const;
  bool contains_diagonal() const;
  bool is_subset_of(const BinaryRelation& other) const;
  BinaryRelation transpose() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

  // Word-level row access for the composition kernel.
  Index words_per_row() const { return words_; }
  const Word* row_data(Index i) const { return bits_.data() + i * words_; }
  Word* row_data(Index i) { return bits_.data() + i * words_; }

 private:
  Index n_;
  Index words_;
  std::vector<Word> bits_;
};

enum class Comparison { strictly_greater, at_least };

/// {(i,j) : K_ij > threshold} or {(i,j) : K_ij >= threshold}.
BinaryRelation level_set(const Eigen::Ref<const Eigen::MatrixXd>& k, double threshold,
                         Comparison cmp);
inline BinaryRelation level_set(const AffinityMatrix& k, double threshold, Comparison cmp) {
  return level_set(k.values(), threshold, cmp);
}

/// (i,j) in result iff (i,m) in u and (m,j) in v for some m: the support of A_u * A_v.
BinaryRelation compose(const BinaryRelation& u, const BinaryRelation& v);

BinaryRelation power3(const BinaryRelation& u);

inline bool is_full(const BinaryRelation& u) { return u.is_full(); }

/// Smallest m <= max_m with u^(m) = X x X, or nullopt.
std::optional<int> covering_index(const BinaryRelation& u, int max_m);

/// Rows as '0'/'1' strings, for {"n": ..., "rows": [...]} debugging dumps.
std::vector<std::string> to_bit_strings(const BinaryRelation& u);
BinaryRelation from_bit_strings(const std::vector<std::string>& rows);

}  // namespace frinkmetric
