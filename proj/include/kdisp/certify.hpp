#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdisp/geometry.hpp"

namespace kdisp {

// Binary n x d matrix thresholding each coordinate at 1/2 (x >= 1/2 maps to
// 1), with multiplicities expanded to rows. Bit-packed column-major, 64
// rows per word.
class SignMatrix {
 public:
  explicit SignMatrix(const PointMultiset& points);
  SignMatrix(std::size_t rows, std::size_t cols, const std::vector<bool>& row_major_bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool bit(std::size_t row, std::size_t col) const;

  // Hamming distance between two columns.
  std::size_t column_distance(std::size_t c1, std::size_t c2) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_per_col_ = 0;
  std::vector<std::uint64_t> words_;
};

SignMatrix sign_matrix(const PointMultiset& points);

// Witness that columns j1 < j2 agree (flipped == false) or disagree
// (flipped == true) in all rows except mismatch_rows, |mismatch_rows| <= k.
// box is the certified volume-1/4 box: full extent except on (j1, j2),
// where the cross-section is [0,1/2] x [1/2,1] for an agreeing pair and
// [0,1/2] x [0,1/2] for a disagreeing one.
struct PairCertificate {
  std::size_t j1 = 0, j2 = 0;
  bool flipped = false;
  std::vector<std::size_t> mismatch_rows;
  AxisBox box;
};

// First column pair (lexicographic (j1, j2), agreement checked before
// disagreement) within Hamming distance k of equality or complementarity.
std::optional<PairCertificate> find_column_pair(const SignMatrix& matrix, std::uint64_t k);

// Revalidates the certificate against the point set and returns its box.
// Any strictly interior point has the sign pattern of a mismatch row, so
// count_inside <= |mismatch_rows|. Throws if the certificate does not match
// the point set.
AxisBox certificate_box(const PointMultiset& points, const PairCertificate& certificate);

// 2^(n-k-1): whenever d exceeds this, a qualifying column pair must exist.
// Returns 0 when k >= n.
std::uint64_t pigeonhole_threshold(std::uint64_t n, std::uint64_t k);

// Hamming bound on the maximal k-packing of {0,1}^n:
// 2^n / sum_{t <= floor((k-1)/2)} C(n, t).
double sphere_packing_bound(std::uint64_t n, std::uint64_t k);

}  // namespace kdisp
