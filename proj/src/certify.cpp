#include "kdisp/certify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace kdisp {

SignMatrix::SignMatrix(const PointMultiset& points)
    : rows_(points.total_size()), cols_(points.dim()) {
  words_per_col_ = (rows_ + 63) / 64;
  words_.assign(words_per_col_ * cols_, 0);
  std::size_t row = 0;
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    for (std::uint64_t rep = 0; rep < points.multiplicity(i); ++rep, ++row) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (points.coord(i, j) >= 0.5)
          words_[j * words_per_col_ + row / 64] |= std::uint64_t(1) << (row % 64);
      }
    }
  }
}

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols, const std::vector<bool>& row_major_bits)
    : rows_(rows), cols_(cols) {
  if (row_major_bits.size() != rows * cols)
    throw std::invalid_argument("SignMatrix: bit count != rows*cols");
  words_per_col_ = (rows_ + 63) / 64;
  words_.assign(words_per_col_ * cols_, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (row_major_bits[r * cols + c])
        words_[c * words_per_col_ + r / 64] |= std::uint64_t(1) << (r % 64);
}

bool SignMatrix::bit(std::size_t row, std::size_t col) const {
  return (words_[col * words_per_col_ + row / 64] >> (row % 64)) & 1;
}

std::size_t SignMatrix::column_distance(std::size_t c1, std::size_t c2) const {
  std::size_t dist = 0;
  const std::uint64_t* a = words_.data() + c1 * words_per_col_;
  const std::uint64_t* b = words_.data() + c2 * words_per_col_;
  for (std::size_t w = 0; w < words_per_col_; ++w)
    dist += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return dist;
}

SignMatrix sign_matrix(const PointMultiset& points) { return SignMatrix(points); }

namespace {

std::vector<std::size_t> collect_rows(const SignMatrix& m, std::size_t j1, std::size_t j2,
                                      bool differing) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if ((m.bit(r, j1) != m.bit(r, j2)) == differing) rows.push_back(r);
  return rows;
}

AxisBox pair_box(std::size_t d, std::size_t j1, std::size_t j2, bool flipped) {
  std::vector<double> lo(d, 0.0), hi(d, 1.0);
  hi[j1] = 0.5;
  if (flipped) {
    hi[j2] = 0.5;
  } else {
    lo[j2] = 0.5;
  }
  return AxisBox(std::move(lo), std::move(hi), 1u);
}

}  // namespace

std::optional<PairCertificate> find_column_pair(const SignMatrix& matrix, std::uint64_t k) {
  if (matrix.cols() < 2) throw std::invalid_argument("find_column_pair: requires d >= 2");
  const std::size_t n = matrix.rows();
  const std::size_t d = matrix.cols();
  for (std::size_t j1 = 0; j1 + 1 < d; ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < d; ++j2) {
      const std::size_t h = matrix.column_distance(j1, j2);
      if (h <= k)
        return PairCertificate{j1, j2, false, collect_rows(matrix, j1, j2, true),
                               pair_box(d, j1, j2, false)};
      if (n - h <= k)
        return PairCertificate{j1, j2, true, collect_rows(matrix, j1, j2, false),
                               pair_box(d, j1, j2, true)};
    }
  }
  return std::nullopt;
}

AxisBox certificate_box(const PointMultiset& points, const PairCertificate& certificate) {
  const std::size_t d = points.dim();
  if (certificate.j1 >= certificate.j2 || certificate.j2 >= d)
    throw std::invalid_argument("certificate_box: column indices out of range");

  // Recheck against the point set: the pair must agree/disagree outside
  // exactly the listed mismatch rows.
  const SignMatrix m(points);
  const auto expected = collect_rows(m, certificate.j1, certificate.j2, !certificate.flipped);
  if (expected != certificate.mismatch_rows)
    throw std::invalid_argument("certificate_box: stale certificate for this point set");

  return pair_box(d, certificate.j1, certificate.j2, certificate.flipped);
}

std::uint64_t pigeonhole_threshold(std::uint64_t n, std::uint64_t k) {
  if (k >= n) return 0;
  const std::uint64_t exponent = n - k - 1;
  if (exponent > 63) throw std::invalid_argument("pigeonhole_threshold: 2^(n-k-1) overflows");
  return std::uint64_t(1) << exponent;
}

double sphere_packing_bound(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("sphere_packing_bound: requires n, k >= 1");
  double denominator = 0.0;
  double binom = 1.0;  // C(n, 0)
  for (std::uint64_t t = 0; t <= (k - 1) / 2 && t <= n; ++t) {
    if (t > 0) binom = binom * static_cast<double>(n - t + 1) / static_cast<double>(t);
    denominator += binom;
  }
  return std::ldexp(1.0, static_cast<int>(n)) / denominator;
}

}  // namespace kdisp
