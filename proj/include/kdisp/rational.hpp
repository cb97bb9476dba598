#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kdisp {

// Small exact non-negative rational. Numerators/denominators stay tiny in
// this codebase (dyadic volumes and mesh-count probabilities), so int64
// with 128-bit intermediates is plenty.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    reduce();
  }

  void reduce() {
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce before multiplying to keep intermediates small.
    Rational x(a.num, b.den);
    Rational y(b.num, a.den);
    __int128 n = static_cast<__int128>(x.num) * y.num;
    __int128 d = static_cast<__int128>(x.den) * y.den;
    if (n > INT64_MAX || d > INT64_MAX)
      throw std::overflow_error("Rational: product overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// 1 / 2^m, m <= 62.
inline Rational pow2_inverse(unsigned m) {
  if (m > 62) throw std::invalid_argument("pow2_inverse: exponent too large");
  return Rational(1, std::int64_t(1) << m);
}

}  // namespace kdisp
