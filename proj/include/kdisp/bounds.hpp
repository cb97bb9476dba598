#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kdisp {

// Closed-form dispersion bounds. Absolute constants left unspecified by the
// source results (C, c) are caller-supplied parameters defaulting to 1;
// reports label such values shape-only.

// C * max{ log2(n) sqrt(log2(d)/n), k log2(n/k)/n }. Requires d >= 2 and
// 1 <= k < n/2.
double thm_a_upper(std::uint64_t n, std::uint64_t d, std::uint64_t k, double C = 1.0);

// (1/8) min{ 1, (k + log2(d)) / n }.
double thm_b_lower(std::uint64_t n, std::uint64_t d, std::uint64_t k);

// log2(d) / (4 (n + log2(d))).
double ahr_lower(std::uint64_t n, std::uint64_t d);

// 2^(7d+1) / n.
double larcher_upper(std::uint64_t n, std::uint64_t d);

// (4d/n) log2(9n/d). Requires n > 2d.
double rudolf_upper(std::uint64_t n, std::uint64_t d);

// c log2(n) sqrt(log2(d)/n). Requires n, d >= 2.
double uv_upper(std::uint64_t n, std::uint64_t d, double c = 1.0);

// c_k = k (2/(k-1)!)^(1/k), evaluated with log-gamma; tends to e.
double c_k(std::uint64_t k);

// n 2^(-m-4) >= m 2^m ln(2^(m+3) d) + k ln(c_k n / k); the k term vanishes
// at k = 0.
bool condition_holds(std::uint64_t n, unsigned m, std::uint64_t d, std::uint64_t k);

// Smallest n at or above the closed-form start
// max{ ceil(m 2^(2m+5) ln(2^(m+3) d)), k m 2^(m+9) } that satisfies
// condition_holds.
std::uint64_t sufficient_n(unsigned m, std::uint64_t d, std::uint64_t k);

// (ell+1) * base_value / (n + ell + 1). Requires ell <= n, base in [0,1].
double recursion_lower(std::uint64_t n, std::uint64_t ell, std::uint64_t d, double base_value);

struct BoundValue {
  std::string name;
  double value = 0.0;
  bool applicable = false;
  bool shape_only = false;  // scaled by a caller-supplied constant
};

struct BoundReport {
  std::uint64_t n = 0, d = 0, k = 0;
  double C = 1.0, c = 1.0;
  std::vector<BoundValue> values;
};

BoundReport bound_report(std::uint64_t n, std::uint64_t d, std::uint64_t k, double C = 1.0,
                         double c = 1.0);
std::string describe(const BoundReport& report);

}  // namespace kdisp
