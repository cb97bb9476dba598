#include "kdisp/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kdisp/pointset_io.hpp"

namespace kdisp {

double thm_a_upper(std::uint64_t n, std::uint64_t d, std::uint64_t k, double C) {
  if (d < 2) throw std::invalid_argument("thm_a_upper: requires d >= 2");
  if (k < 1 || 2 * k >= n) throw std::invalid_argument("thm_a_upper: requires 1 <= k < n/2");
  if (!(C > 0)) throw std::invalid_argument("thm_a_upper: requires C > 0");
  const double nn = static_cast<double>(n);
  const double first = std::log2(nn) * std::sqrt(std::log2(static_cast<double>(d)) / nn);
  const double second = static_cast<double>(k) * std::log2(nn / static_cast<double>(k)) / nn;
  return C * std::max(first, second);
}

double thm_b_lower(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (n < 1 || d < 1) throw std::invalid_argument("thm_b_lower: requires n, d >= 1");
  const double ratio =
      (static_cast<double>(k) + std::log2(static_cast<double>(d))) / static_cast<double>(n);
  return 0.125 * std::min(1.0, ratio);
}

double ahr_lower(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("ahr_lower: requires n, d >= 1");
  const double logd = std::log2(static_cast<double>(d));
  return logd / (4.0 * (static_cast<double>(n) + logd));
}

double larcher_upper(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("larcher_upper: requires n, d >= 1");
  return std::exp2(7.0 * static_cast<double>(d) + 1.0) / static_cast<double>(n);
}

double rudolf_upper(std::uint64_t n, std::uint64_t d) {
  if (n <= 2 * d) throw std::invalid_argument("rudolf_upper: requires n > 2d");
  const double nn = static_cast<double>(n), dd = static_cast<double>(d);
  return (4.0 * dd / nn) * std::log2(9.0 * nn / dd);
}

double uv_upper(std::uint64_t n, std::uint64_t d, double c) {
  if (n < 2 || d < 2) throw std::invalid_argument("uv_upper: requires n, d >= 2");
  const double nn = static_cast<double>(n);
  return c * std::log2(nn) * std::sqrt(std::log2(static_cast<double>(d)) / nn);
}

double c_k(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("c_k: requires k >= 1");
  // k * (2/(k-1)!)^(1/k) = k * exp((ln 2 - lgamma(k)) / k)
  const double kk = static_cast<double>(k);
  return kk * std::exp((std::log(2.0) - std::lgamma(kk)) / kk);
}

bool condition_holds(std::uint64_t n, unsigned m, std::uint64_t d, std::uint64_t k) {
  if (n < 1 || m < 1 || d < 1) throw std::invalid_argument("condition_holds: bad arguments");
  const double lhs = static_cast<double>(n) * std::exp2(-static_cast<double>(m) - 4.0);
  double rhs = static_cast<double>(m) * std::exp2(static_cast<double>(m)) *
               std::log(std::ldexp(static_cast<double>(d), static_cast<int>(m) + 3));
  if (k >= 1)
    rhs += static_cast<double>(k) *
           std::log(c_k(k) * static_cast<double>(n) / static_cast<double>(k));
  return lhs >= rhs;
}

std::uint64_t sufficient_n(unsigned m, std::uint64_t d, std::uint64_t k) {
  if (m < 1 || m > 24 || d < 1) throw std::invalid_argument("sufficient_n: bad arguments");
  const double log_term = std::log(std::ldexp(static_cast<double>(d), static_cast<int>(m) + 3));
  const double first = std::ceil(static_cast<double>(m) *
                                 std::exp2(2.0 * static_cast<double>(m) + 5.0) * log_term);
  const double second =
      static_cast<double>(k) * static_cast<double>(m) * std::exp2(static_cast<double>(m) + 9.0);
  std::uint64_t n = static_cast<std::uint64_t>(std::max(first, second));
  if (n < 1) n = 1;
  // Close with a scan: the left side of the condition grows linearly, the
  // right side logarithmically, so once it holds it keeps holding.
  while (!condition_holds(n, m, d, k)) ++n;
  return n;
}

double recursion_lower(std::uint64_t n, std::uint64_t ell, std::uint64_t d, double base_value) {
  (void)d;
  if (ell > n) throw std::invalid_argument("recursion_lower: requires ell <= n");
  if (!(base_value >= 0.0 && base_value <= 1.0))
    throw std::invalid_argument("recursion_lower: base value must be in [0,1]");
  return static_cast<double>(ell + 1) * base_value / static_cast<double>(n + ell + 1);
}

BoundReport bound_report(std::uint64_t n, std::uint64_t d, std::uint64_t k, double C, double c) {
  BoundReport report;
  report.n = n;
  report.d = d;
  report.k = k;
  report.C = C;
  report.c = c;

  auto add = [&report](const std::string& name, bool applicable, double value, bool shape_only) {
    report.values.push_back({name, applicable ? value : 0.0, applicable, shape_only});
  };
  add("thm_a_upper", d >= 2 && k >= 1 && 2 * k < n,
      (d >= 2 && k >= 1 && 2 * k < n) ? thm_a_upper(n, d, k, C) : 0.0, true);
  add("thm_b_lower", n >= 1 && d >= 1, (n >= 1 && d >= 1) ? thm_b_lower(n, d, k) : 0.0, false);
  add("ahr_lower", n >= 1 && d >= 1, (n >= 1 && d >= 1) ? ahr_lower(n, d) : 0.0, false);
  add("larcher_upper", n >= 1 && d >= 1, (n >= 1 && d >= 1) ? larcher_upper(n, d) : 0.0, false);
  add("rudolf_upper", n > 2 * d, (n > 2 * d) ? rudolf_upper(n, d) : 0.0, false);
  add("uv_upper", n >= 2 && d >= 2, (n >= 2 && d >= 2) ? uv_upper(n, d, c) : 0.0, true);
  return report;
}

std::string describe(const BoundReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << "\nd: " << report.d << "\nk: " << report.k << "\n";
  out << "C: " << format_double(report.C) << "\nc: " << format_double(report.c) << "\n";
  for (const auto& v : report.values) {
    out << v.name << ": ";
    if (!v.applicable)
      out << "not-applicable";
    else
      out << format_double(v.value);
    if (v.shape_only && v.applicable) out << " (shape-only)";
    out << "\n";
  }
  return out.str();
}

}  // namespace kdisp
