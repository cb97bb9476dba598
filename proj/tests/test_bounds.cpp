#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kdisp/bounds.hpp"

using namespace kdisp;

namespace {

// Independent route: c_k = k (2/(k-1)!)^(1/k) with ln((k-1)!) summed term
// by term in extended precision.
double c_k_by_log_sum(std::uint64_t k) {
  long double log_factorial = 0.0L;
  for (std::uint64_t i = 2; i < k; ++i) log_factorial += std::log(static_cast<long double>(i));
  const long double exponent = (std::log(2.0L) - log_factorial) / static_cast<long double>(k);
  return static_cast<double>(static_cast<long double>(k) * std::exp(exponent));
}

}  // namespace

TEST_CASE("theorem a upper bound") {
  CHECK(thm_a_upper(16, 2, 1) == 1.0);                 // max{4*sqrt(1/16), 4/16}
  CHECK(thm_a_upper(16, 16, 1) == 2.0);                // max{4*sqrt(4/16), 4/16}
  CHECK(thm_a_upper(16, 2, 1, 2.5) == 2.5);
  CHECK_THROWS_AS(thm_a_upper(16, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(thm_a_upper(16, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(thm_a_upper(16, 2, 8), std::invalid_argument);

  // second term dominates and grows once k is large enough
  double previous = 0.0;
  for (std::uint64_t k = 2; k <= 7; ++k) {
    const double value = thm_a_upper(16, 2, k);
    CHECK(value >= previous);
    previous = value;
  }
}

TEST_CASE("theorem b lower bound") {
  CHECK(thm_b_lower(8, 2, 0) == 1.0 / 64);
  CHECK(thm_b_lower(8, 2, 3) == 1.0 / 16);
  CHECK(thm_b_lower(2, 16, 5) == 0.125);  // min saturates at 1
}

TEST_CASE("literature bounds") {
  CHECK(ahr_lower(8, 2) == doctest::Approx(1.0 / 36).epsilon(1e-15));
  CHECK(larcher_upper(std::uint64_t(1) << 15, 2) == 1.0);
  CHECK(rudolf_upper(64, 2) == doctest::Approx(0.125 * std::log2(288.0)).epsilon(1e-15));
  CHECK_THROWS_AS(rudolf_upper(4, 2), std::invalid_argument);
  CHECK(uv_upper(16, 16) == 2.0);
  CHECK(uv_upper(16, 16, 0.5) == 1.0);
}

TEST_CASE("c_k values and limit") {
  CHECK(c_k(1) == 2.0);
  CHECK(c_k(2) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c_k(3) == doctest::Approx(3.0).epsilon(1e-15));

  // frozen from the log-sum oracle: c_100 = 2.775302..., which sits above e;
  // the sequence converges to e from above after its early peak near k = 5
  CHECK(c_k(100) == doctest::Approx(2.7753020943).epsilon(1e-9));
  CHECK(c_k(100) == doctest::Approx(c_k_by_log_sum(100)).epsilon(1e-12));

  const double e = std::exp(1.0);
  double previous_gap = std::abs(c_k(10) - e);
  for (std::uint64_t k : {100, 10000, 1000000}) {
    const double gap = std::abs(c_k(k) - e);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  CHECK(previous_gap < 2e-5);
}

TEST_CASE("condition evaluation") {
  CHECK_FALSE(condition_holds(1, 1, 1, 1));  // 1/32 < 2 ln 16 + ln 2

  // monotone in n: once true, stays true over a scan
  bool seen_true = false;
  for (std::uint64_t n = 1; n <= 20000; n += 97) {
    const bool holds = condition_holds(n, 2, 2, 1);
    if (seen_true) CHECK(holds);
    seen_true = seen_true || holds;
  }
  CHECK(seen_true);
}

TEST_CASE("sufficient n") {
  // closed-form start: max{ceil(1024 ln 64), 4096} = 4259, and the
  // condition already holds there
  CHECK(sufficient_n(2, 2, 1) == 4259);
  CHECK(condition_holds(sufficient_n(2, 2, 1), 2, 2, 1));

  for (unsigned m = 1; m <= 3; ++m)
    for (std::uint64_t d : {1, 2, 5})
      for (std::uint64_t k : {0, 1, 3}) {
        const std::uint64_t n = sufficient_n(m, d, k);
        CHECK(condition_holds(n, m, d, k));
      }

  // monotone in d and k
  CHECK(sufficient_n(2, 2, 1) <= sufficient_n(2, 3, 1));
  CHECK(sufficient_n(2, 2, 1) <= sufficient_n(2, 2, 2));
  CHECK(sufficient_n(1, 1, 1) <= sufficient_n(1, 8, 1));
  CHECK(sufficient_n(1, 1, 1) <= sufficient_n(1, 1, 9));
}

TEST_CASE("recursion lower bound") {
  CHECK(recursion_lower(8, 1, 2, 0.25) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(recursion_lower(8, 8, 2, 0.25) >= 0.125);
  CHECK(recursion_lower(10, 3, 2, 0.0) == 0.0);
  CHECK_THROWS_AS(recursion_lower(3, 5, 2, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(recursion_lower(5, 3, 2, 1.5), std::invalid_argument);

  // composing the 1/4 base through the recursion stays above thm_b_lower
  for (std::uint64_t d : {2, 4, 16}) {
    for (std::uint64_t k = 0; k <= 4; ++k) {
      const std::uint64_t ell =
          k + static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(d))));
      for (std::uint64_t n = ell + 1; n <= ell + 60; n += 7) {
        CHECK(recursion_lower(n, ell, d, 0.25) >= thm_b_lower(n, d, k) - 1e-15);
      }
    }
  }
}

TEST_CASE("bound report flags") {
  BoundReport report = bound_report(16, 2, 1);
  CHECK(report.values.size() == 6);
  for (const auto& v : report.values) {
    if (v.name == "thm_a_upper") {
      CHECK(v.applicable);
      CHECK(v.shape_only);
      CHECK(v.value == 1.0);
    }
    if (v.name == "rudolf_upper") CHECK(v.applicable);
  }

  BoundReport edge = bound_report(4, 2, 0);
  for (const auto& v : edge.values) {
    if (v.name == "thm_a_upper") CHECK_FALSE(v.applicable);  // k = 0
    if (v.name == "rudolf_upper") CHECK_FALSE(v.applicable);  // n <= 2d
  }
  CHECK(describe(edge).find("not-applicable") != std::string::npos);
}
