#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "nbai/theory.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nbai;
using nbai::test::code_of;

TEST_CASE("target allocation") {
  auto [a, b] = target_allocation(1, 1);
  CHECK(a == 0.5);
  CHECK(b == 0.5);
  std::tie(a, b) = target_allocation(1, 3);
  CHECK(a == 0.25);
  CHECK(b == 0.75);
  std::tie(a, b) = target_allocation(5, 5);
  CHECK(a == 0.5);
  CHECK(code_of([] { target_allocation(0, 1); }) ==
        ErrorCode::NonPositiveSigma);
  CHECK(code_of([] { target_allocation(1, -2); }) ==
        ErrorCode::NonPositiveSigma);
}

TEST_CASE("lower bound rate") {
  CHECK(lower_bound_rate(0.0, 1, 2) == 0.0);
  CHECK(lower_bound_rate(0.2, 1, 1) == doctest::Approx(0.005));
  CHECK(lower_bound_rate(0.1, 1, 1) == doctest::Approx(0.00125));
  CHECK(code_of([] { lower_bound_rate(0.1, 0, 1); }) ==
        ErrorCode::NonPositiveSigma);
}

TEST_CASE("ipw rate denominators") {
  const double delta = 0.2;
  // mu = 0: same denominator as AIPW, 8
  CHECK(ipw_rate(delta, 0, 0, 1, 1) == doctest::Approx(delta * delta / 8));
  CHECK(ipw_rate(delta, 0, 0, 1, 1) ==
        doctest::Approx(lower_bound_rate(delta, 1, 1)));
  // mu = 1: zeta = 2, denominator 16
  CHECK(ipw_rate(delta, 1, 1, 1, 1) == doctest::Approx(delta * delta / 16));
  CHECK(ipw_rate(delta, 1, 1, 1, 1) ==
        doctest::Approx(lower_bound_rate(delta, 1, 1) / 2));
  // mu = 10: zeta = 101, denominator 2*2*202
  CHECK(ipw_rate(delta, 10, 10, 1, 1) ==
        doctest::Approx(delta * delta / (2.0 * 2.0 * 202.0)));
}

TEST_CASE("normalized score") {
  CHECK(normalized_score(1.5, 0.5, 1.0, 9.0) == 0.0);
  CHECK(normalized_score(3, 1, 0, 4) == 1.0);
  CHECK(normalized_score(0, 2, -2, 4) == 0.0);
  CHECK(code_of([] { normalized_score(1, 0, 0, 0); }) ==
        ErrorCode::NonPositiveVariance);
}

TEST_CASE("normal cdf matches quadrature") {
  for (double x : {-8.0, -3.0, -1.0, -0.25, 0.0, 0.7, 2.0, 5.0}) {
    CHECK(std::abs(normal_cdf(x) - test::normal_cdf_quadrature(x)) < 1e-10);
  }
}

TEST_CASE("oracle exact error") {
  // Phi(-1) from quadrature, frozen: 0.15865525393145705
  CHECK(test::normal_cdf_quadrature(-1.0) ==
        doctest::Approx(0.15865525393145705).epsilon(1e-10));
  CHECK(oracle_exact_error(0.1, 1, 1, 400) ==
        doctest::Approx(0.15865525393145705).epsilon(1e-10));
  CHECK(oracle_exact_error(1e-12, 1, 1, 1000) == doctest::Approx(0.5));
  CHECK(oracle_exact_error(0.1, 1, 1, 1'000'000) < 1e-100);
}

TEST_CASE("oracle error exponent approaches the lower bound rate") {
  const int T = 100000;
  const double exponent = -std::log(oracle_exact_error(0.1, 1, 1, T)) / T;
  const double ratio = lower_bound_rate(0.1, 1, 1) / exponent;
  CHECK(ratio >= 0.9);
  CHECK(ratio <= 1.0);
}

TEST_CASE("rate properties over random parameters") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> mu(-20, 20), lsig(-2, 2);
  for (int i = 0; i < 10000; ++i) {
    const double m1 = mu(gen), m2 = mu(gen);
    const double s1 = std::exp(lsig(gen)), s2 = std::exp(lsig(gen));
    const double d = m1 - m2;
    const double lb = lower_bound_rate(d, s1, s2);
    CHECK(ipw_rate(d, m1, m2, s1, s2) <= lb * (1 + 1e-12));
    CHECK(lb >= 0.0);
    CHECK(lower_bound_rate(-d, s1, s2) == lb);
    CHECK(lower_bound_rate(-d, s2, s1) == doctest::Approx(lb).epsilon(1e-14));

    const auto [w1, w2] = target_allocation(s1, s2);
    CHECK(std::abs(w1 + w2 - 1.0) <= 1e-15);
    const double v = s1 * s1 / w1 + s2 * s2 / w2;
    CHECK(std::abs(v - aipw_variance(s1, s2)) <=
          1e-12 * aipw_variance(s1, s2));
  }
  // Equality iff both means are zero.
  CHECK(ipw_rate(0.0, 0, 0, 1.3, 0.4) == lower_bound_rate(0.0, 1.3, 0.4));
  CHECK(ipw_rate(0.5, 0.5, 0.0, 1.3, 0.4) < lower_bound_rate(0.5, 1.3, 0.4));
}

TEST_CASE("rate report") {
  const RateReport r = rate_report({1.0, 0.8, 1.0, 9.0});
  CHECK(r.delta == doctest::Approx(0.2));
  CHECK(r.w_star[0] == doctest::Approx(0.25));
  CHECK(r.v_aipw == doctest::Approx(16.0));
  CHECK(r.rate_lower_bound == doctest::Approx(0.00125));
  CHECK(r.zeta[0] == doctest::Approx(2.0));
  CHECK(r.zeta[1] == doctest::Approx(9.64));
  CHECK(r.rate_ipw <= r.rate_lower_bound);
}
