#include <doctest.h>

#include <cmath>
#include <random>

#include "succoef/errors.hpp"
#include "succoef/series.hpp"
#include "test_util.hpp"

using namespace succoef;
using succoef::test::max_diff;
using succoef::test::random_series;

namespace {

TruncatedSeries ones(std::size_t order) { return TruncatedSeries(std::vector<complex>(order + 1, 1.0)); }

}  // namespace

TEST_CASE("add") {
  const TruncatedSeries f({1.0, 2.0, 3.0});
  CHECK(max_diff(f + TruncatedSeries(2), f) == 0.0);
  CHECK(max_diff(TruncatedSeries({1.0, 1.0, 0.0}) + TruncatedSeries({0.0, -1.0, 1.0}), TruncatedSeries({1.0, 0.0, 1.0})) ==
        0.0);
  CHECK(max_diff(f + complex(-1.0) * f, TruncatedSeries(2)) == 0.0);
  CHECK_THROWS_AS(add(TruncatedSeries(2), TruncatedSeries(3)), order_mismatch);
}

TEST_CASE("mul") {
  const std::size_t n = 8;
  const TruncatedSeries one_minus_z({1.0, -1.0, 0, 0, 0, 0, 0, 0, 0});
  const TruncatedSeries product = one_minus_z * ones(n);
  CHECK(product[0] == complex(1.0));
  for (std::size_t k = 1; k <= n; ++k) CHECK(std::abs(product[k]) == 0.0);

  const TruncatedSeries f({0.5, complex(1, 2), -3.0, 0.25});
  CHECK(max_diff(f * TruncatedSeries::constant(1.0, 3), f) == 0.0);

  const TruncatedSeries one_plus_z({1.0, 1.0, 0, 0, 0});
  CHECK(max_diff(one_plus_z * one_plus_z, TruncatedSeries({1.0, 2.0, 1.0, 0, 0})) == 0.0);
  CHECK_THROWS_AS(mul(TruncatedSeries(2), TruncatedSeries(4)), order_mismatch);
}

TEST_CASE("invariants: positive order and finite coefficients") {
  CHECK_THROWS_AS(TruncatedSeries(0), domain_error);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<complex>{1.0}), domain_error);
  CHECK_THROWS_AS(TruncatedSeries({1.0, complex(std::nan(""), 0.0)}), domain_error);
  CHECK_THROWS_AS(TruncatedSeries({1.0, 1e308}) * complex(1e10), domain_error);
}

TEST_CASE("exp_series") {
  CHECK(max_diff(exp_series(TruncatedSeries(6)), TruncatedSeries::constant(1.0, 6)) == 0.0);

  const TruncatedSeries e = exp_series(TruncatedSeries::identity(10));
  double factorial = 1.0;
  for (std::size_t k = 0; k <= 10; ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    CHECK(std::abs(e[k] - 1.0 / factorial) < 1e-16);
  }

  // exp(log(1/(1 - z))) = 1/(1 - z)
  const std::size_t n = 20;
  std::vector<complex> mercator(n + 1);
  for (std::size_t k = 1; k <= n; ++k) mercator[k] = 1.0 / static_cast<double>(k);
  CHECK(max_diff(exp_series(TruncatedSeries(mercator)), ones(n)) < 1e-12);

  CHECK_THROWS_AS(exp_series(TruncatedSeries::constant(0.5, 4)), domain_error);
}

TEST_CASE("log_series") {
  CHECK(max_diff(log_series(TruncatedSeries::constant(1.0, 5)), TruncatedSeries(5)) == 0.0);

  const TruncatedSeries l = log_series(ones(15));
  CHECK(l[0] == complex(0.0));
  for (std::size_t k = 1; k <= 15; ++k) CHECK(std::abs(l[k] - 1.0 / static_cast<double>(k)) < 1e-15);

  // log(exp(z + z^2)) = z + z^2
  const TruncatedSeries g({0.0, 1.0, 1.0, 0, 0, 0, 0});
  CHECK(max_diff(log_series(exp_series(g)), g) < 1e-14);

  CHECK_THROWS_AS(log_series(TruncatedSeries::constant(2.0, 4)), domain_error);
  CHECK_THROWS_AS(log_series(TruncatedSeries(4)), domain_error);
}

TEST_CASE("pow_complex") {
  const std::size_t n = 12;
  std::vector<complex> base(n + 1);
  base[0] = 1.0;
  base[1] = -1.0;
  const TruncatedSeries koebe_denominator = pow_complex(TruncatedSeries(base), -2.0);
  for (std::size_t k = 0; k <= n; ++k) CHECK(std::abs(koebe_denominator[k] - static_cast<double>(k + 1)) < 1e-12);

  std::mt19937_64 rng(11);
  const TruncatedSeries f = random_series(rng, n, 1.0);
  CHECK(max_diff(pow_complex(f, 0.0), TruncatedSeries::constant(1.0, n)) == 0.0);
  CHECK(max_diff(pow_complex(f, 1.0), f) < 1e-12);
  CHECK_THROWS_AS(pow_complex(TruncatedSeries::constant(3.0, n), 0.5), domain_error);
}

TEST_CASE("integrate_kernel") {
  CHECK(max_diff(integrate_kernel(TruncatedSeries::constant(1.0, 4)), TruncatedSeries(4)) == 0.0);
  CHECK(max_diff(integrate_kernel(TruncatedSeries({1.0, 2.0, 0, 0})), TruncatedSeries({0.0, 2.0, 0, 0})) == 0.0);

  // (1 + z)/(1 - z) = 1 + 2z + 2z^2 + ...  ->  2/k at z^k
  std::vector<complex> herglotz(9, 2.0);
  herglotz[0] = 1.0;
  const TruncatedSeries k = integrate_kernel(TruncatedSeries(herglotz));
  CHECK(k[0] == complex(0.0));
  for (std::size_t j = 1; j <= 8; ++j) CHECK(std::abs(k[j] - 2.0 / static_cast<double>(j)) < 1e-16);

  CHECK_THROWS_AS(integrate_kernel(TruncatedSeries({0.0, 1.0})), domain_error);
}

TEST_CASE("antiderivative and derivative") {
  CHECK(max_diff(antiderivative(TruncatedSeries::constant(1.0, 3)), TruncatedSeries::identity(3)) == 0.0);
  const TruncatedSeries h = antiderivative(TruncatedSeries({1.0, 0.0, -0.5, 0.0}));
  CHECK(max_diff(h, TruncatedSeries({0.0, 1.0, 0.0, -1.0 / 6.0})) < 1e-16);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries f = random_series(rng, 10, complex(0.3, -0.2));
    const TruncatedSeries back = derivative(antiderivative(f));
    for (std::size_t k = 0; k < f.order(); ++k) CHECK(std::abs(back[k] - f[k]) < 1e-15);
  }
}

TEST_CASE("eval") {
  std::mt19937_64 rng(3);
  const TruncatedSeries f = random_series(rng, 7, complex(0.25, 0.5));
  CHECK(eval(f, 0.0) == f[0]);

  for (std::size_t n : {4u, 12u, 30u}) {
    CHECK(std::abs(eval(ones(n), 0.5) - (2.0 - std::pow(2.0, -static_cast<double>(n)))) < 1e-15);
  }

  // Koebe z/(1 - z)^2 at z = 0.1; the order-12 tail is below 2e-12.
  std::vector<complex> koebe(13);
  for (std::size_t k = 1; k <= 12; ++k) koebe[k] = static_cast<double>(k);
  CHECK(std::abs(eval(TruncatedSeries(koebe), 0.1) - 0.1 / 0.81) < 2e-12);

  const TruncatedSeries g({1.0, 2.0, 3.0, 4.0});
  const complex z(0.3, -0.4);
  CHECK(std::abs(eval_derivative(g, z) - eval(derivative(g), z)) < 1e-15);
  CHECK(std::abs(eval_second_derivative(g, z) - eval(derivative(derivative(g)), z)) < 1e-14);
}

TEST_CASE("property: ring axioms on the unit polydisk") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_series(rng, 12, std::polar(0.7, 0.1 * trial));
    const auto g = random_series(rng, 12, std::polar(0.4, -0.2 * trial));
    const auto h = random_series(rng, 12, std::polar(0.9, 0.3 * trial));
    CHECK(max_diff(f + g, g + f) < 1e-12);
    CHECK(max_diff((f + g) + h, f + (g + h)) < 1e-12);
    CHECK(max_diff(f * g, g * f) < 1e-12);
    CHECK(max_diff((f * g) * h, f * (g * h)) < 1e-12);
    CHECK(max_diff(f * (g + h), f * g + f * h) < 1e-12);
  }
}

TEST_CASE("property: exp and log are inverse") {
  std::mt19937_64 rng(77);
  for (std::size_t n : {4u, 12u, 24u}) {
    for (int trial = 0; trial < 50; ++trial) {
      // Scaled so the round trip is well conditioned at order 24.
      const auto f = TruncatedSeries::constant(1.0, n) + complex(0.5) * random_series(rng, n, 0.0);
      CHECK(max_diff(exp_series(log_series(f)), f) < 1e-11);
      const auto g = complex(0.5) * random_series(rng, n, 0.0);
      CHECK(max_diff(log_series(exp_series(g)), g) < 1e-11);
    }
  }
}

TEST_CASE("property: pow additivity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = TruncatedSeries::constant(1.0, 16) + complex(0.5) * random_series(rng, 16, 0.0);
    const complex a(u(rng), u(rng));
    const complex b(u(rng), u(rng));
    CHECK(max_diff(pow_complex(f, a) * pow_complex(f, b), pow_complex(f, a + b)) < 1e-11);
  }
}

TEST_CASE("property: kernel integral times z differentiated recovers p - 1") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_series(rng, 14, 1.0);
    const auto k = integrate_kernel(p);
    // z * d/dz of the kernel integral is p - 1.
    std::vector<complex> zk(k.order() + 1);
    for (std::size_t j = 1; j <= k.order(); ++j) zk[j] = static_cast<double>(j) * k[j];
    for (std::size_t j = 1; j <= p.order(); ++j) CHECK(std::abs(zk[j] - p[j]) < 1e-15);
  }
}
