#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "logrca/numerics.hpp"

using logrca::ArrayXd;
using logrca::kl_divergence;
using logrca::log_gamma;
using logrca::log_sum_exp;
using logrca::ProbabilityVector;
using logrca::stirling_log_factorial;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Oracle: ln Gamma(n) at integer n via compensated summation of logs,
// independent of the Lanczos path under test.
class ExactIntegerLogGamma {
 public:
  // ln Gamma(n) = sum_{j=2}^{n-1} ln j
  double advance_to(long n) {
    while (next_ < n) {
      const double term = std::log(static_cast<double>(next_));
      const double y = term - carry_;
      const double t = sum_ + y;
      carry_ = (t - sum_) - y;
      sum_ = t;
      ++next_;
    }
    return sum_;
  }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
  long next_ = 2;  // value whose log is added next; ln Gamma(2) = 0
};

ArrayXd random_simplex(std::mt19937& rng, int d) {
  std::exponential_distribution<double> exp1(1.0);
  ArrayXd v(d);
  for (int i = 0; i < d; ++i) v[i] = exp1(rng);
  return v / v.sum();
}

}  // namespace

TEST_CASE("log_gamma at known points") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-12);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-12));
  CHECK(std::abs(log_gamma(2.0)) <= 1e-12);
}

TEST_CASE("log_gamma rejects out-of-domain input") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  CHECK_THROWS_AS(log_gamma(kInf), std::domain_error);
}

TEST_CASE("log_gamma matches exact sum of logs at integers, rel err <= 1e-10") {
  ExactIntegerLogGamma oracle;
  for (long n : {2L, 3L, 10L, 100L, 1000L, 54321L, 250000L, 1000000L}) {
    const double exact = oracle.advance_to(n);
    const double got = log_gamma(static_cast<double>(n));
    CHECK(std::abs(got - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("log_gamma recurrence ln Gamma(x+1) = ln Gamma(x) + ln x") {
  auto residual = [](double x) {
    return std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x));
  };
  for (double x : {0.5, 1.0, 2.0, 10.0, 1e4}) {
    CHECK(residual(x) <= 1e-9);
  }
  // Random x, log-uniform over (0.5, 1e6). Above x ~ 4e5 the 1e-9 bound is
  // below the spacing of doubles at |ln Gamma|, so the tolerance is floored
  // at 4 ulp of the larger value.
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> u(std::log(0.5), std::log(1e6));
  for (int i = 0; i < 100; ++i) {
    const double x = std::exp(u(rng));
    const double rep_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                             std::abs(log_gamma(x + 1.0));
    CHECK(residual(x) <= std::max(1e-9, rep_floor));
  }
}

TEST_CASE("stirling_log_factorial values and gap bounds") {
  // n ln n - n + 0.5 ln(2 pi n)
  CHECK(stirling_log_factorial(10.0) == doctest::Approx(15.0960820096422).epsilon(1e-12));
  CHECK(std::abs(stirling_log_factorial(10.0) - std::log(3628800.0)) <= 0.01);
  CHECK(stirling_log_factorial(1.0) == doctest::Approx(-0.0810614667953273).epsilon(1e-12));
  CHECK(std::abs(stirling_log_factorial(1.0) - 0.0) <= 1.0 / 12.0 + 1e-9);

  ExactIntegerLogGamma oracle;
  const double exact1000 = oracle.advance_to(1001L);
  CHECK(std::abs(stirling_log_factorial(1000.0) - exact1000) <=
        1e-4 * std::abs(exact1000));

  CHECK_THROWS_AS(stirling_log_factorial(0.0), std::domain_error);
  CHECK_THROWS_AS(stirling_log_factorial(-3.0), std::domain_error);
}

TEST_CASE("stirling gap <= 1/(12n) with the exact value above the estimate") {
  ExactIntegerLogGamma oracle;
  for (long n : {1L, 2L, 5L, 10L, 100L, 1000L, 10000L, 1000000L}) {
    const double exact = oracle.advance_to(n + 1);
    const double gap = exact - stirling_log_factorial(static_cast<double>(n));
    CHECK(gap >= -1e-9);
    CHECK(gap <= 1.0 / (12.0 * static_cast<double>(n)) + 1e-9);
  }
}

TEST_CASE("kl_divergence examples") {
  ArrayXd q(2), p(2);
  q << 0.3, 0.7;
  CHECK(kl_divergence(q, q) == 0.0);

  q << 0.5, 0.5;
  p << 0.25, 0.75;
  CHECK(kl_divergence(q, p) == doctest::Approx(0.143841036225890).epsilon(1e-12));

  q << 1.0, 0.0;
  p << 0.5, 0.5;
  CHECK(kl_divergence(q, p) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // Mass where p has none -> infinite divergence sentinel.
  q << 0.5, 0.5;
  p << 1.0, 0.0;
  CHECK(kl_divergence(q, p) == kInf);

  ArrayXd r(3);
  r << 0.2, 0.3, 0.5;
  CHECK_THROWS_AS(kl_divergence(q, r), std::invalid_argument);
}

TEST_CASE("kl_divergence is non-negative and zero only at equality") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(2, 8);
  for (int iter = 0; iter < 200; ++iter) {
    const int d = dim(rng);
    const ArrayXd q = random_simplex(rng, d);
    const ArrayXd p = random_simplex(rng, d);
    const double kl = kl_divergence(q, p);
    CHECK(kl >= 0.0);
    if ((q - p).abs().maxCoeff() > 1e-6) {
      CHECK(kl > 0.0);
    }
    CHECK(kl_divergence(q, q) <= 1e-12);
  }
}

TEST_CASE("log_sum_exp examples and shift invariance") {
  ArrayXd two(2);
  two << 0.0, 0.0;
  CHECK(log_sum_exp(two) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  ArrayXd one(1);
  one << -4.25;
  CHECK(log_sum_exp(one) == doctest::Approx(-4.25).epsilon(1e-14));

  two << 1000.0, 1000.0;
  CHECK(log_sum_exp(two) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-14));

  ArrayXd empty(0);
  CHECK_THROWS_AS(log_sum_exp(empty), std::domain_error);

  std::mt19937 rng(11);
  std::normal_distribution<double> gauss(0.0, 10.0);
  for (int iter = 0; iter < 100; ++iter) {
    ArrayXd v(5);
    for (int i = 0; i < 5; ++i) v[i] = gauss(rng);
    const double c = gauss(rng);
    CHECK(std::abs(log_sum_exp((v + c).eval()) - (log_sum_exp(v) + c)) <= 1e-12);
  }
}

TEST_CASE("log_sum_exp tolerates -inf entries") {
  ArrayXd v(3);
  v << -kInf, 0.0, 0.0;
  CHECK(log_sum_exp(v) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  v << -kInf, -kInf, -kInf;
  CHECK(log_sum_exp(v) == -kInf);
}

TEST_CASE("ProbabilityVector validates its invariants") {
  ArrayXd ok(2);
  ok << 0.25, 0.75;
  CHECK_NOTHROW(ProbabilityVector{ok});

  ArrayXd bad_sum(2);
  bad_sum << 0.25, 0.70;
  CHECK_THROWS_AS(ProbabilityVector{bad_sum}, std::invalid_argument);

  ArrayXd negative(2);
  negative << -0.25, 1.25;
  CHECK_THROWS_AS(ProbabilityVector{negative}, std::invalid_argument);

  CHECK_THROWS_AS(ProbabilityVector{ArrayXd(0)}, std::invalid_argument);

  ArrayXd weights(3);
  weights << 2.0, 3.0, 5.0;
  const auto pv = ProbabilityVector::normalized(weights);
  CHECK(pv.entries()[2] == doctest::Approx(0.5).epsilon(1e-12));
}
