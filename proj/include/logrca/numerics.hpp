#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logrca {

using Eigen::ArrayXd;

// ln Gamma(x), x > 0. Lanczos expansion evaluated in extended precision;
// relative error stays below 1e-13 for x >= 0.5.
double log_gamma(double x);

// Stirling approximation to ln(n!): n ln n - n + 0.5 ln(2 pi n).
// Underestimates the exact value by r_n with 1/(12n+1) < r_n < 1/(12n).
double stirling_log_factorial(double n);

// ln sum_i exp(v_i), overflow-safe under a shift by the maximum.
template <typename Derived>
double log_sum_exp(const Eigen::ArrayBase<Derived>& values) {
  if (values.size() == 0) {
    throw std::domain_error("log_sum_exp: empty input");
  }
  const double m = values.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf, or +inf/nan dominates
  return m + std::log((values.derived() - m).exp().sum());
}

// Distribution over d >= 1 categories; entries sum to one within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(ArrayXd entries);

  // Scales non-negative weights to the simplex.
  static ProbabilityVector normalized(const ArrayXd& weights);

  const ArrayXd& entries() const { return entries_; }
  Eigen::Index size() const { return entries_.size(); }

 private:
  ArrayXd entries_;
};

// sum_i q_i ln(q_i/p_i) in nats, with 0 ln 0 := 0.
// Returns +inf when q puts mass where p has none.
double kl_divergence(const Eigen::Ref<const ArrayXd>& q,
                     const Eigen::Ref<const ArrayXd>& p);
double kl_divergence(const ProbabilityVector& q, const ProbabilityVector& p);

}  // namespace logrca
