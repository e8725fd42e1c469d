#include "logrca/numerics.hpp"

namespace logrca {

namespace {

// Lanczos g = 7, nine terms (Godfrey's coefficients).
constexpr long double kLanczos[9] = {
    0.99999999999980993L,      676.5203681218851L, -1259.1392167224028L,
    771.32342877765313L,      -176.61502916214059L, 12.507343278686905L,
    -0.13857109526572012L,     9.9843695780195716e-6L,
    1.5056327351493116e-7L};

constexpr long double kLogSqrtTwoPi = 0.9189385332046727417803297364056176L;
constexpr long double kPi = 3.1415926535897932384626433832795029L;

// Valid for z >= 0.5; the double result is then correctly rounded for all
// practical purposes (the 80-bit intermediate keeps ~19 digits).
long double lanczos_log_gamma(long double z) {
  long double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    series += kLanczos[i] / (z - 1 + i);
  }
  const long double t = z + 6.5L;
  return kLogSqrtTwoPi + (z - 0.5L) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("log_gamma: requires finite x > 0");
  }
  const long double z = x;
  if (z < 0.5L) {
    // Reflection: ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z).
    return static_cast<double>(std::log(kPi / std::sin(kPi * z)) -
                               lanczos_log_gamma(1.0L - z));
  }
  return static_cast<double>(lanczos_log_gamma(z));
}

double stirling_log_factorial(double n) {
  if (!std::isfinite(n) || n <= 0.0) {
    throw std::domain_error("stirling_log_factorial: requires finite n > 0");
  }
  return n * std::log(n) - n + 0.5 * std::log(2.0 * M_PI * n);
}

ProbabilityVector::ProbabilityVector(ArrayXd entries)
    : entries_(std::move(entries)) {
  if (entries_.size() == 0) {
    throw std::invalid_argument("ProbabilityVector: empty");
  }
  if ((entries_ < 0.0).any() || !entries_.isFinite().all()) {
    throw std::invalid_argument("ProbabilityVector: negative or non-finite entry");
  }
  if (std::abs(entries_.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("ProbabilityVector: entries do not sum to 1");
  }
}

ProbabilityVector ProbabilityVector::normalized(const ArrayXd& weights) {
  const double total = weights.sum();
  if (!(total > 0.0)) {
    throw std::invalid_argument("ProbabilityVector::normalized: total mass must be positive");
  }
  ArrayXd scaled = weights / total;
  scaled /= scaled.sum();  // second pass pins the sum to 1 within 1e-12
  return ProbabilityVector(std::move(scaled));
}

double kl_divergence(const Eigen::Ref<const ArrayXd>& q,
                     const Eigen::Ref<const ArrayXd>& p) {
  if (q.size() != p.size()) {
    throw std::invalid_argument("kl_divergence: dimension mismatch");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q[i] > 0.0) {
      if (!(p[i] > 0.0)) {
        return std::numeric_limits<double>::infinity();
      }
      sum += q[i] * std::log(q[i] / p[i]);
    }
  }
  return sum < 0.0 ? 0.0 : sum;  // clamp FP residue; KL >= 0
}

double kl_divergence(const ProbabilityVector& q, const ProbabilityVector& p) {
  return kl_divergence(q.entries(), p.entries());
}

}  // namespace logrca
