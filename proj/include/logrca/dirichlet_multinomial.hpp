#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "logrca/numerics.hpp"

namespace logrca {

// Per-category event counts for one observation unit (e.g. one zone-day).
// Counts are held as reals so the predictive can be evaluated on the
// continuous relaxation (non-integer mode); ordinary use stores integers.
class CountVector {
 public:
  CountVector(std::vector<std::string> category_ids, ArrayXd counts);

  static CountVector from_pairs(
      const std::vector<std::pair<std::string, double>>& items);

  const std::vector<std::string>& category_ids() const { return ids_; }
  const ArrayXd& counts() const { return counts_; }
  double total() const { return total_; }
  Eigen::Index size() const { return counts_.size(); }

  // Observed frequencies q_i = k_i / k; requires total > 0.
  ArrayXd frequencies() const;

 private:
  std::vector<std::string> ids_;
  ArrayXd counts_;
  double total_;
};

// Posterior concentration vector over categories. Immutable; update()
// returns a new value. prior_scale is the mass given to a category the
// first time it is seen (add-one prior by default).
class DirichletPosterior {
 public:
  DirichletPosterior(std::vector<std::string> category_ids, ArrayXd alpha,
                     double prior_scale = 1.0);

  // Prior-only posterior: alpha_i = prior_scale for every listed category.
  static DirichletPosterior uniform_prior(std::vector<std::string> category_ids,
                                          double prior_scale = 1.0);

  const std::vector<std::string>& category_ids() const { return ids_; }
  const ArrayXd& alpha() const { return alpha_; }
  double alpha_total() const { return alpha_total_; }
  double prior_scale() const { return prior_scale_; }
  Eigen::Index size() const { return alpha_.size(); }
  int index_of(const std::string& id) const;  // -1 if absent

  // Mode frequencies p_i = alpha_i / alpha_total.
  ArrayXd mode_frequencies() const { return alpha_ / alpha_total_; }

 private:
  std::vector<std::string> ids_;
  ArrayXd alpha_;
  double alpha_total_;
  double prior_scale_;
  std::unordered_map<std::string, int> index_;
};

// Separable decomposition of the log-likelihood deficit vs the mode.
struct ImpactVector {
  std::vector<std::string> category_ids;
  ArrayXd impacts;             // each <= 0
  double deficiency = 0.0;     // sum of impacts
  double mode_log_likelihood = 0.0;
};

// Conjugate accumulation: alpha_i += k_i. Categories in `counts` that the
// posterior has not seen are added with alpha = prior_scale first.
DirichletPosterior update(const DirichletPosterior& posterior,
                          const CountVector& counts);

// Extends the posterior with unseen count categories (alpha = prior_scale)
// and reorders counts onto the posterior's category list (zeros where the
// day had no events). Scoring ops below require pre-aligned inputs.
std::pair<DirichletPosterior, CountVector> align(
    const DirichletPosterior& posterior, const CountVector& counts);

// ln of the Dirichlet-Multinomial posterior predictive:
// ln[ G(k+1)/prod G(k_i+1) * G(a)/prod G(a_i) * prod G(k_i+a_i)/G(k+a) ].
double exact_log_predictive(const DirichletPosterior& posterior,
                            const CountVector& counts);

// Stirling form: the three-entropy-term approximation. Requires every
// k_i > 0; callers with zero counts must use the exact form.
double stirling_log_predictive(const DirichletPosterior& posterior,
                               const CountVector& counts);

// Real-valued predictive mode: k_i = (k / alpha_total) * alpha_i.
ArrayXd dm_mode(const DirichletPosterior& posterior, double total);

// Laplace expansion around the mode:
// exact-at-mode - (1/2) (a/(a+k)) k sum_i (q_i - p_i)^2 / p_i.
double laplace_log_predictive(const DirichletPosterior& posterior,
                              const CountVector& counts);

// Per-category impacts I(k_i) = -(1/2) (a/(a+k)) k (q_i - p_i)^2 / p_i.
ImpactVector impacts(const DirichletPosterior& posterior,
                     const CountVector& counts);

}  // namespace logrca
