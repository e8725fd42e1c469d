#include "logrca/dirichlet_multinomial.hpp"

#include <stdexcept>
#include <unordered_set>

namespace logrca {

namespace {

void require_unique(const std::vector<std::string>& ids, const char* who) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument(std::string(who) + ": duplicate category '" + id + "'");
    }
  }
}

void require_aligned(const DirichletPosterior& posterior,
                     const CountVector& counts, const char* who) {
  if (posterior.category_ids() != counts.category_ids()) {
    throw std::invalid_argument(std::string(who) +
                                ": category mismatch; align() the inputs first");
  }
}

}  // namespace

CountVector::CountVector(std::vector<std::string> category_ids, ArrayXd counts)
    : ids_(std::move(category_ids)), counts_(std::move(counts)) {
  if (static_cast<Eigen::Index>(ids_.size()) != counts_.size()) {
    throw std::invalid_argument("CountVector: ids/counts size mismatch");
  }
  require_unique(ids_, "CountVector");
  if ((counts_ < 0.0).any() || !counts_.isFinite().all()) {
    throw std::domain_error("CountVector: counts must be finite and >= 0");
  }
  total_ = counts_.sum();
}

CountVector CountVector::from_pairs(
    const std::vector<std::pair<std::string, double>>& items) {
  std::vector<std::string> ids;
  ArrayXd counts(static_cast<Eigen::Index>(items.size()));
  ids.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    ids.push_back(items[i].first);
    counts[static_cast<Eigen::Index>(i)] = items[i].second;
  }
  return CountVector(std::move(ids), std::move(counts));
}

ArrayXd CountVector::frequencies() const {
  if (!(total_ > 0.0)) {
    throw std::domain_error("CountVector::frequencies: total must be > 0");
  }
  return counts_ / total_;
}

DirichletPosterior::DirichletPosterior(std::vector<std::string> category_ids,
                                       ArrayXd alpha, double prior_scale)
    : ids_(std::move(category_ids)),
      alpha_(std::move(alpha)),
      prior_scale_(prior_scale) {
  if (static_cast<Eigen::Index>(ids_.size()) != alpha_.size()) {
    throw std::invalid_argument("DirichletPosterior: ids/alpha size mismatch");
  }
  if (alpha_.size() == 0) {
    throw std::invalid_argument("DirichletPosterior: empty category set");
  }
  require_unique(ids_, "DirichletPosterior");
  if ((alpha_ <= 0.0).any() || !alpha_.isFinite().all()) {
    throw std::domain_error("DirichletPosterior: alpha entries must be finite and > 0");
  }
  if (!(prior_scale_ > 0.0)) {
    throw std::domain_error("DirichletPosterior: prior_scale must be > 0");
  }
  alpha_total_ = alpha_.sum();
  index_.reserve(ids_.size());
  for (size_t i = 0; i < ids_.size(); ++i) {
    index_.emplace(ids_[i], static_cast<int>(i));
  }
}

DirichletPosterior DirichletPosterior::uniform_prior(
    std::vector<std::string> category_ids, double prior_scale) {
  ArrayXd alpha = ArrayXd::Constant(
      static_cast<Eigen::Index>(category_ids.size()), prior_scale);
  return DirichletPosterior(std::move(category_ids), std::move(alpha), prior_scale);
}

int DirichletPosterior::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

DirichletPosterior update(const DirichletPosterior& posterior,
                          const CountVector& counts) {
  auto [extended, aligned] = align(posterior, counts);
  ArrayXd alpha = extended.alpha() + aligned.counts();
  return DirichletPosterior(extended.category_ids(), std::move(alpha),
                            posterior.prior_scale());
}

std::pair<DirichletPosterior, CountVector> align(
    const DirichletPosterior& posterior, const CountVector& counts) {
  std::vector<std::string> ids = posterior.category_ids();
  std::vector<double> alpha(posterior.alpha().data(),
                            posterior.alpha().data() + posterior.size());
  for (const auto& id : counts.category_ids()) {
    if (posterior.index_of(id) < 0) {
      ids.push_back(id);
      alpha.push_back(posterior.prior_scale());
    }
  }

  ArrayXd alpha_arr(static_cast<Eigen::Index>(alpha.size()));
  for (size_t i = 0; i < alpha.size(); ++i) {
    alpha_arr[static_cast<Eigen::Index>(i)] = alpha[i];
  }
  DirichletPosterior extended(ids, std::move(alpha_arr), posterior.prior_scale());

  ArrayXd aligned_counts = ArrayXd::Zero(extended.size());
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    aligned_counts[extended.index_of(counts.category_ids()[i])] = counts.counts()[i];
  }
  return {std::move(extended), CountVector(std::move(ids), std::move(aligned_counts))};
}

double exact_log_predictive(const DirichletPosterior& posterior,
                            const CountVector& counts) {
  require_aligned(posterior, counts, "exact_log_predictive");
  const ArrayXd& k = counts.counts();
  const ArrayXd& a = posterior.alpha();
  const double k_total = counts.total();
  const double a_total = posterior.alpha_total();

  double sum = log_gamma(k_total + 1.0) + log_gamma(a_total) -
               log_gamma(k_total + a_total);
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    sum += log_gamma(k[i] + a[i]) - log_gamma(k[i] + 1.0) - log_gamma(a[i]);
  }
  return sum;
}

double stirling_log_predictive(const DirichletPosterior& posterior,
                               const CountVector& counts) {
  require_aligned(posterior, counts, "stirling_log_predictive");
  if ((counts.counts() <= 0.0).any()) {
    throw std::domain_error(
        "stirling_log_predictive: requires every count > 0; "
        "use the exact form for zero counts");
  }
  const double k = counts.total();
  const double a = posterior.alpha_total();
  const ArrayXd q = counts.counts() / k;
  const ArrayXd p = posterior.alpha() / a;
  const ArrayXd m = (counts.counts() + posterior.alpha()) / (k + a);
  return -k * (q * q.log()).sum() - a * (p * p.log()).sum() +
         (k + a) * (m * m.log()).sum();
}

ArrayXd dm_mode(const DirichletPosterior& posterior, double total) {
  if (!(total > 0.0)) {
    throw std::domain_error("dm_mode: total must be > 0");
  }
  return (total / posterior.alpha_total()) * posterior.alpha();
}

namespace {

// Shared quadratic of Lemma-1 form: -(1/2)(a/(a+k)) k (q_i - p_i)^2 / p_i.
ArrayXd quadratic_impacts(const DirichletPosterior& posterior,
                          const CountVector& counts) {
  const double k = counts.total();
  if (!(k > 0.0)) {
    throw std::domain_error("impacts: requires total count > 0");
  }
  const double a = posterior.alpha_total();
  const ArrayXd q = counts.frequencies();
  const ArrayXd p = posterior.mode_frequencies();
  const double shrink = a / (a + k);
  return -0.5 * shrink * k * (q - p).square() / p;
}

double exact_at_mode(const DirichletPosterior& posterior, double total) {
  CountVector mode_counts(posterior.category_ids(), dm_mode(posterior, total));
  return exact_log_predictive(posterior, mode_counts);
}

}  // namespace

double laplace_log_predictive(const DirichletPosterior& posterior,
                              const CountVector& counts) {
  require_aligned(posterior, counts, "laplace_log_predictive");
  return exact_at_mode(posterior, counts.total()) +
         quadratic_impacts(posterior, counts).sum();
}

ImpactVector impacts(const DirichletPosterior& posterior,
                     const CountVector& counts) {
  require_aligned(posterior, counts, "impacts");
  ImpactVector out;
  out.category_ids = posterior.category_ids();
  out.impacts = quadratic_impacts(posterior, counts);
  out.deficiency = out.impacts.sum();
  out.mode_log_likelihood = exact_at_mode(posterior, counts.total());
  return out;
}

}  // namespace logrca
