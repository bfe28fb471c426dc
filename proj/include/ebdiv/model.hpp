#pragma once

#include <string_view>

#include "ebdiv/count_vector.hpp"

namespace ebdiv {

/// Multinomial maximum likelihood estimate: proportions x_j / n.
/// Throws DataError when n == 0 (no individuals observed).
CompositionEstimate mle_proportions(const CountVector& x);

/// Log marginal likelihood of the compound Dirichlet-Multinomial model with
/// a symmetric Dirichlet(eta) prior, evaluated entirely through log-gamma:
///
///   log L = lgamma(n+1) + lgamma(k*eta) - lgamma(n+k*eta)
///         + sum_j [lgamma(x_j+eta) - lgamma(x_j+1) - lgamma(eta)]
///
/// The multinomial coefficient is included, so exp of the result is the true
/// marginal probability of the counts. Throws NumericError if any log-gamma
/// term turns non-finite, naming the offending term.
double marginal_log_likelihood(double eta, const CountVector& x);

/// First derivative of the log marginal likelihood in eta, as harmonic sums:
///   l'(eta) = -sum_{m=0}^{n-1} k/(k*eta+m) + sum_j sum_{y=0}^{x_j-1} 1/(eta+y)
/// The inner sum is empty for x_j == 0.
double log_lik_gradient(double eta, const CountVector& x);

/// Second derivative:
///   l''(eta) = sum_{m=0}^{n-1} k^2/(k*eta+m)^2 - sum_j sum_{y=0}^{x_j-1} 1/(eta+y)^2
double log_lik_hessian(double eta, const CountVector& x);

struct EtaSolverOptions {
  double initial_eta = 1.0;
  double rel_tolerance = 1e-8;
  int max_iterations = 100;
  double eta_floor = 1e-6;
  double eta_ceiling = 1e6;
  // Converged requires |l'(eta)| <= gradient_tolerance * max(1, n/eta).
  double gradient_tolerance = 1e-6;
};

enum class EtaStatus {
  converged,
  floor_clamped,
  ceiling_clamped,
  flat_likelihood,
  max_iterations,
};

std::string_view to_string(EtaStatus s);
EtaStatus eta_status_from_string(std::string_view s);

struct EtaSolution {
  double eta = 0.0;
  int iterations = 0;
  bool converged = false;
  EtaStatus status = EtaStatus::max_iterations;
};

/// Maximizes the marginal likelihood over eta with safeguarded Newton-Raphson.
///
/// A log-spaced probe grid over [eta_floor, eta_ceiling] first classifies the
/// likelihood shape: if |l'| < 1e-10 at every probe the likelihood carries no
/// information about eta and the solver reports flat_likelihood with the
/// initial eta. A gradient that never changes sign sends the maximum to a
/// boundary (floor_clamped / ceiling_clamped). Otherwise Newton iterations run
/// inside the sign-change bracket, falling back to bisection whenever the
/// curvature is non-negative or a step would leave the bracket.
EtaSolution estimate_eta(const CountVector& x, const EtaSolverOptions& opts = {});

/// Posterior-mean estimate under the fitted symmetric Dirichlet prior:
///   p_j = (x_j + eta) / (n + k*eta)
/// Defined for n == 0 as well (pure prior mean 1/k).
CompositionEstimate eb_proportions(const CountVector& x, double eta);

/// Marginal prior variance of each composition coordinate:
///   Var[pi_j] = (k-1) / (k^2 (1 + k*eta))
double prior_marginal_variance(double eta, int k);

}  // namespace ebdiv
