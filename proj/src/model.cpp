#include "ebdiv/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ebdiv/errors.hpp"

namespace ebdiv {

namespace {

void require_positive_eta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("eta must be positive and finite, got " + std::to_string(eta));
  }
}

double checked_lgamma(double arg, const char* term) {
  double v = std::lgamma(arg);
  if (!std::isfinite(v)) {
    throw NumericError(std::string("marginal log-likelihood overflow in term ") + term +
                       " with argument " + std::to_string(arg));
  }
  return v;
}

}  // namespace

CompositionEstimate mle_proportions(const CountVector& x) {
  if (x.n() == 0) {
    throw DataError("no individuals observed: maximum likelihood proportions undefined");
  }
  CompositionEstimate est;
  est.method = Estimator::ml;
  est.proportions.reserve(static_cast<std::size_t>(x.k()));
  const double n = static_cast<double>(x.n());
  for (std::int64_t c : x.counts()) {
    est.proportions.push_back(static_cast<double>(c) / n);
  }
  return est;
}

double marginal_log_likelihood(double eta, const CountVector& x) {
  require_positive_eta(eta);
  const double k = static_cast<double>(x.k());
  const double n = static_cast<double>(x.n());
  double ll = checked_lgamma(n + 1.0, "logGamma(n+1)");
  ll += checked_lgamma(k * eta, "logGamma(k*eta)");
  ll -= checked_lgamma(n + k * eta, "logGamma(n+k*eta)");
  const double lg_eta = checked_lgamma(eta, "logGamma(eta)");
  for (std::int64_t c : x.counts()) {
    const double xj = static_cast<double>(c);
    ll += checked_lgamma(xj + eta, "logGamma(x_j+eta)");
    ll -= checked_lgamma(xj + 1.0, "logGamma(x_j+1)");
    ll -= lg_eta;
  }
  if (!std::isfinite(ll)) {
    throw NumericError("marginal log-likelihood is non-finite after summation");
  }
  return ll;
}

double log_lik_gradient(double eta, const CountVector& x) {
  require_positive_eta(eta);
  const double k = static_cast<double>(x.k());
  const double keta = k * eta;
  double g = 0.0;
  for (std::int64_t m = 0; m < x.n(); ++m) {
    g -= k / (keta + static_cast<double>(m));
  }
  for (std::int64_t c : x.counts()) {
    for (std::int64_t y = 0; y < c; ++y) {  // empty when x_j == 0
      g += 1.0 / (eta + static_cast<double>(y));
    }
  }
  return g;
}

double log_lik_hessian(double eta, const CountVector& x) {
  require_positive_eta(eta);
  const double k = static_cast<double>(x.k());
  const double keta = k * eta;
  double h = 0.0;
  for (std::int64_t m = 0; m < x.n(); ++m) {
    const double d = keta + static_cast<double>(m);
    h += (k * k) / (d * d);
  }
  for (std::int64_t c : x.counts()) {
    for (std::int64_t y = 0; y < c; ++y) {
      const double d = eta + static_cast<double>(y);
      h -= 1.0 / (d * d);
    }
  }
  return h;
}

std::string_view to_string(EtaStatus s) {
  switch (s) {
    case EtaStatus::converged: return "converged";
    case EtaStatus::floor_clamped: return "floor_clamped";
    case EtaStatus::ceiling_clamped: return "ceiling_clamped";
    case EtaStatus::flat_likelihood: return "flat_likelihood";
    case EtaStatus::max_iterations: return "max_iterations";
  }
  return "unknown";
}

EtaStatus eta_status_from_string(std::string_view s) {
  if (s == "converged") return EtaStatus::converged;
  if (s == "floor_clamped") return EtaStatus::floor_clamped;
  if (s == "ceiling_clamped") return EtaStatus::ceiling_clamped;
  if (s == "flat_likelihood") return EtaStatus::flat_likelihood;
  if (s == "max_iterations") return EtaStatus::max_iterations;
  throw std::invalid_argument("unknown eta status: " + std::string(s));
}

namespace {

constexpr double kFlatGradientThreshold = 1e-10;

void validate_options(const EtaSolverOptions& o) {
  if (!(o.eta_floor > 0.0) || !(o.eta_floor < o.initial_eta) ||
      !(o.initial_eta < o.eta_ceiling)) {
    throw std::invalid_argument("eta solver needs 0 < eta_floor < initial_eta < eta_ceiling");
  }
  if (!(o.rel_tolerance > 0.0) || o.max_iterations < 1 || !(o.gradient_tolerance > 0.0)) {
    throw std::invalid_argument("eta solver tolerances must be positive, max_iterations >= 1");
  }
}

std::vector<double> probe_grid(const EtaSolverOptions& o) {
  std::vector<double> grid;
  grid.push_back(o.eta_floor);
  const double ratio = o.eta_ceiling / o.eta_floor;
  const int interior = 11;
  for (int i = 1; i <= interior; ++i) {
    grid.push_back(o.eta_floor * std::pow(ratio, static_cast<double>(i) / (interior + 1)));
  }
  grid.push_back(o.eta_ceiling);
  if (o.initial_eta > grid.front() && o.initial_eta < grid.back()) {
    grid.push_back(o.initial_eta);
    std::sort(grid.begin(), grid.end());
  }
  return grid;
}

}  // namespace

EtaSolution estimate_eta(const CountVector& x, const EtaSolverOptions& opts) {
  validate_options(opts);
  if (x.n() == 0) {
    throw DataError("no individuals observed: eta is not estimable");
  }

  const auto grid = probe_grid(opts);
  std::vector<double> grad(grid.size());
  bool flat = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grad[i] = log_lik_gradient(grid[i], x);
    if (std::abs(grad[i]) >= kFlatGradientThreshold) flat = false;
  }
  if (flat) {
    return {opts.initial_eta, 0, false, EtaStatus::flat_likelihood};
  }

  // Bracket a maximum: gradient positive on the left, non-positive on the right.
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grad[i] > 0.0 && grad[i + 1] <= 0.0) {
      lo = grid[i];
      hi = grid[i + 1];
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    if (grad.back() > 0.0) {
      return {opts.eta_ceiling, 0, false, EtaStatus::ceiling_clamped};
    }
    return {opts.eta_floor, 0, false, EtaStatus::floor_clamped};
  }

  double eta = (opts.initial_eta > lo && opts.initial_eta < hi) ? opts.initial_eta
                                                                : std::sqrt(lo * hi);
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const double g = log_lik_gradient(eta, x);
    if (g > 0.0) {
      lo = eta;
    } else {
      hi = eta;
    }
    const double h = log_lik_hessian(eta, x);
    double next = 0.0;
    bool newton_ok = false;
    if (h < 0.0) {
      next = eta - g / h;
      newton_ok = std::isfinite(next) && next > lo && next < hi;
    }
    if (!newton_ok) {
      next = 0.5 * (lo + hi);  // curvature wrong or step escaped: bisect
    }
    const double step = std::abs(next - eta);
    eta = next;
    if (step <= opts.rel_tolerance * eta) {
      const double scale = std::max(1.0, static_cast<double>(x.n()) / eta);
      if (std::abs(log_lik_gradient(eta, x)) <= opts.gradient_tolerance * scale) {
        return {eta, it, true, EtaStatus::converged};
      }
    }
  }
  return {eta, opts.max_iterations, false, EtaStatus::max_iterations};
}

CompositionEstimate eb_proportions(const CountVector& x, double eta) {
  require_positive_eta(eta);
  CompositionEstimate est;
  est.method = Estimator::eb;
  est.eta = eta;
  est.proportions.reserve(static_cast<std::size_t>(x.k()));
  const double denom = static_cast<double>(x.n()) + static_cast<double>(x.k()) * eta;
  for (std::int64_t c : x.counts()) {
    est.proportions.push_back((static_cast<double>(c) + eta) / denom);
  }
  return est;
}

double prior_marginal_variance(double eta, int k) {
  require_positive_eta(eta);
  if (k < 2) {
    throw std::invalid_argument("prior variance needs k >= 2");
  }
  const double kd = static_cast<double>(k);
  return (kd - 1.0) / (kd * kd * (1.0 + kd * eta));
}

}  // namespace ebdiv
