#pragma once

// Test-only numerical oracle: evaluates the Dirichlet-Multinomial marginal
// probability for k = 3 by adaptive 2-D tanh-sinh quadrature of the
// multinomial-times-prior integrand over the simplex, independently of the
// library's closed-form log-gamma path.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ebdiv/count_vector.hpp"

namespace oracle {

struct TanhSinhNode {
  double log_x;       // log sigma(2s), x in (0,1)
  double log_xc;      // log (1-x)
  double log_weight;  // log dx/dt
};

inline double log_sigmoid(double z) {
  return z < 0.0 ? z - std::log1p(std::exp(z)) : -std::log1p(std::exp(-z));
}

inline double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

inline std::vector<TanhSinhNode> tanh_sinh_nodes(double h, double t_max) {
  std::vector<TanhSinhNode> nodes;
  const double half_pi = std::acos(-1.0) / 2.0;
  for (double t = -t_max; t <= t_max + 1e-12; t += h) {
    const double s = half_pi * std::sinh(t);
    TanhSinhNode node;
    node.log_x = log_sigmoid(2.0 * s);
    node.log_xc = log_sigmoid(-2.0 * s);
    node.log_weight = std::log(half_pi / 2.0) + std::log(std::cosh(t)) - 2.0 * log_cosh(s);
    nodes.push_back(node);
  }
  return nodes;
}

// Exponent * log, with the 0 * (-inf) corner defined as 0.
inline double pow_term(double exponent, double log_base) {
  return exponent == 0.0 ? 0.0 : exponent * log_base;
}

/// Marginal probability of counts x under Multinomial(n, pi) compounded with
/// a symmetric Dirichlet(eta) prior, integrated numerically over the
/// 2-simplex via pi1 = v, pi2 = (1-v) u, pi3 = (1-v)(1-u).
inline double dm_marginal_by_quadrature(double eta, const ebdiv::CountVector& x,
                                        double rel_tol = 1e-9) {
  if (x.k() != 3) {
    throw std::invalid_argument("quadrature oracle handles k = 3 only");
  }
  const double n = static_cast<double>(x.n());
  const double x1 = static_cast<double>(x[0]);
  const double x2 = static_cast<double>(x[1]);
  const double x3 = static_cast<double>(x[2]);
  const double log_norm = std::lgamma(n + 1.0) - std::lgamma(x1 + 1.0) - std::lgamma(x2 + 1.0) -
                          std::lgamma(x3 + 1.0) + std::lgamma(3.0 * eta) -
                          3.0 * std::lgamma(eta);
  const double e1 = x1 + eta - 1.0;        // exponent of pi1
  const double e2 = x2 + eta - 1.0;        // exponent of pi2
  const double e3 = x3 + eta - 1.0;        // exponent of pi3
  const double t_max = 6.0;

  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int level = 4; level <= 9; ++level) {
    const double h = 1.0 / static_cast<double>(1 << level);
    const auto nodes = tanh_sinh_nodes(h, t_max);

    // Additive split of the log integrand between the v and u directions;
    // the quadrature still sums exp over the full 2-D tensor grid.
    std::vector<double> v_part(nodes.size()), u_part(nodes.size());
    double u_max = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      v_part[j] = nodes[j].log_weight + pow_term(e1, nodes[j].log_x) +
                  pow_term(e2 + e3 + 1.0, nodes[j].log_xc);  // +1: jacobian (1-v)
      u_part[j] = nodes[j].log_weight + pow_term(e2, nodes[j].log_x) +
                  pow_term(e3, nodes[j].log_xc);
      u_max = std::max(u_max, u_part[j]);
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (v_part[i] + u_max + log_norm < -745.0) continue;  // whole row underflows
      double row = 0.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        row += std::exp(v_part[i] + u_part[j] + log_norm);
      }
      sum += row;
    }
    const double estimate = sum * h * h;
    if (level > 4 && std::abs(estimate - previous) <= rel_tol * std::abs(estimate)) {
      return estimate;
    }
    previous = estimate;
  }
  return previous;
}

}  // namespace oracle
