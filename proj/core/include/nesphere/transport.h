#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace nesphere {

/// Nonnegative coupling between two discrete distributions with prescribed
/// row/column marginals.
struct TransportPlan {
  Eigen::MatrixXd plan;
  Eigen::VectorXd source_marginal;
  Eigen::VectorXd target_marginal;

  /// Max absolute deviation of the plan's row/column sums from the
  /// prescribed marginals.
  double max_marginal_violation() const;
};

enum class TransportMode { kExact, kEntropic };

struct TransportConfig {
  TransportMode mode = TransportMode::kExact;
  /// Entropic regularization strength.
  double epsilon = 0.01;
  /// Sinkhorn iteration budget.
  int max_iter = 200000;
  /// Entropic convergence threshold on the marginal violation.
  double tol = 1e-9;
};

/// Minimizes sum_ij T_ij * cost_ij over the transport polytope.
///
/// Exact mode solves to optimality: square instances with uniform weights
/// go through a shortest-augmenting-path assignment solver, everything else
/// through the transportation simplex. Entropic mode runs log-domain
/// Sinkhorn with epsilon annealing and throws NumericError when the
/// marginal violation has not reached tol within max_iter iterations.
TransportPlan solve_transport(const Eigen::MatrixXd& cost,
                              const Eigen::VectorXd& source_weights,
                              const Eigen::VectorXd& target_weights,
                              const TransportConfig& config = {});

namespace detail {
/// Transportation simplex, exposed so tests can cross-check the assignment
/// fast path against the general pivoting route.
TransportPlan exact_transport_simplex(const Eigen::MatrixXd& cost,
                                      const Eigen::VectorXd& source_weights,
                                      const Eigen::VectorXd& target_weights);

/// Minimizing assignment for a square cost matrix (Jonker-Volgenant style
/// shortest augmenting paths). Returns sigma with row i matched to column
/// sigma[i].
std::vector<int> solve_assignment(const Eigen::MatrixXd& cost);
}  // namespace detail

}  // namespace nesphere
