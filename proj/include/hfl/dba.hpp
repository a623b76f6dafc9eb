#pragma once

#include <vector>

#include "hfl/core.hpp"

namespace hfl {

/// Optimal shares for one edge: the min-max completion time mu and the
/// per-user share column. At the optimum every member's latency is tight at
/// mu, so theta_m = beta_m / (mu - alpha_m) and the shares sum to 1.
struct EdgeAllocation {
  double mu = 0.0;            // device-to-edge completion time; 0 for an empty edge
  std::vector<double> theta;  // length M, zero for non-members
  bool converged = true;      // false when the iteration budget ran out first
  int iterations = 0;         // bisection steps taken
};

/// Min-max latency bandwidth shares for edge `edge` serving `members`.
///
/// Solves sum_m beta_m / (mu - alpha_m) = 1 on (max alpha, max alpha + sum beta]
/// by bisection; the left endpoint diverges and the right endpoint is always
/// feasible, and the function is strictly decreasing in between, so the root
/// is unique. Runs at most max_iter steps and stops early once the bracket
/// cannot shrink. The returned mu is always on the feasible side (share sum
/// <= 1).
EdgeAllocation mlbs_solve(const Scenario& s, int edge, const std::vector<int>& members,
                          int max_iter = 200);

/// Per-edge optimal shares for a whole assignment. The per-edge problems are
/// independent; `parallel` solves them with OpenMP when available.
BandwidthAllocation dba_allocation(const Scenario& s, const Assignment& a, int max_iter = 200,
                                   bool parallel = false);

}  // namespace hfl
