#include "hfl/dba.hpp"

#include <algorithm>
#include <cmath>

namespace hfl {

namespace {

double share_sum(const Scenario& s, int edge, const std::vector<int>& members, double mu) {
  double g = 0.0;
  for (int m : members) g += s.beta_at(m, edge) / (mu - s.alpha[m]);
  return g;
}

}  // namespace

EdgeAllocation mlbs_solve(const Scenario& s, int edge, const std::vector<int>& members,
                          int max_iter) {
  if (max_iter < 1) throw std::invalid_argument("mlbs_solve: max_iter must be >= 1");
  EdgeAllocation out;
  out.theta.assign(static_cast<std::size_t>(s.num_users), 0.0);
  if (members.empty()) return out;  // mu = 0, no shares

  if (members.size() == 1) {
    const int m = members.front();
    out.mu = s.alpha[m] + s.beta_at(m, edge);
    out.theta[m] = 1.0;
    return out;
  }

  double alpha_max = 0.0;
  double beta_sum = 0.0;
  for (int m : members) {
    alpha_max = std::max(alpha_max, s.alpha[m]);
    beta_sum += s.beta_at(m, edge);
  }

  double lo = alpha_max + 1e-9 * std::max(1.0, alpha_max);
  double hi = alpha_max + beta_sum;  // share_sum(hi) <= 1 always
  if (share_sum(s, edge, members, lo) <= 1.0) {
    hi = lo;  // degenerate bracket, lo is already feasible
  }

  int it = 0;
  bool exhausted = false;
  while (lo < hi) {
    if (it >= max_iter) {
      exhausted = true;
      break;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at double resolution
    if (share_sum(s, edge, members, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }

  out.mu = hi;
  out.iterations = it;
  out.converged = !exhausted || (hi - lo) < 1e-12 * hi;
  for (int m : members) out.theta[m] = s.beta_at(m, edge) / (out.mu - s.alpha[m]);
  return out;
}

BandwidthAllocation dba_allocation(const Scenario& s, const Assignment& a, int max_iter,
                                   bool parallel) {
  const auto groups = a.groups(s.num_edges);
  auto b = BandwidthAllocation::zeros(s.num_users, s.num_edges);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int n = 0; n < s.num_edges; ++n) {
    const EdgeAllocation ea = mlbs_solve(s, n, groups[n], max_iter);
    for (int m : groups[n]) b.at(m, n) = ea.theta[m];
  }
  return b;
}

}  // namespace hfl
