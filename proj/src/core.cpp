#include "hfl/core.hpp"

#include <cmath>
#include <limits>

namespace hfl {

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

void Scenario::validate() const {
  if (num_users < 1) throw std::invalid_argument("scenario: num_users must be >= 1");
  if (num_edges < 1) throw std::invalid_argument("scenario: num_edges must be >= 1");
  const auto m = static_cast<std::size_t>(num_users);
  const auto n = static_cast<std::size_t>(num_edges);
  if (alpha.size() != m) throw std::invalid_argument("scenario: alpha must have one entry per user");
  if (beta.size() != m * n) throw std::invalid_argument("scenario: beta must be M x N");
  if (d2.size() != n) throw std::invalid_argument("scenario: d2 must have one entry per edge");
  if (!snr.empty() && snr.size() != m * n)
    throw std::invalid_argument("scenario: snr must be M x N when present");
  if (!all_finite(alpha) || !all_finite(beta) || !all_finite(d2))
    throw std::invalid_argument("scenario: all entries must be finite");
  for (double x : alpha)
    if (x < 0.0) throw std::invalid_argument("scenario: alpha entries must be >= 0");
  for (double x : beta)
    if (x <= 0.0) throw std::invalid_argument("scenario: beta entries must be > 0");
  for (double x : d2)
    if (x < 0.0) throw std::invalid_argument("scenario: d2 entries must be >= 0");
}

std::vector<std::vector<int>> Assignment::groups(int num_edges) const {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(num_edges));
  for (int m = 0; m < num_users(); ++m) g[edge_of[m]].push_back(m);
  return g;
}

std::vector<int> Assignment::loads(int num_edges) const {
  std::vector<int> c(static_cast<std::size_t>(num_edges), 0);
  for (int e : edge_of) ++c[e];
  return c;
}

double device_delay_eba(const Scenario& s, const Assignment& a, int m) {
  if (m < 0 || m >= s.num_users) throw std::invalid_argument("device_delay_eba: user index out of range");
  const int n = a.edge_of[m];
  const auto loads = a.loads(s.num_edges);
  return member_delay(s.alpha[m], loads[n], s.beta_at(m, n));
}

double round_latency_eba(const Scenario& s, const Assignment& a) {
  const auto loads = a.loads(s.num_edges);
  std::vector<double> edge_max(static_cast<std::size_t>(s.num_edges),
                               -std::numeric_limits<double>::infinity());
  for (int m = 0; m < s.num_users; ++m) {
    const int n = a.edge_of[m];
    const double d = member_delay(s.alpha[m], loads[n], s.beta_at(m, n));
    if (d > edge_max[n]) edge_max[n] = d;
  }
  double h = 0.0;
  for (int n = 0; n < s.num_edges; ++n) {
    if (loads[n] == 0) continue;  // an unused edge imposes no cloud delay
    const double t = edge_max[n] + s.d2[n];
    if (t > h) h = t;
  }
  return h;
}

double round_latency_dba(const Scenario& s, const Assignment& a, const BandwidthAllocation& b) {
  double h = 0.0;
  bool any = false;
  for (int m = 0; m < s.num_users; ++m) {
    const int n = a.edge_of[m];
    const double theta = b.at(m, n);
    if (theta <= 0.0)
      throw std::invalid_argument("round_latency_dba: assigned user with nonpositive share");
    const double t = s.alpha[m] + s.beta_at(m, n) / theta + s.d2[n];
    if (!any || t > h) {
      h = t;
      any = true;
    }
  }
  return h;
}

std::pair<int, int> critical_path(const Scenario& s, const Assignment& a,
                                  const BandwidthAllocation& b) {
  double best = -std::numeric_limits<double>::infinity();
  std::pair<int, int> arg{-1, -1};
  for (int m = 0; m < s.num_users; ++m) {
    const int n = a.edge_of[m];
    const double theta = b.at(m, n);
    if (theta <= 0.0)
      throw std::invalid_argument("critical_path: assigned user with nonpositive share");
    const double t = s.alpha[m] + s.beta_at(m, n) / theta + s.d2[n];
    if (t > best) {
      best = t;
      arg = {m, n};
    }
  }
  return arg;
}

std::vector<double> beta_from_physical(const PhysicalParams& p) {
  const int num_users = static_cast<int>(p.tx_power.size());
  const int num_edges = static_cast<int>(p.bandwidth.size());
  if (p.model_bits <= 0.0 || p.noise_psd <= 0.0)
    throw std::invalid_argument("beta_from_physical: L and N0 must be > 0");
  if (p.channel_gain.size() != static_cast<std::size_t>(num_users) * num_edges)
    throw std::invalid_argument("beta_from_physical: channel_gain must be M x N");
  for (double b : p.bandwidth)
    if (b <= 0.0) throw std::invalid_argument("beta_from_physical: bandwidth must be > 0");
  for (double q : p.tx_power)
    if (q <= 0.0) throw std::invalid_argument("beta_from_physical: tx_power must be > 0");
  for (double g : p.channel_gain)
    if (g <= 0.0) throw std::invalid_argument("beta_from_physical: channel_gain must be > 0");

  std::vector<double> beta(static_cast<std::size_t>(num_users) * num_edges);
  for (int m = 0; m < num_users; ++m) {
    for (int n = 0; n < num_edges; ++n) {
      const double snr = p.tx_power[m] * p.channel_gain[static_cast<std::size_t>(m) * num_edges + n] /
                         (p.bandwidth[n] * p.noise_psd);
      beta[static_cast<std::size_t>(m) * num_edges + n] =
          p.model_bits / (p.bandwidth[n] * std::log2(1.0 + snr));
    }
  }
  return beta;
}

Scenario scenario_from_physical(std::vector<double> alpha, const PhysicalParams& p,
                                std::vector<double> d2) {
  Scenario s;
  s.num_users = static_cast<int>(p.tx_power.size());
  s.num_edges = static_cast<int>(p.bandwidth.size());
  s.alpha = std::move(alpha);
  s.beta = beta_from_physical(p);
  s.d2 = std::move(d2);
  s.snr.resize(static_cast<std::size_t>(s.num_users) * s.num_edges);
  for (int m = 0; m < s.num_users; ++m) {
    for (int n = 0; n < s.num_edges; ++n) {
      s.snr[static_cast<std::size_t>(m) * s.num_edges + n] =
          p.tx_power[m] * p.channel_gain[static_cast<std::size_t>(m) * s.num_edges + n] /
          (p.bandwidth[n] * p.noise_psd);
    }
  }
  s.validate();
  return s;
}

BandwidthAllocation eba_allocation(const Scenario& s, const Assignment& a) {
  const auto loads = a.loads(s.num_edges);
  auto b = BandwidthAllocation::zeros(s.num_users, s.num_edges);
  for (int m = 0; m < s.num_users; ++m) {
    const int n = a.edge_of[m];
    b.at(m, n) = 1.0 / static_cast<double>(loads[n]);
  }
  return b;
}

std::vector<int> assignment_to_matrix(const Assignment& a, int num_edges) {
  std::vector<int> x(static_cast<std::size_t>(a.num_users()) * num_edges, 0);
  for (int m = 0; m < a.num_users(); ++m) x[static_cast<std::size_t>(m) * num_edges + a.edge_of[m]] = 1;
  return x;
}

Assignment matrix_to_assignment(const std::vector<int>& x, int num_users, int num_edges) {
  if (x.size() != static_cast<std::size_t>(num_users) * num_edges)
    throw std::invalid_argument("matrix_to_assignment: matrix must be M x N");
  Assignment a;
  a.edge_of.assign(static_cast<std::size_t>(num_users), -1);
  for (int m = 0; m < num_users; ++m) {
    int ones = 0;
    for (int n = 0; n < num_edges; ++n) {
      const int v = x[static_cast<std::size_t>(m) * num_edges + n];
      if (v != 0 && v != 1)
        throw std::invalid_argument("matrix_to_assignment: entries must be 0 or 1");
      if (v == 1) {
        ++ones;
        a.edge_of[m] = n;
      }
    }
    if (ones != 1)
      throw std::invalid_argument("matrix_to_assignment: each row must contain exactly one 1");
  }
  return a;
}

}  // namespace hfl
