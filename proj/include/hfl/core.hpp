#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfl {

/// Thrown when an instance exceeds a hard enumeration guard.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a solver is called with an edge count it does not support.
struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable problem instance: per-user compute delays, per-user-per-edge
/// unit upload times and per-edge cloud upload delays, all in abstract time
/// units.
struct Scenario {
  int num_users = 0;          // M
  int num_edges = 0;          // N
  std::vector<double> alpha;  // M local-update times, >= 0
  std::vector<double> beta;   // M x N row-major full-bandwidth upload times, > 0
  std::vector<double> d2;     // N edge-to-cloud upload times, >= 0
  std::vector<double> snr;    // optional M x N, filled when built from radio
                              // parameters; empty otherwise

  double beta_at(int m, int n) const { return beta[static_cast<std::size_t>(m) * num_edges + n]; }
  double snr_at(int m, int n) const { return snr[static_cast<std::size_t>(m) * num_edges + n]; }
  bool has_snr() const { return !snr.empty(); }

  /// Throws std::invalid_argument if any field violates the instance
  /// contract (sizes, positivity, finiteness).
  void validate() const;
};

/// Radio-layer parameters from which unit upload times are derived.
struct PhysicalParams {
  double model_bits = 0.0;           // L, bits per local model
  std::vector<double> bandwidth;     // B_n in Hz, one per edge
  std::vector<double> tx_power;      // p_m in W, one per user
  std::vector<double> channel_gain;  // M x N row-major, dimensionless
  double noise_psd = 0.0;            // N0 in W/Hz
};

/// A partition of users across edges, stored as a dense user -> edge map.
struct Assignment {
  std::vector<int> edge_of;  // size M, entries in [0, N)

  int num_users() const { return static_cast<int>(edge_of.size()); }

  static Assignment all_on(int num_users, int edge) {
    return Assignment{std::vector<int>(static_cast<std::size_t>(num_users), edge)};
  }

  /// Member lists A_n, ascending user index within each edge.
  std::vector<std::vector<int>> groups(int num_edges) const;

  /// Per-edge user counts |A_n|.
  std::vector<int> loads(int num_edges) const;

  bool operator==(const Assignment&) const = default;
};

/// Fractional bandwidth shares theta, M x N. Zero where a user is not
/// assigned, positive where it is, column sums at most 1.
struct BandwidthAllocation {
  int num_users = 0;
  int num_edges = 0;
  std::vector<double> theta;  // row-major M x N

  double at(int m, int n) const { return theta[static_cast<std::size_t>(m) * num_edges + n]; }
  double& at(int m, int n) { return theta[static_cast<std::size_t>(m) * num_edges + n]; }

  static BandwidthAllocation zeros(int num_users, int num_edges) {
    BandwidthAllocation b;
    b.num_users = num_users;
    b.num_edges = num_edges;
    b.theta.assign(static_cast<std::size_t>(num_users) * num_edges, 0.0);
    return b;
  }
};

/// Outcome of one solver run.
struct SolveReport {
  std::string algorithm;
  double latency = 0.0;  // achieved round length h
  Assignment assignment;
  BandwidthAllocation allocation;
  std::uint64_t work = 0;  // elementary-operation counter, meaning per algorithm
};

/// Delay of one user on an edge shared by `load` users under equal shares.
/// Every evaluator and solver funnels through this expression so that equal
/// inputs produce bit-identical latencies across algorithms.
inline double member_delay(double alpha, int load, double beta) {
  return alpha + static_cast<double>(load) * beta;
}

/// Local update plus upload time of user m under equal bandwidth shares.
double device_delay_eba(const Scenario& s, const Assignment& a, int m);

/// Round length under equal bandwidth allocation: slowest edge completion
/// plus that edge's cloud delay. Edges with no users contribute nothing.
double round_latency_eba(const Scenario& s, const Assignment& a);

/// Round length under an explicit share matrix: max over assigned pairs of
/// alpha + beta/theta + d2. Throws std::invalid_argument if an assigned user
/// has a nonpositive share.
double round_latency_dba(const Scenario& s, const Assignment& a, const BandwidthAllocation& b);

/// The assigned (user, edge) pair attaining the round length, ties broken by
/// smallest user then smallest edge.
std::pair<int, int> critical_path(const Scenario& s, const Assignment& a,
                                  const BandwidthAllocation& b);

/// Unit upload times from radio parameters:
/// beta = L / (B_n * log2(1 + p_m g_mn / (B_n N0))), row-major M x N.
std::vector<double> beta_from_physical(const PhysicalParams& p);

/// Scenario whose beta (and snr table) derive from radio parameters.
Scenario scenario_from_physical(std::vector<double> alpha, const PhysicalParams& p,
                                std::vector<double> d2);

/// Equal-share allocation for an assignment: theta = 1/|A_n| where assigned.
BandwidthAllocation eba_allocation(const Scenario& s, const Assignment& a);

/// Binary association matrix (row-major M x N, rows summing to 1).
std::vector<int> assignment_to_matrix(const Assignment& a, int num_edges);

/// Inverse of assignment_to_matrix. Throws std::invalid_argument when a row
/// does not contain exactly one 1.
Assignment matrix_to_assignment(const std::vector<int>& x, int num_users, int num_edges);

}  // namespace hfl
