#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hfl/core.hpp"

namespace hfl {

/// Per-k sorting tables used by the two-edge solver.
///
/// phi1[m] = alpha_m + k * beta_m1 and phi2[m] = alpha_m + (M-k) * beta_m2
/// are the completion times of user m when it lands on edge 1 with k users,
/// respectively edge 2 with M-k users. rank1 holds each user's primary rank
/// (1-based, decreasing phi1, ties to the smaller index) and by_rank the
/// inverse map: by_rank[r-1] is the user with primary rank r.
struct RankTables {
  int load_k = 0;
  std::vector<double> phi1;
  std::vector<double> phi2;
  std::vector<int> rank1;
  std::vector<int> by_rank;
};

RankTables build_rank_tables(const Scenario& s, int k);

/// Primary ranks gamma^(1)_k per user (1-based). Requires N == 2.
std::vector<int> primary_ranks(const Scenario& s, int k);

/// Exact solution of the class subproblem (|A_1| = k, minimum primary rank
/// in A_1 equal to r): the leader holds rank r and goes to edge 1; users
/// ranked below r are forced to edge 2; of the remaining candidates the
/// M-k-r+1 with the smallest phi2 join edge 2 and the rest join edge 1.
struct CandidatePartition {
  std::vector<int> edge1;  // Xi^(1), ascending user index
  std::vector<int> edge2;  // Xi^(2), ascending user index
  int leader = -1;         // s1(k, r)
};

/// A class (k, r) is populated only when at least k users hold rank >= r.
inline bool class_is_feasible(int num_users, int k, int r) { return k + r <= num_users + 1; }

/// The optimal partition of class (k, r), or nullopt when the class is empty.
std::optional<CandidatePartition> candidate_partition(const Scenario& s, int k, int r);

/// h(k, r): round length of the class-optimal partition.
double subproblem_latency(const Scenario& s, int k, int r, const CandidatePartition& part);

/// h(0): round length with every user on edge 2.
double h_zero(const Scenario& s);

struct TsdpOptions {
  bool parallel = true;  // sweep the k-loop with OpenMP when available
};

/// Exact two-edge association solver: twin sorting plus a dynamic-programming
/// sweep over the classes (k, r), O(M^3 log M) comparisons.
///
/// The serial and parallel paths evaluate identical cells with identical
/// float expressions and reduce in (k asc, r asc) order, so both return the
/// same latency, assignment and work counter bit for bit. SolveReport.work
/// counts key comparisons: both sorts, the h(0) scan and the per-class
/// zeta^(2) scans, plus the winning-class reconstruction.
SolveReport tsdp_solve(const Scenario& s, const TsdpOptions& opts = {});
SolveReport tsdp_solve_serial(const Scenario& s);
SolveReport tsdp_solve_parallel(const Scenario& s);

}  // namespace hfl
