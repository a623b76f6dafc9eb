#include "hfl/tsdp.hpp"

#include <algorithm>
#include <limits>

namespace hfl {

namespace {

void require_two_edges(const Scenario& s, const char* where) {
  if (s.num_edges != 2) throw UnsupportedDimension(std::string(where) + ": exactly two edges required");
}

void require_k(const Scenario& s, int k, const char* where) {
  if (k < 1 || k > s.num_users) throw std::invalid_argument(std::string(where) + ": k out of range");
}

struct KeyedUser {
  double value;
  int user;
};

/// Scratch buffers reused across cells of one k-sweep. `comparisons` counts
/// every key comparison made through it.
struct Workspace {
  std::vector<KeyedUser> order;        // users sorted by decreasing phi1
  std::vector<double> phi1_by_rank;    // phi1 of the user at each rank position
  std::vector<double> phi2_by_rank;    // phi2 of the user at each rank position
  std::vector<KeyedUser> suffix;       // secondary-sort scratch
  std::uint64_t comparisons = 0;
};

void sort_decreasing(std::vector<KeyedUser>& v, std::uint64_t& comparisons) {
  std::sort(v.begin(), v.end(), [&comparisons](const KeyedUser& a, const KeyedUser& b) {
    ++comparisons;
    if (a.value != b.value) return a.value > b.value;
    return a.user < b.user;
  });
}

void sort_increasing(std::vector<KeyedUser>& v, std::uint64_t& comparisons) {
  std::sort(v.begin(), v.end(), [&comparisons](const KeyedUser& a, const KeyedUser& b) {
    ++comparisons;
    if (a.value != b.value) return a.value < b.value;
    return a.user < b.user;
  });
}

/// Primary sort for load k plus the phi tables laid out in rank order.
void prepare_k(const Scenario& s, int k, Workspace& ws) {
  const int num_users = s.num_users;
  ws.order.resize(static_cast<std::size_t>(num_users));
  for (int m = 0; m < num_users; ++m)
    ws.order[m] = {member_delay(s.alpha[m], k, s.beta_at(m, 0)), m};
  sort_decreasing(ws.order, ws.comparisons);
  ws.phi1_by_rank.resize(static_cast<std::size_t>(num_users));
  ws.phi2_by_rank.resize(static_cast<std::size_t>(num_users));
  for (int pos = 0; pos < num_users; ++pos) {
    const int u = ws.order[pos].user;
    ws.phi1_by_rank[pos] = ws.order[pos].value;
    ws.phi2_by_rank[pos] = member_delay(s.alpha[u], num_users - k, s.beta_at(u, 1));
  }
}

/// Sorts the candidate set Lambda_{k,r} (rank positions r..M-1) by
/// increasing phi2, ties to the smaller user index.
void sort_candidates(const Workspace& ws, int r, std::vector<KeyedUser>& suffix,
                     std::uint64_t& comparisons) {
  const int num_users = static_cast<int>(ws.order.size());
  suffix.resize(static_cast<std::size_t>(num_users - r));
  for (int pos = r; pos < num_users; ++pos)
    suffix[pos - r] = {ws.phi2_by_rank[pos], ws.order[pos].user};
  sort_increasing(suffix, comparisons);
}

struct CellBest {
  double h = std::numeric_limits<double>::infinity();
  int r = 0;  // 0 marks "no feasible cell"
};

/// Evaluates every feasible class (k, r) for one k and keeps the first r
/// attaining the minimum (strict-improvement update, r ascending).
CellBest sweep_one_k(const Scenario& s, int k, Workspace& ws) {
  const int num_users = s.num_users;
  prepare_k(s, k, ws);
  CellBest best;
  const int r_max = num_users + 1 - k;
  for (int r = 1; r <= r_max; ++r) {
    sort_candidates(ws, r, ws.suffix, ws.comparisons);
    const int take = num_users - k - r + 1;  // candidates forced to edge 2
    const double zeta1 = ws.phi1_by_rank[r - 1];
    double zeta2 = -std::numeric_limits<double>::infinity();
    for (int pos = 0; pos < r - 1; ++pos) {  // users ranked above the leader
      ++ws.comparisons;
      zeta2 = std::max(zeta2, ws.phi2_by_rank[pos]);
    }
    for (int i = 0; i < take; ++i) {
      ++ws.comparisons;
      zeta2 = std::max(zeta2, ws.suffix[i].value);
    }
    double h = zeta1 + s.d2[0];
    if (r > 1 || take > 0) h = std::max(h, zeta2 + s.d2[1]);
    if (h < best.h) best = {h, r};
  }
  return best;
}

/// Rebuilds the optimal partition of the winning class.
Assignment reconstruct(const Scenario& s, int k, int r, Workspace& ws) {
  const int num_users = s.num_users;
  prepare_k(s, k, ws);
  sort_candidates(ws, r, ws.suffix, ws.comparisons);
  const int take = num_users - k - r + 1;
  Assignment a;
  a.edge_of.assign(static_cast<std::size_t>(num_users), 0);
  for (int pos = 0; pos < r - 1; ++pos) a.edge_of[ws.order[pos].user] = 1;
  for (int i = 0; i < take; ++i) a.edge_of[ws.suffix[i].user] = 1;
  return a;
}

double h_zero_counted(const Scenario& s, std::uint64_t& comparisons) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < s.num_users; ++m) {
    ++comparisons;
    worst = std::max(worst, member_delay(s.alpha[m], s.num_users, s.beta_at(m, 1)));
  }
  return worst + s.d2[1];
}

SolveReport tsdp_solve_impl(const Scenario& s, bool parallel) {
  s.validate();
  require_two_edges(s, "tsdp_solve");
  const int num_users = s.num_users;

  std::uint64_t comparisons = 0;
  double h_best = h_zero_counted(s, comparisons);
  int k_best = 0;
  int r_best = 0;

  if (parallel) {
    std::vector<CellBest> per_k(static_cast<std::size_t>(num_users) + 1);
    std::uint64_t swept = 0;
#pragma omp parallel reduction(+ : swept)
    {
      Workspace ws;
#pragma omp for schedule(dynamic)
      for (int k = 1; k <= num_users; ++k) per_k[k] = sweep_one_k(s, k, ws);
      swept += ws.comparisons;
    }
    comparisons += swept;
    for (int k = 1; k <= num_users; ++k) {
      if (per_k[k].r != 0 && per_k[k].h < h_best) {
        h_best = per_k[k].h;
        k_best = k;
        r_best = per_k[k].r;
      }
    }
  } else {
    Workspace ws;
    for (int k = 1; k <= num_users; ++k) {
      const CellBest best = sweep_one_k(s, k, ws);
      if (best.r != 0 && best.h < h_best) {
        h_best = best.h;
        k_best = k;
        r_best = best.r;
      }
    }
    comparisons += ws.comparisons;
  }

  Assignment a;
  if (k_best == 0) {
    a = Assignment::all_on(num_users, 1);
  } else {
    Workspace ws;
    a = reconstruct(s, k_best, r_best, ws);
    comparisons += ws.comparisons;
  }

  SolveReport rep;
  rep.algorithm = "tsdp";
  rep.assignment = a;
  rep.allocation = eba_allocation(s, a);
  rep.latency = round_latency_eba(s, a);
  rep.work = comparisons;
  return rep;
}

}  // namespace

RankTables build_rank_tables(const Scenario& s, int k) {
  require_two_edges(s, "build_rank_tables");
  require_k(s, k, "build_rank_tables");
  const int num_users = s.num_users;
  Workspace ws;
  prepare_k(s, k, ws);
  RankTables t;
  t.load_k = k;
  t.phi1.resize(static_cast<std::size_t>(num_users));
  t.phi2.resize(static_cast<std::size_t>(num_users));
  t.rank1.resize(static_cast<std::size_t>(num_users));
  t.by_rank.resize(static_cast<std::size_t>(num_users));
  for (int pos = 0; pos < num_users; ++pos) {
    const int u = ws.order[pos].user;
    t.by_rank[pos] = u;
    t.rank1[u] = pos + 1;
    t.phi1[u] = ws.phi1_by_rank[pos];
    t.phi2[u] = ws.phi2_by_rank[pos];
  }
  return t;
}

std::vector<int> primary_ranks(const Scenario& s, int k) { return build_rank_tables(s, k).rank1; }

std::optional<CandidatePartition> candidate_partition(const Scenario& s, int k, int r) {
  require_two_edges(s, "candidate_partition");
  require_k(s, k, "candidate_partition");
  require_k(s, r, "candidate_partition");
  if (!class_is_feasible(s.num_users, k, r)) return std::nullopt;

  Workspace ws;
  prepare_k(s, k, ws);
  sort_candidates(ws, r, ws.suffix, ws.comparisons);
  const int take = s.num_users - k - r + 1;

  std::vector<char> on_edge2(static_cast<std::size_t>(s.num_users), 0);
  for (int pos = 0; pos < r - 1; ++pos) on_edge2[ws.order[pos].user] = 1;
  for (int i = 0; i < take; ++i) on_edge2[ws.suffix[i].user] = 1;

  CandidatePartition part;
  part.leader = ws.order[r - 1].user;
  for (int m = 0; m < s.num_users; ++m) {
    if (on_edge2[m])
      part.edge2.push_back(m);
    else
      part.edge1.push_back(m);
  }
  return part;
}

double subproblem_latency(const Scenario& s, int k, int r, const CandidatePartition& part) {
  require_two_edges(s, "subproblem_latency");
  require_k(s, k, "subproblem_latency");
  require_k(s, r, "subproblem_latency");
  const double zeta1 = member_delay(s.alpha[part.leader], k, s.beta_at(part.leader, 0));
  double h = zeta1 + s.d2[0];
  if (!part.edge2.empty()) {
    double zeta2 = -std::numeric_limits<double>::infinity();
    for (int m : part.edge2)
      zeta2 = std::max(zeta2, member_delay(s.alpha[m], s.num_users - k, s.beta_at(m, 1)));
    h = std::max(h, zeta2 + s.d2[1]);
  }
  return h;
}

double h_zero(const Scenario& s) {
  require_two_edges(s, "h_zero");
  std::uint64_t ignored = 0;
  return h_zero_counted(s, ignored);
}

SolveReport tsdp_solve(const Scenario& s, const TsdpOptions& opts) {
  return tsdp_solve_impl(s, opts.parallel);
}

SolveReport tsdp_solve_serial(const Scenario& s) { return tsdp_solve_impl(s, false); }

SolveReport tsdp_solve_parallel(const Scenario& s) { return tsdp_solve_impl(s, true); }

}  // namespace hfl
