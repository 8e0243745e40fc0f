#include "subclust/blackbox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subclust/errors.hpp"
#include "subclust/oracle.hpp"

namespace subclust {

namespace {

constexpr double kImprovementTol = 1e-9;

// Assignment of every dataset member to its nearest and second-nearest
// current center, which makes a single-swap cost evaluation O(|D|).
struct SwapState {
  std::vector<int> owner;   // position into the center vector
  std::vector<double> d1;   // cost contribution of the nearest center
  std::vector<double> d2;   // ... of the runner-up
  double total = 0.0;

  void refresh(const MetricSpace& space, const std::vector<int>& members,
               const std::vector<int>& centers, bool squared) {
    const int m = static_cast<int>(members.size());
    owner.assign(m, 0);
    d1.assign(m, 0.0);
    d2.assign(m, 0.0);
    total = 0.0;
    for (int i = 0; i < m; ++i) {
      double best = std::numeric_limits<double>::infinity();
      double second = std::numeric_limits<double>::infinity();
      int pos = 0;
      for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
        double d = space.distance_unchecked(members[i], centers[c]);
        if (squared) d *= d;
        if (d < best) {
          second = best;
          best = d;
          pos = c;
        } else if (d < second) {
          second = d;
        }
      }
      owner[i] = pos;
      d1[i] = best;
      d2[i] = second;
      total += best;
    }
  }
};

// Total cost after replacing the center at `out_pos` with candidate `cand`,
// given that dist_cand[i] already holds the (possibly squared) distance of
// member i to cand.
double swapped_total(const SwapState& st, int out_pos, const std::vector<double>& dist_cand) {
  double total = 0.0;
  const int m = static_cast<int>(st.owner.size());
  for (int i = 0; i < m; ++i) {
    const double base = st.owner[i] == out_pos ? st.d2[i] : st.d1[i];
    total += std::min(base, dist_cand[i]);
  }
  return total;
}

void fill_candidate_distances(const MetricSpace& space, const std::vector<int>& members,
                              int cand, bool squared, std::vector<double>* out) {
  const int m = static_cast<int>(members.size());
  out->resize(m);
  for (int i = 0; i < m; ++i) {
    double d = space.distance_unchecked(members[i], cand);
    if (squared) d *= d;
    (*out)[i] = d;
  }
}

void validate_search_inputs(const MetricSpace& space, const Dataset& data, int k) {
  if (data.space != &space)
    throw ValidationError("InvalidDataset: dataset belongs to a different space");
  if (data.size() == 0) throw ValidationError("EmptyDataset: nothing to cluster");
  if (k < 1 || k > space.size())
    throw ValidationError("KTooLarge: k=" + std::to_string(k) + " for |V|=" +
                          std::to_string(space.size()));
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

CenterSet dp_local_search(const MetricSpace& space, const Dataset& data, int k, double eps,
                          int rounds, bool squared, Rng& rng, BudgetLedger* ledger) {
  validate_search_inputs(space, data, k);
  if (!(eps > 0.0)) throw ValidationError("InvalidPrivacySpec: eps must be positive");
  const int n = space.size();
  if (rounds <= 0) rounds = default_rounds(k, n);
  const double diam = space.diameter();
  const double sensitivity = squared ? diam * diam : diam;
  const double per_round_eps = eps / (2.0 * rounds);
  const double selection_eps = eps / 2.0;
  if (ledger != nullptr)
    *ledger = {rounds, per_round_eps, selection_eps, rounds * per_round_eps + selection_eps};

  std::vector<int> centers = all_indices(k);  // lowest-index start
  std::vector<std::vector<int>> visited{centers};

  // A zero-diameter space has constant utility; every center set costs 0.
  if (k < n && sensitivity > 0.0) {
    SwapState st;
    std::vector<double> dist_cand;
    std::vector<double> utilities;
    std::vector<std::pair<int, int>> swaps;  // (out position, candidate index)
    std::vector<bool> is_center(n, false);
    for (int r = 0; r < rounds; ++r) {
      st.refresh(space, data.members, centers, squared);
      utilities.clear();
      swaps.clear();
      std::fill(is_center.begin(), is_center.end(), false);
      for (int c : centers) is_center[c] = true;
      for (int cand = 0; cand < n; ++cand) {
        if (is_center[cand]) continue;
        fill_candidate_distances(space, data.members, cand, squared, &dist_cand);
        for (int pos = 0; pos < k; ++pos) {
          swaps.emplace_back(pos, cand);
          utilities.push_back(-swapped_total(st, pos, dist_cand));
        }
      }
      const int pick = exponential_mechanism(utilities, per_round_eps, sensitivity, rng);
      centers[swaps[pick].first] = swaps[pick].second;
      visited.push_back(centers);
    }
  }

  int pick = 0;
  if (visited.size() > 1) {
    std::vector<double> final_utilities;
    final_utilities.reserve(visited.size());
    for (const auto& c : visited) {
      CenterSet cs;
      cs.domain = CenterDomain::kGroundSet;
      cs.indices = c;
      final_utilities.push_back(squared ? -total_cost_means(data, cs)
                                        : -total_cost_median(data, cs));
    }
    pick = exponential_mechanism(final_utilities, selection_eps, sensitivity, rng);
  }
  std::vector<int> out = visited[pick];
  std::sort(out.begin(), out.end());
  return CenterSet::from_indices(space, std::move(out), CenterRole::kBlackBoxOutput);
}

CenterSet greedy_local_search(const MetricSpace& space, const Dataset& data, int k, int rounds,
                              bool squared, Rng& rng) {
  validate_search_inputs(space, data, k);
  const int n = space.size();
  if (rounds <= 0) rounds = default_rounds(k, n);
  std::vector<int> centers = rng.sample_without_replacement(n, k);

  if (k < n) {
    SwapState st;
    std::vector<double> dist_cand;
    std::vector<bool> is_center(n, false);
    for (int r = 0; r < rounds; ++r) {
      st.refresh(space, data.members, centers, squared);
      if (st.total == 0.0) break;
      double best = std::numeric_limits<double>::infinity();
      int best_pos = -1, best_cand = -1;
      std::fill(is_center.begin(), is_center.end(), false);
      for (int c : centers) is_center[c] = true;
      for (int cand = 0; cand < n; ++cand) {
        if (is_center[cand]) continue;
        fill_candidate_distances(space, data.members, cand, squared, &dist_cand);
        for (int pos = 0; pos < k; ++pos) {
          const double t = swapped_total(st, pos, dist_cand);
          if (t < best) {
            best = t;
            best_pos = pos;
            best_cand = cand;
          }
        }
      }
      if (best_pos < 0 || best >= st.total * (1.0 - kImprovementTol / k)) break;
      centers[best_pos] = best_cand;
    }
  }

  std::sort(centers.begin(), centers.end());
  return CenterSet::from_indices(space, std::move(centers), CenterRole::kBlackBoxOutput);
}

}  // namespace

int exponential_mechanism(const std::vector<double>& utilities, double eps, double sensitivity,
                          Rng& rng) {
  if (utilities.empty()) throw ValidationError("EmptyCandidateSet: no candidates to select from");
  if (!(sensitivity > 0.0)) throw ValidationError("InvalidSensitivity: must be positive");
  if (!(eps > 0.0)) throw ValidationError("InvalidPrivacySpec: eps must be positive");
  const int m = static_cast<int>(utilities.size());
  if (std::isinf(eps)) {
    int best = 0;
    for (int i = 1; i < m; ++i)
      if (utilities[i] > utilities[best]) best = i;
    return best;
  }
  const double scale = eps / (2.0 * sensitivity);
  double shift = -std::numeric_limits<double>::infinity();
  for (double u : utilities) shift = std::max(shift, u * scale);
  std::vector<double> cumulative(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    total += std::exp(utilities[i] * scale - shift);
    cumulative[i] = total;
  }
  const double draw = rng.uniform() * total;
  for (int i = 0; i < m; ++i)
    if (draw < cumulative[i]) return i;
  return m - 1;
}

int default_rounds(int k, int ground_size) {
  return static_cast<int>(std::ceil(10.0 * k * std::log(ground_size + 1.0)));
}

CenterSet dp_local_search_kmedian(const MetricSpace& space, const Dataset& data, int k,
                                  double eps, int rounds, Rng& rng, BudgetLedger* ledger) {
  return dp_local_search(space, data, k, eps, rounds, false, rng, ledger);
}

CenterSet dp_local_search_kmeans(const MetricSpace& space, const Dataset& data, int k,
                                 double eps, int rounds, Rng& rng, BudgetLedger* ledger) {
  return dp_local_search(space, data, k, eps, rounds, true, rng, ledger);
}

CenterSet local_search_kmedian(const MetricSpace& space, const Dataset& data, int k, int rounds,
                               Rng& rng) {
  return greedy_local_search(space, data, k, rounds, false, rng);
}

CenterSet local_search_kmeans(const MetricSpace& space, const Dataset& data, int k, int rounds,
                              Rng& rng) {
  return greedy_local_search(space, data, k, rounds, true, rng);
}

CenterSet ClusteringBlackBox::run(const MetricSpace& space, const Dataset& data, int k, Rng& rng,
                                  BudgetLedger* ledger) const {
  const bool squared = meta.objective == Objective::kMeans;
  switch (algorithm) {
    case BlackBoxAlgorithm::kDpLocalSearch:
      return squared ? dp_local_search_kmeans(space, data, k, meta.eps, rounds, rng, ledger)
                     : dp_local_search_kmedian(space, data, k, meta.eps, rounds, rng, ledger);
    case BlackBoxAlgorithm::kLocalSearch:
      return squared ? local_search_kmeans(space, data, k, rounds, rng)
                     : local_search_kmedian(space, data, k, rounds, rng);
    case BlackBoxAlgorithm::kExhaustiveOracle: {
      OracleResult r = squared ? brute_force_opt_means(space, data, k)
                               : brute_force_opt_median(space, data, k);
      CenterSet out = r.optimum_centers;
      out.role = CenterRole::kBlackBoxOutput;
      return out;
    }
  }
  throw ValidationError("InvalidBlackBox: unknown algorithm");
}

const char* objective_name(Objective o) {
  return o == Objective::kMedian ? "median" : "means";
}

Objective objective_from_name(const std::string& name) {
  if (name == "median") return Objective::kMedian;
  if (name == "means") return Objective::kMeans;
  throw ValidationError("InvalidObjective: '" + name + "' (expected median or means)");
}

const char* algorithm_name(BlackBoxAlgorithm a) {
  switch (a) {
    case BlackBoxAlgorithm::kDpLocalSearch: return "dp-local-search";
    case BlackBoxAlgorithm::kLocalSearch: return "local-search";
    case BlackBoxAlgorithm::kExhaustiveOracle: return "oracle";
  }
  return "local-search";
}

BlackBoxAlgorithm algorithm_from_name(const std::string& name) {
  if (name == "dp-local-search") return BlackBoxAlgorithm::kDpLocalSearch;
  if (name == "local-search") return BlackBoxAlgorithm::kLocalSearch;
  if (name == "oracle") return BlackBoxAlgorithm::kExhaustiveOracle;
  throw ValidationError("InvalidAlgorithm: '" + name + "'");
}

}  // namespace subclust
