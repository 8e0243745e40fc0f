#ifndef SUBCLUST_BLACKBOX_HPP
#define SUBCLUST_BLACKBOX_HPP

#include <limits>
#include <string>
#include <vector>

#include "subclust/metric.hpp"
#include "subclust/rng.hpp"

namespace subclust {

enum class Objective { kMedian, kMeans };

enum class BlackBoxAlgorithm { kDpLocalSearch, kLocalSearch, kExhaustiveOracle };

// eps sentinel for non-private black boxes; the exponential mechanism
// degenerates to a deterministic argmax.
inline constexpr double kNonPrivateEps = std::numeric_limits<double>::infinity();

/// Advertised guarantees of a clustering black box: multiplicative ratio
/// alpha, additive error gamma (total-cost units) and its privacy budget.
struct BlackBoxMeta {
  double alpha = 1.0;
  double gamma = 0.0;
  double eps = kNonPrivateEps;
  double delta = 0.0;
  Objective objective = Objective::kMedian;
};

/// Per-invocation privacy budget split of the DP local search: half the
/// budget across swap rounds, half on the final selection.
struct BudgetLedger {
  int rounds = 0;
  double per_round_eps = 0.0;
  double selection_eps = 0.0;
  double total = 0.0;
};

/// Samples an index with probability proportional to
/// exp(eps * u_i / (2 * sensitivity)), in log space with a max-utility
/// shift. eps = +inf returns the argmax (ties to the lowest index).
int exponential_mechanism(const std::vector<double>& utilities, double eps, double sensitivity,
                          Rng& rng);

/// Swap-based DP local search for k-median over the ground set: start from
/// the k lowest-index points, pick one of the k*(|V|-k) single swaps per
/// round via the exponential mechanism (utility = -total cost, sensitivity
/// M, budget eps/(2*rounds)), then select the output among all visited
/// center sets with budget eps/2. rounds <= 0 selects the default schedule
/// ceil(10 k ln(|V|+1)).
CenterSet dp_local_search_kmedian(const MetricSpace& space, const Dataset& data, int k,
                                  double eps, int rounds, Rng& rng,
                                  BudgetLedger* ledger = nullptr);

/// Same search on squared distances; sensitivity M^2.
CenterSet dp_local_search_kmeans(const MetricSpace& space, const Dataset& data, int k,
                                 double eps, int rounds, Rng& rng,
                                 BudgetLedger* ledger = nullptr);

/// Non-private baseline: random k-subset start, best-improving single swap
/// until no swap beats cost * (1 - tol/k) or rounds run out.
CenterSet local_search_kmedian(const MetricSpace& space, const Dataset& data, int k, int rounds,
                               Rng& rng);
CenterSet local_search_kmeans(const MetricSpace& space, const Dataset& data, int k, int rounds,
                              Rng& rng);

int default_rounds(int k, int ground_size);

/// A black box behind the uniform pipeline interface. Invoking it returns
/// exactly k ground-set centers.
struct ClusteringBlackBox {
  BlackBoxMeta meta;
  BlackBoxAlgorithm algorithm = BlackBoxAlgorithm::kLocalSearch;
  int rounds = 0;  // <= 0 picks the default schedule

  CenterSet run(const MetricSpace& space, const Dataset& data, int k, Rng& rng,
                BudgetLedger* ledger = nullptr) const;
};

const char* objective_name(Objective o);
Objective objective_from_name(const std::string& name);
const char* algorithm_name(BlackBoxAlgorithm a);
BlackBoxAlgorithm algorithm_from_name(const std::string& name);

}  // namespace subclust

#endif  // SUBCLUST_BLACKBOX_HPP
