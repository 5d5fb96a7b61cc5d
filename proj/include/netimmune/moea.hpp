#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netimmune/graph.hpp"
#include "netimmune/pareto.hpp"

namespace netimmune {

/// (maximize delta_lambda, minimize cost) pair as seen by the GAs.
struct Objectives {
    double delta_lambda = 0.0;
    std::int64_t cost = 0;
};

struct Individual {
    NodeSubset x;
    Objectives obj;
};

enum class GaAlgorithm { nsga2, sms_emoa };

struct GaConfig {
    int population_size = 100;
    double p_m = -1.0;   ///< per-bit mutation probability; < 0 selects 1/n
    double p_c = 0.75;   ///< crossover probability
    std::int64_t evaluation_budget = 10000;
    std::uint64_t seed = 0;
    GaAlgorithm algorithm = GaAlgorithm::nsga2;
    /// (delta_lambda, cost) reference for SMS-EMOA selection; default is
    /// (-0.05 * lambda(G), sum(costs) + 1), strictly worse than any
    /// attainable point.
    std::optional<std::pair<double, double>> reference_point;
    /// Serve repeated genotypes from a per-run cache instead of re-running
    /// the eigensolver. Every offspring still consumes one unit of
    /// evaluation_budget either way, so runtimes terminate even when the
    /// genotype space is smaller than the budget.
    bool memoize = true;
    /// Record population hypervolume after init and after every step
    /// (SMS-EMOA) or generation (NSGA-II).
    bool track_population_hypervolume = false;
};

/// (eigen_drop(g, x), selection cost). Pure; the GAs route evaluation
/// through a per-run memo cache instead of calling this in a loop.
std::pair<double, std::int64_t> evaluate(const Graph& g, const CostVector& costs,
                                         const NodeSubset& x);

/// Per-run evaluation cache. Records every distinct genotype seen, in
/// first-evaluation order, for archive reporting.
class Evaluator {
public:
    Evaluator(const Graph& g, CostVector costs, bool memoize = true);

    Objectives operator()(const NodeSubset& x);

    double base_lambda() const { return base_lambda_; }
    std::int64_t total_cost() const { return total_cost_; }
    /// Number of eigensolver-backed evaluations (cache misses).
    std::int64_t invocations() const { return invocations_; }
    const std::vector<Individual>& evaluated() const { return evaluated_; }

private:
    const Graph& g_;
    CostVector costs_;
    bool memoize_;
    double base_lambda_ = 0.0;
    std::int64_t total_cost_ = 0;
    std::int64_t invocations_ = 0;
    std::vector<Individual> evaluated_;
    std::map<NodeSubset, std::size_t> seen_;
};

struct GaRunResult {
    Front front;                           ///< non-dominated filter of the archive
    std::vector<Individual> population;    ///< final population
    std::vector<Individual> archive;       ///< every distinct evaluated genotype
    std::int64_t evaluation_events = 0;    ///< budget units consumed
    std::int64_t evaluator_invocations = 0;
    double base_lambda = 0.0;
    std::pair<double, double> reference_point{0.0, 0.0};
    std::vector<double> population_hypervolume;   ///< when tracked
};

/// Ranking and selection primitives. These compare objectives exactly: the
/// 1e-9 reporting tolerance (kDeltaTol) applies to emitted fronts, not to
/// selection pressure, which keeps SMS-EMOA's hypervolume elitism exact.

/// Fast non-dominated sort; rank 0 first, indices ascending within a rank.
std::vector<std::vector<int>> nondominated_sort(std::span<const Objectives> points);

/// Crowding distances for one mutually non-dominated front; boundary points
/// get +infinity.
std::vector<double> crowding_distance(std::span<const Objectives> front);

/// hv(front) - hv(front minus point), per point, for a mutually
/// non-dominated front. Duplicated objective pairs contribute 0. ref must be
/// strictly worse than every point in both objectives.
std::vector<double> hv_contribution_2d(std::span<const Objectives> front,
                                       std::pair<double, double> ref);

/// Generational NSGA-II: binary tournament on (rank, crowding), uniform
/// crossover with probability p_c, per-bit mutation, rank/crowding survivor
/// truncation. Spends the whole budget: population_size evaluations for the
/// initial population (taken from `init` when given, padded with uniform
/// random genotypes), then offspring until evaluation_budget is consumed.
GaRunResult nsga2_run(const Graph& g, const CostVector& costs, const GaConfig& config,
                      const std::vector<NodeSubset>* init = nullptr);

/// Steady-state (mu+1) SMS-EMOA: uniform random parents, same variation
/// operators, one offspring per step; the minimal hypervolume contributor of
/// the worst rank leaves (ties: the newest such member). Population
/// hypervolume against the fixed reference point never decreases.
GaRunResult sms_emoa_run(const Graph& g, const CostVector& costs, const GaConfig& config,
                         const std::vector<NodeSubset>* init = nullptr);

/// Seed population from existing fronts: every front member as a bit vector
/// (points lacking a stored selection are reconstructed from node labels),
/// deduplicated; padded with uniform-random genotypes, or truncated by
/// rank-then-crowding using the stored objectives when over-full.
std::vector<NodeSubset> make_hybrid_init(const std::vector<Front>& fronts,
                                         int population_size, const Graph& g,
                                         std::uint64_t seed);

}  // namespace netimmune
