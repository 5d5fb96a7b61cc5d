#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netimmune/graph.hpp"
#include "netimmune/pareto.hpp"

namespace netimmune {

/// Binary quadratic program max_x linear^T x - sum pairwise_{ij} x_i x_j
/// s.t. costs^T x <= budget (and popcount(x) <= cardinality_cap when set).
struct QpInstance {
    struct PairTerm {
        int i = 0;
        int j = 0;          ///< i < j, an edge of the source graph
        double weight = 0;  ///< 2 u_i u_j, >= 0
    };
    std::vector<double> linear;      ///< 2 lambda u_i^2, >= 0
    std::vector<PairTerm> pairwise;  ///< sorted by (i, j)
    CostVector costs;
    std::int64_t budget = 0;
    std::optional<int> cardinality_cap;
};

struct QpSolution {
    NodeSubset x;
    double objective = 0.0;
    std::int64_t cost = 0;
    bool optimal = false;
    std::int64_t nodes_explored = 0;
};

/// The objective in one fixed summation order (ascending index, then the
/// sorted pairwise list). The solver, its tests, and any enumeration oracle
/// must share this arithmetic so optima compare exactly.
double qp_objective(const QpInstance& q, const NodeSubset& x);

/// Coefficients per the Shield-value definition; pairs with u_i*u_j below
/// 1e-15 are dropped.
QpInstance build_qp(const Graph& g, const EigenPair& ep, const CostVector& costs,
                    std::int64_t budget, std::optional<int> cardinality_cap = {});

/// Depth-first branch-and-bound, include-branch first, branch order
/// descending linear[i]/max(cost[i],1) (ties by index). Upper bound: current
/// value plus a fractional-knapsack relaxation of the remaining items'
/// penalty-adjusted values, intersected with a top-(cap remaining) bound
/// when capped. Prunes when bound <= incumbent + 1e-12; among equal-objective
/// optima that survive exploration, keeps the lexicographically smallest
/// selection vector.
QpSolution solve_budget_qp(const QpInstance& q);

/// One exact solve per budget against g's own eigenpair, re-scored with the
/// true eigen-drop; points carry the solution's actual cost (not epsilon),
/// its Shield objective in shield_value, and method = "eps_qp". Distinct
/// budgets often yield the same selection; duplicates are solved and scored
/// once. `workers` > 1 solves independent budgets concurrently (identical
/// output to serial).
Front epsilon_sweep(const Graph& g, const CostVector& costs,
                    const std::vector<std::int64_t>& budgets, int workers = 1);

/// NetShield+-flavored sweep: per budget, repeatedly solve with
/// cardinality_cap = b on the current residual graph's eigenpair and the
/// remaining budget, take the chosen nodes at their original costs, remove
/// them, recompute the eigenpair; stops on an empty sub-solution or an empty
/// residual. shield_value carries the sum of the batch objectives; method =
/// "eps_qp_batched".
Front epsilon_sweep_batched(const Graph& g, const CostVector& costs, int b,
                            const std::vector<std::int64_t>& budgets, int workers = 1);

}  // namespace netimmune
