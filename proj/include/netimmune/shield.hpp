#pragma once

#include <vector>

#include "netimmune/graph.hpp"

namespace netimmune {

/// Shield-value Sv(S) = sum_{i in S} 2 lambda u_i^2
///                    - sum_{i<j in S, A_ij=1} 2 u_i u_j.
/// ep must be the principal eigenpair of g.
double shield_value(const EigenPair& ep, const Graph& g, const NodeSubset& s);

/// NetShield: k rounds of adding the node with the largest marginal
/// Shield-value gain, eigenpair computed once on g. Ties break to the lowest
/// node index. Greedy prefixes nest: the k-set extends the (k-1)-set.
NodeSubset netshield_greedy(const Graph& g, int k);

/// Cumulative selections after each NetShield round, sizes 1..k (empty for
/// k = 0); the last entry equals netshield_greedy(g, k).
std::vector<NodeSubset> netshield_greedy_trace(const Graph& g, int k);

/// NetShield+: batches of min(b, remaining) nodes chosen by netshield_greedy
/// on the current residual graph, removed, eigenpair recomputed; selections
/// are reported in original node indices. b = k degenerates to plain
/// NetShield.
NodeSubset netshield_plus(const Graph& g, int k, int b);

/// Cumulative selections after each NetShield+ batch (last entry equals
/// netshield_plus(g, k, b)); used to trace greedy fronts.
std::vector<NodeSubset> netshield_plus_trace(const Graph& g, int k, int b);

}  // namespace netimmune
