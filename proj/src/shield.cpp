#include "netimmune/shield.hpp"

#include <algorithm>
#include <stdexcept>

namespace netimmune {

double shield_value(const EigenPair& ep, const Graph& g, const NodeSubset& s) {
    if (static_cast<int>(ep.u.size()) != g.node_count())
        throw std::invalid_argument("shield_value: eigenpair dimension != node count");
    validate_subset(g, s);
    double v = 0.0;
    for (int i = 0; i < g.node_count(); ++i)
        if (s[i]) v += 2.0 * ep.lambda * ep.u[i] * ep.u[i];
    for (int i = 0; i < g.node_count(); ++i) {
        if (!s[i]) continue;
        for (int j : g.neighbors(i))
            if (j > i && s[j]) v -= 2.0 * ep.u[i] * ep.u[j];
    }
    return v;
}

std::vector<NodeSubset> netshield_greedy_trace(const Graph& g, int k) {
    const int n = g.node_count();
    if (k < 0 || k > n)
        throw std::invalid_argument("netshield_greedy: k must be in [0, n]");
    const EigenPair ep = principal_eigenpair(g);
    NodeSubset s(n, 0);
    // gain[j] tracks Sv(S + j) - Sv(S): the linear term minus accumulated
    // pairwise penalties against already-selected neighbors.
    std::vector<double> gain(n);
    for (int j = 0; j < n; ++j) gain[j] = 2.0 * ep.lambda * ep.u[j] * ep.u[j];
    std::vector<NodeSubset> trace;
    for (int round = 0; round < k; ++round) {
        int pick = -1;
        for (int j = 0; j < n; ++j) {
            if (s[j]) continue;
            if (pick < 0 || gain[j] > gain[pick]) pick = j;   // ties keep lowest index
        }
        s[pick] = 1;
        for (int j : g.neighbors(pick))
            if (!s[j]) gain[j] -= 2.0 * ep.u[pick] * ep.u[j];
        trace.push_back(s);
    }
    return trace;
}

NodeSubset netshield_greedy(const Graph& g, int k) {
    if (k == 0) return NodeSubset(g.node_count(), 0);
    return netshield_greedy_trace(g, k).back();
}

std::vector<NodeSubset> netshield_plus_trace(const Graph& g, int k, int b) {
    const int n = g.node_count();
    if (k < 1 || k > n || b < 1 || b > k)
        throw std::invalid_argument("netshield_plus: need 1 <= b <= k <= n");
    std::vector<NodeSubset> trace;
    NodeSubset total(n, 0);
    Graph cur = g;
    std::vector<int> orig(n);
    for (int i = 0; i < n; ++i) orig[i] = i;
    int taken = 0;
    while (taken < k) {
        const int batch = std::min(b, k - taken);
        const NodeSubset sub = netshield_greedy(cur, batch);
        std::vector<int> next_orig;
        for (int i = 0; i < cur.node_count(); ++i) {
            if (sub[i]) total[orig[i]] = 1;
            else next_orig.push_back(orig[i]);
        }
        cur = remove_nodes(cur, sub);
        orig = std::move(next_orig);
        taken += batch;
        trace.push_back(total);
    }
    return trace;
}

NodeSubset netshield_plus(const Graph& g, int k, int b) {
    return netshield_plus_trace(g, k, b).back();
}

}  // namespace netimmune
