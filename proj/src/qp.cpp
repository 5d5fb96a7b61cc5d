#include "netimmune/qp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"

namespace netimmune {

double qp_objective(const QpInstance& q, const NodeSubset& x) {
    if (x.size() != q.linear.size())
        throw std::invalid_argument("qp_objective: selection length mismatch");
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) v += q.linear[i];
    for (const auto& t : q.pairwise)
        if (x[t.i] && x[t.j]) v -= t.weight;
    return v;
}

QpInstance build_qp(const Graph& g, const EigenPair& ep, const CostVector& costs,
                    std::int64_t budget, std::optional<int> cardinality_cap) {
    const int n = g.node_count();
    if (static_cast<int>(ep.u.size()) != n)
        throw std::invalid_argument("build_qp: eigenpair dimension != node count");
    if (static_cast<int>(costs.size()) != n)
        throw std::invalid_argument("build_qp: cost vector length != node count");
    if (budget < 0) throw std::invalid_argument("build_qp: budget must be >= 0");
    QpInstance q;
    q.linear.resize(n);
    for (int i = 0; i < n; ++i) q.linear[i] = 2.0 * ep.lambda * ep.u[i] * ep.u[i];
    for (const auto& [i, j] : g.edges()) {
        const double uu = ep.u[i] * ep.u[j];
        if (uu < 1e-15) continue;
        q.pairwise.push_back({i, j, 2.0 * uu});
    }
    q.costs = costs;
    q.budget = budget;
    q.cardinality_cap = cardinality_cap;
    return q;
}

namespace {

struct BnbState {
    const QpInstance& q;
    std::vector<int> order;                                  // branch order
    std::vector<std::vector<std::pair<int, double>>> adj;    // pairwise neighbors
    NodeSubset cur;
    std::vector<double> pending;   // accumulated weight against included nodes
    double cur_val = 0.0;
    std::int64_t cur_cost = 0;
    int cur_count = 0;
    int cap = 0;
    NodeSubset best_x;
    double best_obj = 0.0;
    std::int64_t best_cost = 0;
    std::int64_t explored = 0;
    // scratch for the bound
    std::vector<std::pair<double, double>> items;   // (value, cost)
    std::vector<double> values;

    explicit BnbState(const QpInstance& inst) : q(inst) {
        const int n = static_cast<int>(q.linear.size());
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double ra = q.linear[a] / std::max<double>(q.costs[a], 1.0);
            const double rb = q.linear[b] / std::max<double>(q.costs[b], 1.0);
            return ra != rb ? ra > rb : a < b;
        });
        adj.resize(n);
        for (const auto& t : q.pairwise) {
            adj[t.i].emplace_back(t.j, t.weight);
            adj[t.j].emplace_back(t.i, t.weight);
        }
        cur.assign(n, 0);
        pending.assign(n, 0.0);
        best_x = cur;
        best_obj = qp_objective(q, best_x);   // empty set, value 0
        cap = q.cardinality_cap ? std::max(0, *q.cardinality_cap) : n;
    }

    void consider_incumbent() {
        if (cur_val <= best_obj - 1e-9) return;
        const double canon = qp_objective(q, cur);
        if (canon > best_obj || (canon == best_obj && cur < best_x)) {
            best_obj = canon;
            best_x = cur;
            best_cost = cur_cost;
        }
    }

    /// Upper bound on what order[pos..] can still add: min of the fractional
    /// knapsack over the remaining budget and the sum of the top
    /// (cap - included) penalty-adjusted values. Penalties against nodes not
    /// yet included are ignored, so this only overestimates.
    double bound_remaining(int pos) {
        const std::int64_t room = q.budget - cur_cost;
        const int slots = cap - cur_count;
        if (room < 0 || slots <= 0) return 0.0;
        items.clear();
        for (std::size_t k = pos; k < order.size(); ++k) {
            const int i = order[k];
            const double v = q.linear[i] - pending[i];
            if (v <= 0.0) continue;
            items.emplace_back(v, static_cast<double>(q.costs[i]));
        }
        if (items.empty()) return 0.0;
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            const double ra = a.first / std::max(a.second, 1.0);
            const double rb = b.first / std::max(b.second, 1.0);
            return ra > rb;
        });
        double knap = 0.0;
        double capacity = static_cast<double>(room);
        for (const auto& [v, c] : items) {
            if (c <= capacity) {
                knap += v;
                capacity -= c;
            } else {
                if (c > 0.0) knap += v * (capacity / c);
                break;
            }
        }
        if (static_cast<int>(items.size()) <= slots) return knap;
        values.clear();
        for (const auto& [v, c] : items) values.push_back(v);
        std::nth_element(values.begin(), values.begin() + slots, values.end(),
                         std::greater<>());
        double top = 0.0;
        for (int k = 0; k < slots; ++k) top += values[k];
        return std::min(knap, top);
    }

    void dfs(int pos) {
        ++explored;
        if (pos == static_cast<int>(order.size())) return;
        if (cur_val + bound_remaining(pos) <= best_obj + 1e-12) return;
        const int v = order[pos];
        if (cur_cost + q.costs[v] <= q.budget && cur_count < cap) {
            const double gain = q.linear[v] - pending[v];
            cur[v] = 1;
            cur_cost += q.costs[v];
            ++cur_count;
            cur_val += gain;
            for (const auto& [w, wt] : adj[v]) pending[w] += wt;
            consider_incumbent();
            dfs(pos + 1);
            for (const auto& [w, wt] : adj[v]) pending[w] -= wt;
            cur_val -= gain;
            cur[v] = 0;
            cur_cost -= q.costs[v];
            --cur_count;
        }
        dfs(pos + 1);
    }
};

}  // namespace

QpSolution solve_budget_qp(const QpInstance& q) {
    if (q.costs.size() != q.linear.size())
        throw std::invalid_argument("solve_budget_qp: cost vector length mismatch");
    if (q.budget < 0) throw std::invalid_argument("solve_budget_qp: negative budget");
    for (auto c : q.costs)
        if (c < 0) throw std::invalid_argument("solve_budget_qp: negative cost");
    BnbState st(q);
    st.dfs(0);
    QpSolution sol;
    sol.x = st.best_x;
    sol.objective = st.best_obj;
    sol.cost = st.best_cost;
    sol.optimal = true;
    sol.nodes_explored = st.explored;
    return sol;
}

namespace {

void validate_budgets(const std::vector<std::int64_t>& budgets) {
    if (budgets.empty()) throw std::invalid_argument("epsilon sweep: empty budget grid");
    for (auto b : budgets)
        if (b < 0) throw std::invalid_argument("epsilon sweep: negative budget");
}

ObjectivePoint score_selection(const Graph& g, const CostVector& costs,
                               double base_lambda, const NodeSubset& x,
                               const char* method, double shield) {
    ObjectivePoint p;
    p.delta_lambda =
        std::max(0.0, base_lambda - principal_eigenpair(remove_nodes(g, x)).lambda);
    p.cost = subset_cost(costs, x);
    p.method = method;
    p.nodes = subset_labels(g, x);
    p.selection = x;
    p.shield_value = shield;
    return p;
}

}  // namespace

Front epsilon_sweep(const Graph& g, const CostVector& costs,
                    const std::vector<std::int64_t>& budgets, int workers) {
    validate_budgets(budgets);
    if (static_cast<int>(costs.size()) != g.node_count())
        throw std::invalid_argument("epsilon_sweep: cost vector length != node count");
    const EigenPair ep = principal_eigenpair(g);
    const QpInstance base = build_qp(g, ep, costs, 0);

    std::vector<QpSolution> sols(budgets.size());
    detail::parallel_for(budgets.size(), workers, [&](std::size_t i) {
        QpInstance inst = base;
        inst.budget = budgets[i];
        sols[i] = solve_budget_qp(inst);
    });

    // Score each distinct selection once, in first-appearance order.
    std::vector<std::pair<NodeSubset, double>> distinct;
    std::map<NodeSubset, bool> seen;
    for (const auto& sol : sols)
        if (seen.emplace(sol.x, true).second) distinct.emplace_back(sol.x, sol.objective);
    std::vector<ObjectivePoint> points(distinct.size());
    detail::parallel_for(distinct.size(), workers, [&](std::size_t i) {
        points[i] = score_selection(g, costs, ep.lambda, distinct[i].first, "eps_qp",
                                    distinct[i].second);
    });
    return nondominated_filter(points);
}

Front epsilon_sweep_batched(const Graph& g, const CostVector& costs, int b,
                            const std::vector<std::int64_t>& budgets, int workers) {
    validate_budgets(budgets);
    if (b < 1) throw std::invalid_argument("epsilon_sweep_batched: b must be >= 1");
    if (static_cast<int>(costs.size()) != g.node_count())
        throw std::invalid_argument("epsilon_sweep_batched: cost vector length mismatch");
    const int n = g.node_count();
    const double base_lambda = principal_eigenpair(g).lambda;

    std::vector<std::pair<NodeSubset, double>> totals(budgets.size());
    detail::parallel_for(budgets.size(), workers, [&](std::size_t bi) {
        Graph cur = g;
        std::vector<int> orig(n);
        std::iota(orig.begin(), orig.end(), 0);
        NodeSubset total(n, 0);
        std::int64_t spent = 0;
        double shield_sum = 0.0;
        while (cur.node_count() > 0) {
            const EigenPair ep = principal_eigenpair(cur);
            CostVector cur_costs(cur.node_count());
            for (int i = 0; i < cur.node_count(); ++i) cur_costs[i] = costs[orig[i]];
            const QpInstance inst = build_qp(cur, ep, cur_costs, budgets[bi] - spent, b);
            const QpSolution sol = solve_budget_qp(inst);
            if (std::none_of(sol.x.begin(), sol.x.end(), [](auto v) { return v != 0; }))
                break;
            shield_sum += sol.objective;
            spent += sol.cost;
            std::vector<int> next_orig;
            for (int i = 0; i < cur.node_count(); ++i) {
                if (sol.x[i]) total[orig[i]] = 1;
                else next_orig.push_back(orig[i]);
            }
            cur = remove_nodes(cur, sol.x);
            orig = std::move(next_orig);
        }
        totals[bi] = {std::move(total), shield_sum};
    });

    std::vector<std::pair<NodeSubset, double>> distinct;
    std::map<NodeSubset, bool> seen;
    for (const auto& t : totals)
        if (seen.emplace(t.first, true).second) distinct.push_back(t);
    std::vector<ObjectivePoint> points(distinct.size());
    detail::parallel_for(distinct.size(), workers, [&](std::size_t i) {
        points[i] = score_selection(g, costs, base_lambda, distinct[i].first,
                                    "eps_qp_batched", distinct[i].second);
    });
    return nondominated_filter(points);
}

}  // namespace netimmune
