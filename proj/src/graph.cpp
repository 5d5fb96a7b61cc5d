#include "netimmune/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "netimmune/rng.hpp"

namespace netimmune {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    adj_.assign(n, {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("Graph: self-loop on node " + std::to_string(a));
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<std::int64_t>(nbrs.size());
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(int a, int b) const {
    const auto& nbrs = adj_.at(a);
    if (b < 0 || b >= node_count()) throw std::out_of_range("Graph::has_edge");
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::int64_t Graph::degree_sum() const { return 2 * edge_count_; }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int v = 0; v < node_count(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

Graph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index_of;
    std::vector<std::pair<int, int>> edges;

    auto intern = [&](const std::string& tok) {
        auto it = index_of.find(tok);
        if (it != index_of.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        labels.push_back(tok);
        index_of.emplace(tok, id);
        return id;
    };

    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;           // blank
        if (a[0] == '#') continue;          // comment
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected exactly two node labels");
        const int ia = intern(a);
        const int ib = intern(b);
        if (ia == ib)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": self-loop on '" + a + "'");
        edges.emplace_back(ia, ib);
    }
    if (edges.empty()) throw std::invalid_argument("edge list is empty");
    return Graph(std::move(labels), edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list: " + path);
    try {
        return load_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

static std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

Graph generate_erdos_renyi(int n, std::int64_t edge_target, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (edge_target < 0 || edge_target > max_edges)
        throw std::invalid_argument("erdos_renyi: edge count out of range [0, " +
                                    std::to_string(max_edges) + "]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Dense-ish instances: shuffle an explicit pair list. Very large sparse
    // instances: rejection-sample distinct pairs instead of materializing
    // O(n^2) pairs. Both branches are deterministic for a given (n, m, seed).
    if (max_edges <= 4'000'000) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(max_edges));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        rng.partial_shuffle(pairs, edge_target);
        edges.assign(pairs.begin(), pairs.begin() + edge_target);
    } else {
        std::set<std::pair<int, int>> chosen;
        while (static_cast<std::int64_t>(chosen.size()) < edge_target) {
            int a = rng.uniform_int(0, n - 1);
            int b = rng.uniform_int(0, n - 1);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            chosen.emplace(a, b);
        }
        edges.assign(chosen.begin(), chosen.end());
    }
    return Graph(numeric_labels(n), edges);
}

Graph generate_barabasi_albert(int n, int attach, std::uint64_t seed) {
    if (attach < 1) throw std::invalid_argument("barabasi_albert: attach must be >= 1");
    if (n < attach + 1)
        throw std::invalid_argument("barabasi_albert: need n >= attach + 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Repeated-endpoint urn: drawing a uniform element is degree-proportional.
    std::vector<int> urn;
    const int core = attach + 1;
    for (int i = 0; i < core; ++i)
        for (int j = i + 1; j < core; ++j) {
            edges.emplace_back(i, j);
            urn.push_back(i);
            urn.push_back(j);
        }
    std::vector<int> targets;
    for (int v = core; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < attach) {
            const int t = urn[rng.uniform_u64(0, urn.size() - 1)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            urn.push_back(t);
            urn.push_back(v);
        }
    }
    return Graph(numeric_labels(n), edges);
}

Graph generate_barbell(int clique_size) {
    if (clique_size < 2) throw std::invalid_argument("barbell: clique size must be >= 2");
    const int c = clique_size;
    const int bridge = 2 * c;
    std::vector<std::pair<int, int>> edges;
    for (int base : {0, c})
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) edges.emplace_back(base + i, base + j);
    edges.emplace_back(0, bridge);   // attachment points are node 0 of each clique
    edges.emplace_back(c, bridge);
    return Graph(numeric_labels(2 * c + 1), edges);
}

EigenPair principal_eigenpair(const Graph& g) {
    const int n = g.node_count();
    EigenPair out;
    if (n == 0) return out;
    out.u.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    if (g.edge_count() == 0) return out;   // lambda = 0, uniform vector exact

    std::vector<double> u = out.u;
    std::vector<double> v(n);
    double mu_prev = std::numeric_limits<double>::infinity();
    constexpr std::int64_t kMaxIter = 1'000'000;
    for (std::int64_t iter = 0; iter < kMaxIter; ++iter) {
        // v = (A + I) u; the +1 shift separates lambda_max from -lambda_max.
        for (int i = 0; i < n; ++i) {
            double s = u[i];
            for (int j : g.neighbors(i)) s += u[j];
            v[i] = s;
        }
        double mu = 0.0;
        for (int i = 0; i < n; ++i) mu += u[i] * v[i];
        double resid2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = v[i] - mu * u[i];
            resid2 += r * r;
        }
        const double lambda = mu - 1.0;
        if (std::abs(mu - mu_prev) < 1e-12 &&
            std::sqrt(resid2) <= 1e-9 * std::max(1.0, lambda)) {
            out.lambda = lambda;
            out.u = u;
            return out;
        }
        mu_prev = mu;
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) u[i] = v[i] / norm;
    }
    throw ConvergenceError("principal_eigenpair: no convergence within 1e6 iterations");
}

void validate_subset(const Graph& g, const NodeSubset& s) {
    if (static_cast<int>(s.size()) != g.node_count())
        throw std::invalid_argument("selection vector length != node count");
    for (auto b : s)
        if (b > 1) throw std::invalid_argument("selection vector entries must be 0 or 1");
}

NodeSubset subset_from_indices(int n, const std::vector<int>& indices) {
    NodeSubset s(n, 0);
    for (int i : indices) {
        if (i < 0 || i >= n) throw std::invalid_argument("subset index out of range");
        s[i] = 1;
    }
    return s;
}

std::vector<int> subset_indices(const NodeSubset& s) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i]) out.push_back(i);
    return out;
}

std::vector<std::string> subset_labels(const Graph& g, const NodeSubset& s) {
    validate_subset(g, s);
    std::vector<std::string> out;
    for (int i : subset_indices(s)) out.push_back(g.label(i));
    return out;
}

Graph remove_nodes(const Graph& g, const NodeSubset& s) {
    validate_subset(g, s);
    const int n = g.node_count();
    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        if (s[v]) continue;
        new_id[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges())
        if (new_id[a] >= 0 && new_id[b] >= 0)
            edges.emplace_back(new_id[a], new_id[b]);
    return Graph(std::move(labels), edges);
}

double eigen_drop(const Graph& g, const NodeSubset& s) {
    validate_subset(g, s);
    const double before = principal_eigenpair(g).lambda;
    const double after = principal_eigenpair(remove_nodes(g, s)).lambda;
    return std::max(0.0, before - after);
}

CostVector degree_costs(const Graph& g) {
    CostVector c(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) c[v] = g.degree(v);
    return c;
}

std::int64_t subset_cost(const CostVector& costs, const NodeSubset& s) {
    if (costs.size() != s.size())
        throw std::invalid_argument("cost vector length != selection length");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) total += costs[i];
    return total;
}

Graph largest_component(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    int best_root = -1;
    int best_size = 0;
    std::vector<int> stack;
    for (int r = 0; r < n; ++r) {
        if (comp[r] != -1) continue;
        int size = 0;
        stack.push_back(r);
        comp[r] = r;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = r;
                    stack.push_back(w);
                }
        }
        if (size > best_size) {
            best_size = size;
            best_root = r;
        }
    }
    NodeSubset drop(n, 0);
    for (int v = 0; v < n; ++v)
        if (comp[v] != best_root) drop[v] = 1;
    return remove_nodes(g, drop);
}

}  // namespace netimmune
