#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netimmune {

/// Thrown on malformed edge-list input; message carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when the power iteration hits its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary selection vector over the nodes of a graph: x[i] == 1 means node i
/// is in the set. Kept as uint8_t so it maps cleanly to Python lists.
using NodeSubset = std::vector<std::uint8_t>;

using CostVector = std::vector<std::int64_t>;

/// Simple undirected graph: no self-loops, no multi-edges. Node identity is
/// the index; original input labels ride along for reporting.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels,
          const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    /// Neighbor lists are sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int a, int b) const;

    std::int64_t degree_sum() const;

    /// Edges as (i, j) with i < j, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && adj_ == other.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::int64_t edge_count_ = 0;
};

struct EigenPair {
    double lambda = 0.0;       ///< largest adjacency eigenvalue
    std::vector<double> u;     ///< unit principal eigenvector, entries >= 0
};

/// Reads a whitespace-delimited edge list: two labels per line, full-line
/// '#' comments and blank lines skipped. Labels are arbitrary strings and
/// get indices in order of first appearance. Duplicate edges collapse.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// G(n, m): m edges sampled uniformly without replacement from all unordered
/// pairs. Same (n, m, seed) always yields the same graph.
Graph generate_erdos_renyi(int n, std::int64_t edge_target, std::uint64_t seed);

/// Preferential attachment: complete seed core on (attach + 1) nodes, then
/// each new node attaches to `attach` distinct existing nodes chosen with
/// probability proportional to current degree.
Graph generate_barabasi_albert(int n, int attach, std::uint64_t seed);

/// Two K_c cliques joined through a single bridge node: node 0 of each
/// clique is the attachment point, the bridge is the last node (index 2c).
/// n = 2c + 1, m = c(c-1) + 2.
Graph generate_barbell(int clique_size);

/// Principal eigenpair via power iteration on A + I (the shift keeps the
/// dominant eigenvalue simple-signed for bipartite graphs). Starts from the
/// uniform positive vector, stops once the Rayleigh quotient moves < 1e-12
/// between iterations and the residual ||Au - lambda u|| <= 1e-9 * max(1,
/// lambda). Throws ConvergenceError after 1e6 iterations.
EigenPair principal_eigenpair(const Graph& g);

/// Validates a selection vector against g (size n, entries 0/1).
void validate_subset(const Graph& g, const NodeSubset& s);

NodeSubset subset_from_indices(int n, const std::vector<int>& indices);
std::vector<int> subset_indices(const NodeSubset& s);
std::vector<std::string> subset_labels(const Graph& g, const NodeSubset& s);

/// Induced subgraph on the nodes NOT selected by s. Survivors keep their
/// labels and relative order.
Graph remove_nodes(const Graph& g, const NodeSubset& s);

/// lambda(G) - lambda(G minus S), clamped to >= 0 (the true quantity is
/// nonnegative by eigenvalue interlacing; the clamp absorbs solver noise).
double eigen_drop(const Graph& g, const NodeSubset& s);

/// cost[i] = degree(i).
CostVector degree_costs(const Graph& g);

std::int64_t subset_cost(const CostVector& costs, const NodeSubset& s);

/// Largest connected component (ties broken by smallest contained index).
Graph largest_component(const Graph& g);

}  // namespace netimmune
