#include "netimmune/moea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netimmune/rng.hpp"

namespace netimmune {

std::pair<double, std::int64_t> evaluate(const Graph& g, const CostVector& costs,
                                         const NodeSubset& x) {
    if (static_cast<int>(costs.size()) != g.node_count())
        throw std::invalid_argument("evaluate: cost vector length != node count");
    return {eigen_drop(g, x), subset_cost(costs, x)};
}

Evaluator::Evaluator(const Graph& g, CostVector costs, bool memoize)
    : g_(g), costs_(std::move(costs)), memoize_(memoize) {
    if (static_cast<int>(costs_.size()) != g_.node_count())
        throw std::invalid_argument("Evaluator: cost vector length != node count");
    base_lambda_ = principal_eigenpair(g_).lambda;
    for (auto c : costs_) total_cost_ += c;
}

Objectives Evaluator::operator()(const NodeSubset& x) {
    validate_subset(g_, x);
    auto it = seen_.find(x);
    if (it != seen_.end() && memoize_) return evaluated_[it->second].obj;
    ++invocations_;
    Objectives obj;
    obj.delta_lambda =
        std::max(0.0, base_lambda_ - principal_eigenpair(remove_nodes(g_, x)).lambda);
    obj.cost = subset_cost(costs_, x);
    if (it == seen_.end()) {
        seen_.emplace(x, evaluated_.size());
        evaluated_.push_back({x, obj});
    }
    return obj;
}

static bool dominates_exact(const Objectives& a, const Objectives& b) {
    return a.delta_lambda >= b.delta_lambda && a.cost <= b.cost &&
           (a.delta_lambda > b.delta_lambda || a.cost < b.cost);
}

std::vector<std::vector<int>> nondominated_sort(std::span<const Objectives> points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated_by(n);
    std::vector<int> dom_count(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates_exact(points[i], points[j])) dominated_by[i].push_back(j);
            else if (dominates_exact(points[j], points[i])) ++dom_count[i];
        }
    std::vector<std::vector<int>> ranks;
    std::vector<int> current;
    for (int i = 0; i < n; ++i)
        if (dom_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        ranks.push_back(current);
        std::vector<int> next;
        for (int i : current)
            for (int j : dominated_by[i])
                if (--dom_count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return ranks;
}

std::vector<double> crowding_distance(std::span<const Objectives> front) {
    const int m = static_cast<int>(front.size());
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(m, 0.0);
    if (m <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    auto accumulate_axis = [&](auto value_of) {
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            const double va = value_of(a), vb = value_of(b);
            return va != vb ? va < vb : a < b;
        });
        dist[idx.front()] = kInf;
        dist[idx.back()] = kInf;
        const double range = value_of(idx.back()) - value_of(idx.front());
        if (range <= 0.0) return;
        for (int k = 1; k + 1 < m; ++k)
            dist[idx[k]] += (value_of(idx[k + 1]) - value_of(idx[k - 1])) / range;
    };
    accumulate_axis([&](int i) { return front[i].delta_lambda; });
    accumulate_axis([&](int i) { return static_cast<double>(front[i].cost); });
    return dist;
}

std::vector<double> hv_contribution_2d(std::span<const Objectives> front,
                                       std::pair<double, double> ref) {
    const int m = static_cast<int>(front.size());
    const auto [ref_delta, ref_cost] = ref;
    for (const auto& p : front)
        if (!(p.delta_lambda > ref_delta && static_cast<double>(p.cost) < ref_cost))
            throw std::invalid_argument(
                "hv_contribution_2d: reference point must be strictly worse than every point");
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (front[a].delta_lambda != front[b].delta_lambda)
            return front[a].delta_lambda < front[b].delta_lambda;
        if (front[a].cost != front[b].cost) return front[a].cost < front[b].cost;
        return a < b;
    });
    std::vector<double> contrib(m, 0.0);
    // Exact duplicates cover each other: all get 0. Unique points take the
    // staircase cell between their delta predecessor and cost successor.
    std::vector<int> unique_pts;
    for (int k = 0; k < m;) {
        int k2 = k;
        while (k2 + 1 < m && front[order[k2 + 1]].delta_lambda == front[order[k]].delta_lambda &&
               front[order[k2 + 1]].cost == front[order[k]].cost)
            ++k2;
        if (k2 == k) unique_pts.push_back(order[k]);
        k = k2 + 1;
    }
    for (std::size_t t = 0; t < unique_pts.size(); ++t) {
        const int i = unique_pts[t];
        const double d_prev =
            t == 0 ? ref_delta : front[unique_pts[t - 1]].delta_lambda;
        const double c_next = t + 1 == unique_pts.size()
                                  ? ref_cost
                                  : static_cast<double>(front[unique_pts[t + 1]].cost);
        contrib[i] = (front[i].delta_lambda - d_prev) *
                     (c_next - static_cast<double>(front[i].cost));
    }
    return contrib;
}

namespace {

struct RunState {
    const Graph& g;
    GaConfig cfg;
    Rng rng;
    Evaluator eval;
    std::int64_t events = 0;

    RunState(const Graph& graph, const CostVector& costs, const GaConfig& config)
        : g(graph), cfg(config), rng(config.seed), eval(graph, costs, config.memoize) {}

    Individual make(NodeSubset x) {
        Objectives obj = eval(x);
        ++events;
        return {std::move(x), obj};
    }
};

void validate_config(const GaConfig& c) {
    if (c.population_size < 2)
        throw std::invalid_argument("GaConfig: population_size must be >= 2");
    if (c.p_c < 0.0 || c.p_c > 1.0)
        throw std::invalid_argument("GaConfig: p_c must be in [0, 1]");
    if (c.p_m > 1.0 || (c.p_m < 0.0 && c.p_m != -1.0))
        throw std::invalid_argument("GaConfig: p_m must be in [0, 1] (or -1 for 1/n)");
    if (c.evaluation_budget < c.population_size)
        throw std::invalid_argument("GaConfig: evaluation_budget < population_size");
}

NodeSubset random_genotype(Rng& rng, int n) {
    NodeSubset x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.bernoulli(0.5) ? 1 : 0;
    return x;
}

std::vector<Individual> init_population(RunState& st,
                                        const std::vector<NodeSubset>* init) {
    const int n = st.g.node_count();
    std::vector<Individual> pop;
    pop.reserve(st.cfg.population_size);
    if (init)
        for (const auto& x : *init) {
            if (static_cast<int>(pop.size()) == st.cfg.population_size) break;
            pop.push_back(st.make(x));
        }
    while (static_cast<int>(pop.size()) < st.cfg.population_size)
        pop.push_back(st.make(random_genotype(st.rng, n)));
    return pop;
}

std::vector<Objectives> objectives_of(const std::vector<Individual>& pop) {
    std::vector<Objectives> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.obj);
    return objs;
}

/// Uniform crossover with probability p_c, else parent copies.
std::pair<NodeSubset, NodeSubset> crossover(Rng& rng, const NodeSubset& a,
                                            const NodeSubset& b, double p_c) {
    if (!rng.bernoulli(p_c)) return {a, b};
    NodeSubset c1(a.size()), c2(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool pick_a = rng.bernoulli(0.5);
        c1[i] = pick_a ? a[i] : b[i];
        c2[i] = pick_a ? b[i] : a[i];
    }
    return {c1, c2};
}

void mutate(Rng& rng, NodeSubset& x, double p_m) {
    for (auto& bit : x)
        if (rng.bernoulli(p_m)) bit ^= 1;
}

std::pair<double, double> resolve_reference(const RunState& st) {
    if (st.cfg.reference_point) return *st.cfg.reference_point;
    const double lambda = st.eval.base_lambda();
    const double ref_delta = lambda > 0.0 ? -0.05 * lambda : -1.0;
    return {ref_delta, static_cast<double>(st.eval.total_cost() + 1)};
}

double population_hv(const std::vector<Individual>& pop, std::pair<double, double> ref) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(pop.size());
    for (const auto& ind : pop)
        pts.emplace_back(ind.obj.delta_lambda, static_cast<double>(ind.obj.cost));
    return hypervolume_2d(pts, ref.first, ref.second);
}

GaRunResult finish(RunState& st, std::vector<Individual> pop, const char* method,
                   std::pair<double, double> ref, std::vector<double> hv_trace) {
    GaRunResult r;
    std::vector<ObjectivePoint> archive_pts;
    archive_pts.reserve(st.eval.evaluated().size());
    for (const auto& ind : st.eval.evaluated()) {
        ObjectivePoint p;
        p.delta_lambda = ind.obj.delta_lambda;
        p.cost = ind.obj.cost;
        p.method = method;
        p.nodes = subset_labels(st.g, ind.x);
        p.selection = ind.x;
        archive_pts.push_back(std::move(p));
    }
    r.front = nondominated_filter(archive_pts);
    r.population = std::move(pop);
    r.archive = st.eval.evaluated();
    r.evaluation_events = st.events;
    r.evaluator_invocations = st.eval.invocations();
    r.base_lambda = st.eval.base_lambda();
    r.reference_point = ref;
    r.population_hypervolume = std::move(hv_trace);
    return r;
}

/// Rank-then-crowding truncation; keeps whole ranks while they fit, then the
/// most-crowded remainder (ties by lower index, so the result is stable).
std::vector<Individual> select_survivors(std::vector<Individual> pool, int target) {
    if (static_cast<int>(pool.size()) <= target) return pool;
    const auto objs = objectives_of(pool);
    const auto ranks = nondominated_sort(objs);
    std::vector<Individual> out;
    out.reserve(target);
    for (const auto& rank : ranks) {
        const int room = target - static_cast<int>(out.size());
        if (room == 0) break;
        if (static_cast<int>(rank.size()) <= room) {
            for (int i : rank) out.push_back(std::move(pool[i]));
            continue;
        }
        std::vector<Objectives> rank_objs;
        rank_objs.reserve(rank.size());
        for (int i : rank) rank_objs.push_back(objs[i]);
        const auto crowd = crowding_distance(rank_objs);
        std::vector<int> order(rank.size());
        for (std::size_t k = 0; k < rank.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return crowd[a] != crowd[b] ? crowd[a] > crowd[b] : a < b;
        });
        for (int k = 0; k < room; ++k) out.push_back(std::move(pool[rank[order[k]]]));
    }
    return out;
}

}  // namespace

GaRunResult nsga2_run(const Graph& g, const CostVector& costs, const GaConfig& config,
                      const std::vector<NodeSubset>* init) {
    validate_config(config);
    RunState st(g, costs, config);
    const int n = g.node_count();
    const double p_m = config.p_m < 0 ? 1.0 / std::max(1, n) : config.p_m;
    const auto ref = resolve_reference(st);

    std::vector<Individual> pop = init_population(st, init);
    std::vector<double> hv_trace;
    if (config.track_population_hypervolume) hv_trace.push_back(population_hv(pop, ref));

    while (st.events < config.evaluation_budget) {
        const auto objs = objectives_of(pop);
        const auto ranks = nondominated_sort(objs);
        std::vector<int> rank_of(pop.size());
        std::vector<double> crowd(pop.size());
        for (std::size_t r = 0; r < ranks.size(); ++r) {
            std::vector<Objectives> rank_objs;
            rank_objs.reserve(ranks[r].size());
            for (int i : ranks[r]) rank_objs.push_back(objs[i]);
            const auto c = crowding_distance(rank_objs);
            for (std::size_t k = 0; k < ranks[r].size(); ++k) {
                rank_of[ranks[r][k]] = static_cast<int>(r);
                crowd[ranks[r][k]] = c[k];
            }
        }
        auto tournament = [&]() -> const Individual& {
            const int a = st.rng.uniform_int(0, static_cast<int>(pop.size()) - 1);
            const int b = st.rng.uniform_int(0, static_cast<int>(pop.size()) - 1);
            if (rank_of[b] < rank_of[a]) return pop[b];
            if (rank_of[a] < rank_of[b]) return pop[a];
            return crowd[b] > crowd[a] ? pop[b] : pop[a];
        };
        const std::int64_t want = std::min<std::int64_t>(
            config.population_size, config.evaluation_budget - st.events);
        std::vector<Individual> offspring;
        offspring.reserve(want);
        while (static_cast<std::int64_t>(offspring.size()) < want) {
            const Individual& pa = tournament();
            const Individual& pb = tournament();
            auto [c1, c2] = crossover(st.rng, pa.x, pb.x, config.p_c);
            mutate(st.rng, c1, p_m);
            offspring.push_back(st.make(std::move(c1)));
            if (static_cast<std::int64_t>(offspring.size()) < want) {
                mutate(st.rng, c2, p_m);
                offspring.push_back(st.make(std::move(c2)));
            }
        }
        for (auto& child : offspring) pop.push_back(std::move(child));
        pop = select_survivors(std::move(pop), config.population_size);
        if (config.track_population_hypervolume) hv_trace.push_back(population_hv(pop, ref));
    }
    return finish(st, std::move(pop), "nsga2", ref, std::move(hv_trace));
}

GaRunResult sms_emoa_run(const Graph& g, const CostVector& costs, const GaConfig& config,
                         const std::vector<NodeSubset>* init) {
    validate_config(config);
    RunState st(g, costs, config);
    const int n = g.node_count();
    const double p_m = config.p_m < 0 ? 1.0 / std::max(1, n) : config.p_m;
    const auto ref = resolve_reference(st);

    std::vector<Individual> pop = init_population(st, init);
    std::vector<double> hv_trace;
    if (config.track_population_hypervolume) hv_trace.push_back(population_hv(pop, ref));

    while (st.events < config.evaluation_budget) {
        const int pa = st.rng.uniform_int(0, static_cast<int>(pop.size()) - 1);
        const int pb = st.rng.uniform_int(0, static_cast<int>(pop.size()) - 1);
        auto [c1, c2] = crossover(st.rng, pop[pa].x, pop[pb].x, config.p_c);
        (void)c2;   // steady state: one offspring per step
        mutate(st.rng, c1, p_m);
        pop.push_back(st.make(std::move(c1)));

        const auto objs = objectives_of(pop);
        const auto ranks = nondominated_sort(objs);
        const auto& worst = ranks.back();
        int victim = worst.back();
        if (worst.size() > 1) {
            std::vector<Objectives> worst_objs;
            worst_objs.reserve(worst.size());
            for (int i : worst) worst_objs.push_back(objs[i]);
            const auto contrib = hv_contribution_2d(worst_objs, ref);
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < worst.size(); ++k)
                if (contrib[k] <= best) {   // <=: newest minimal contributor leaves
                    best = contrib[k];
                    victim = worst[k];
                }
        }
        pop.erase(pop.begin() + victim);
        if (config.track_population_hypervolume) hv_trace.push_back(population_hv(pop, ref));
    }
    return finish(st, std::move(pop), "sms_emoa", ref, std::move(hv_trace));
}

std::vector<NodeSubset> make_hybrid_init(const std::vector<Front>& fronts,
                                         int population_size, const Graph& g,
                                         std::uint64_t seed) {
    if (population_size < 1)
        throw std::invalid_argument("make_hybrid_init: population_size must be >= 1");
    const int n = g.node_count();
    std::map<std::string, int> index_of;
    for (int v = 0; v < n; ++v) index_of.emplace(g.label(v), v);

    std::vector<NodeSubset> seeds;
    std::vector<Objectives> seed_objs;
    std::map<NodeSubset, bool> dedup;
    for (const auto& front : fronts)
        for (const auto& p : front.points) {
            NodeSubset x = p.selection;
            if (x.empty()) {
                x.assign(n, 0);
                for (const auto& label : p.nodes) {
                    auto it = index_of.find(label);
                    if (it == index_of.end())
                        throw std::invalid_argument("make_hybrid_init: unknown node label '" +
                                                    label + "'");
                    x[it->second] = 1;
                }
            }
            validate_subset(g, x);
            if (dedup.emplace(x, true).second) {
                seeds.push_back(std::move(x));
                seed_objs.push_back({p.delta_lambda, p.cost});
            }
        }

    if (static_cast<int>(seeds.size()) > population_size) {
        // Rank-then-crowding truncation on the stored objectives.
        std::vector<Individual> pool;
        pool.reserve(seeds.size());
        for (std::size_t i = 0; i < seeds.size(); ++i)
            pool.push_back({std::move(seeds[i]), seed_objs[i]});
        auto kept = select_survivors(std::move(pool), population_size);
        std::vector<NodeSubset> out;
        out.reserve(kept.size());
        for (auto& ind : kept) out.push_back(std::move(ind.x));
        return out;
    }
    Rng rng(seed);
    while (static_cast<int>(seeds.size()) < population_size)
        seeds.push_back(random_genotype(rng, n));
    return seeds;
}

}  // namespace netimmune
