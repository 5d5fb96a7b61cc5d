#include "netimmune/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace netimmune {

bool dominates(double a_delta, std::int64_t a_cost, double b_delta, std::int64_t b_cost) {
    const bool delta_ge = a_delta >= b_delta - kDeltaTol;
    const bool delta_gt = a_delta > b_delta + kDeltaTol;
    const bool cost_le = a_cost <= b_cost;
    const bool cost_lt = a_cost < b_cost;
    return delta_ge && cost_le && (delta_gt || cost_lt);
}

bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
    return dominates(a.delta_lambda, a.cost, b.delta_lambda, b.cost);
}

static std::string joined_nodes(const ObjectivePoint& p) {
    std::string s;
    for (const auto& n : p.nodes) {
        s += n;
        s += ';';
    }
    return s;
}

Front nondominated_filter(const std::vector<ObjectivePoint>& points) {
    std::vector<ObjectivePoint> kept;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points)
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.delta_lambda != b.delta_lambda) return a.delta_lambda > b.delta_lambda;
        if (a.method != b.method) return a.method < b.method;
        return joined_nodes(a) < joined_nodes(b);
    });
    // Survivors sharing a cost are tolerance-ties; keep the first (max delta).
    Front front;
    for (auto& p : kept)
        if (front.points.empty() || front.points.back().cost != p.cost)
            front.points.push_back(std::move(p));
    return front;
}

AttainmentCurve first_attainment_curve(const std::vector<std::vector<ObjectivePoint>>& runs,
                                       int k) {
    if (runs.empty()) throw std::invalid_argument("first_attainment_curve: no runs");
    if (k < 1 || k > static_cast<int>(runs.size()))
        throw std::invalid_argument("first_attainment_curve: k must be in [1, #runs]");

    // Per-run envelope f_r(c) = best delta at cost <= c, as a step function
    // over (cost, prefix-max delta) breakpoints.
    struct Envelope {
        std::vector<std::int64_t> costs;
        std::vector<double> best;
    };
    std::vector<Envelope> envs;
    std::vector<std::int64_t> grid;
    for (const auto& run : runs) {
        std::vector<std::pair<std::int64_t, double>> pts;
        pts.reserve(run.size());
        for (const auto& p : run) {
            pts.emplace_back(p.cost, p.delta_lambda);
            grid.push_back(p.cost);
        }
        std::sort(pts.begin(), pts.end());
        Envelope e;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [c, d] : pts) {
            best = std::max(best, d);
            if (!e.costs.empty() && e.costs.back() == c)
                e.best.back() = best;
            else {
                e.costs.push_back(c);
                e.best.push_back(best);
            }
        }
        envs.push_back(std::move(e));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    AttainmentCurve curve;
    curve.k = k;
    std::vector<double> attained;
    double last = -std::numeric_limits<double>::infinity();
    for (std::int64_t c : grid) {
        attained.clear();
        for (const auto& e : envs) {
            auto it = std::upper_bound(e.costs.begin(), e.costs.end(), c);
            if (it == e.costs.begin()) continue;
            attained.push_back(e.best[it - e.costs.begin() - 1]);
        }
        if (static_cast<int>(attained.size()) < k) continue;
        std::nth_element(attained.begin(), attained.begin() + (k - 1), attained.end(),
                         std::greater<>());
        const double level = attained[k - 1];   // k-th largest envelope value
        if (level > last) {                     // exact comparison by design
            ObjectivePoint p;
            p.delta_lambda = level;
            p.cost = c;
            p.method = "attainment";
            curve.points.push_back(std::move(p));
            last = level;
        }
    }
    return curve;
}

double hypervolume_2d(std::span<const std::pair<double, double>> points,
                      double ref_delta, double ref_cost) {
    if (points.empty()) return 0.0;
    std::vector<std::pair<double, double>> pts(points.begin(), points.end());
    for (const auto& [d, c] : pts)
        if (!(d > ref_delta && c < ref_cost))
            throw std::invalid_argument(
                "hypervolume_2d: reference point must be strictly worse than every point");
    // Staircase sweep: ascending delta, keep only strict cost improvements
    // scanning from the largest delta down. Duplicates and dominated points
    // drop out here, which gives order/duplicate invariance.
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> stair;
    double min_cost = std::numeric_limits<double>::infinity();
    for (auto it = pts.rbegin(); it != pts.rend(); ++it)
        if (it->second < min_cost) {
            min_cost = it->second;
            stair.push_back(*it);
        }
    std::reverse(stair.begin(), stair.end());
    double area = 0.0;
    double prev_delta = ref_delta;
    for (const auto& [d, c] : stair) {
        area += (d - prev_delta) * (ref_cost - c);
        prev_delta = d;
    }
    return area;
}

double hypervolume_2d(std::span<const ObjectivePoint> points, const ObjectivePoint& ref) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        pts.emplace_back(p.delta_lambda, static_cast<double>(p.cost));
    return hypervolume_2d(pts, ref.delta_lambda, static_cast<double>(ref.cost));
}

}  // namespace netimmune
