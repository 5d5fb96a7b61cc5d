#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netimmune/graph.hpp"

namespace netimmune {

/// Objective-space tolerance on the eigen-drop axis. Two drops closer than
/// this are treated as ties; costs are integers and compare exactly.
inline constexpr double kDeltaTol = 1e-9;

/// One candidate immunization set in objective space, with provenance.
struct ObjectivePoint {
    double delta_lambda = 0.0;
    std::int64_t cost = 0;
    std::string method;
    std::vector<std::string> nodes;      ///< original node labels
    NodeSubset selection;                ///< optional genotype (may be empty)
    std::optional<double> shield_value;  ///< proxy objective, when one exists
};

/// Cost-sorted mutually non-dominated set: costs strictly increase and so
/// does delta_lambda along the sort. Produced by nondominated_filter.
struct Front {
    std::vector<ObjectivePoint> points;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

/// Best delta attained at each cost by at least k of several runs.
struct AttainmentCurve {
    std::vector<ObjectivePoint> points;
    int k = 1;
};

/// a dominates b: a is no worse in both objectives and strictly better in at
/// least one, under the kDeltaTol tie band on delta_lambda.
bool dominates(double a_delta, std::int64_t a_cost, double b_delta, std::int64_t b_cost);
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

/// Keeps exactly the points not dominated by any input point, then collapses
/// groups with equal cost (their deltas tie within kDeltaTol, or they would
/// have dominated each other) to a single representative: largest delta,
/// provenance ties broken by method then node labels. Sorted by ascending
/// cost.
///
/// The tolerance makes pairwise dominance non-transitive, so this is the
/// literal quadratic predicate rather than a sweep; fronts here are small.
Front nondominated_filter(const std::vector<ObjectivePoint>& points);

/// Boundary of the objective region weakly dominated by at least k of the
/// runs: for each candidate cost c, the k-th best of the runs' individual
/// best-delta-at-cost<=c envelopes. Weak dominance is exact here (no delta
/// tolerance). k = 1 equals the non-dominated filter of the union. Points
/// carry method = "attainment".
AttainmentCurve first_attainment_curve(const std::vector<std::vector<ObjectivePoint>>& runs,
                                       int k = 1);

/// Area of the union of rectangles spanned by the points against ref in the
/// minimization orientation (-delta, cost). ref must be strictly worse than
/// every point in both objectives. Order- and duplicate-invariant;
/// dominated input points contribute nothing.
double hypervolume_2d(std::span<const ObjectivePoint> points, const ObjectivePoint& ref);
double hypervolume_2d(std::span<const std::pair<double, double>> points,
                      double ref_delta, double ref_cost);

}  // namespace netimmune
