#ifndef ODELIN_GEOMETRY_HPP
#define ODELIN_GEOMETRY_HPP

#include "odelin/linearize.hpp"

#include <array>
#include <optional>
#include <vector>

namespace odelin {

struct PoleOnPath : std::runtime_error {
    PoleOnPath() : std::runtime_error("coefficient pole on the integration path") {}
};

/// The six coefficients of the geodesic-type system
///   x'' = a x'^2 + 2b x'y' + c y'^2,  y'' = d x'^2 + 2e x'y' + f y'^2,
/// identified (with a sign flip) with the connection coefficients of a
/// 2-dimensional space.
struct ChristoffelSet {
    RationalFunction a, b, c, d, e, f;

    bool operator==(const ChristoffelSet&) const = default;
};

/// The free functions b and e; the remaining coefficients follow from the
/// root via f = g + 2b and a = h + 2e.
struct GaugeChoice {
    RationalFunction b, e;

    bool operator==(const GaugeChoice&) const = default;
};

ChristoffelSet complete(const RootCoefficients& root, const GaugeChoice& gauge);

/// The four independent curvature components R^i_{j12} (the 34-index pair is
/// fixed to 12 by antisymmetry).
struct CurvatureComponents {
    RationalFunction r1_112, r1_212, r2_112, r2_212;

    bool all_zero() const {
        return r1_112.is_zero() && r1_212.is_zero() && r2_112.is_zero() && r2_212.is_zero();
    }
};

/// Curvature from the generic tensor formula (independent of the flatness
/// residual expressions below).
CurvatureComponents curvature(const ChristoffelSet& cs);

/// The four first-order flatness residuals; all zero iff the curvature
/// vanishes.
std::array<RationalFunction, 4> geodesic_conditions(const ChristoffelSet& cs);

/// Bounded template search for a gauge making all four residuals vanish:
/// b and e range over sums of at most two monomials with exponents in
/// [-bound, bound]. Exhaustion is not a proof of nonexistence.
std::optional<GaugeChoice> gauge_search(const RootCoefficients& root, int bound);

/// Metric components (E, F, G) = (p, q, r) at a point.
struct MetricState {
    double p = 1.0, q = 0.0, r = 1.0;
};

struct Point {
    double x = 0.0, y = 0.0;
};

/// Fourth-order Runge-Kutta integration of the linear metric system along a
/// polyline, fixed step count per unit length.
MetricState metric_integrate(const ChristoffelSet& cs, Point start, MetricState state,
                             const std::vector<Point>& path, int steps_per_unit = 1024);

struct PathIndependenceReport {
    MetricState axis_first;
    MetricState diagonal;
    double max_discrepancy = 0.0;
};

/// Integrates to the target along two canonical polylines (axis-first and
/// straight) and reports the largest component discrepancy; a numeric witness
/// of flatness.
PathIndependenceReport path_independence_check(const ChristoffelSet& cs, Point start,
                                               MetricState state, Point target,
                                               int steps_per_unit = 1024);

} // namespace odelin

#endif
