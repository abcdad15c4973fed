#ifndef CONFLICT_BOUNDS_HH
#define CONFLICT_BOUNDS_HH

#include <numbers>
#include <string>

namespace conflict
{
    /**
     * Constants the upper bounds only prove to exist. The logarithm base is a
     * knob for sensitivity runs; the formulas are written with natural logs.
     */
    struct BoundConstants
    {
        double surface = 1.0;          // multiplies the surface conflict bound
        double edges = 1.0;            // multiplies the edge-count conflict bound
        double adaptable_surface = 1.0;
        double lemma = 1.0;            // phase-A colour count constant
        double log_base = std::numbers::e;

        auto validate() const -> void;
        auto log(double x) const -> double;
    };

    /// A bound as a real together with the integer it implies.
    struct BoundValue
    {
        double value;
        long long ceiling;
    };

    auto bound_max_degree(long long max_degree) -> long long;

    auto lower_bound_avg_degree(double average_degree, const BoundConstants & constants = {}) -> long long;

    auto bound_edges(long long edges, long long multiplicity, const BoundConstants & constants = {}) -> BoundValue;

    auto bound_surface(long long genus, long long multiplicity, const BoundConstants & constants = {}) -> BoundValue;

    /// below_threshold is set when edges < 2^16, where the guarantee is not claimed.
    struct AdaptableEdgesBound
    {
        BoundValue bound;
        bool below_threshold;
    };

    auto bound_adaptable_edges(long long edges, long long multiplicity) -> AdaptableEdgesBound;

    auto bound_adaptable_surface(long long genus, long long multiplicity, const BoundConstants & constants = {}) -> BoundValue;

    /**
     * Orientation bound on surfaces. For genus > 0 this is H_g / 2 + 1 with
     * H_g the Heawood number; for the plane, 4 in general and 3 for
     * triangle-free graphs.
     */
    struct SurfaceOrientationBound
    {
        bool planar;
        int heawood_number;            // 0 when planar
        int numerator;                 // bound = numerator / denominator
        int denominator;
        int triangle_free_bound;       // planar only, 0 otherwise

        auto value() const -> double { return static_cast<double>(numerator) / denominator; }
        auto floor() const -> int { return numerator / denominator; }
    };

    auto heawood_number(long long genus) -> int;

    auto heawood_orientation_bound(long long genus) -> SurfaceOrientationBound;

    /// Smallest integer at least x, treating values within a few ulps of an
    /// integer as that integer.
    auto robust_ceil(double x) -> long long;
    auto robust_floor(double x) -> long long;
}

#endif
