#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trivol/hullgeom.hpp"

namespace trivol {

/// A cross-section point in (f, x1, x2) space.
struct Point3 {
  Scalar a, b, c;
  bool operator==(const Point3&) const = default;
};

/// Exact volume of the 3D convex hull of the given points.
/// Incremental insertion with exact orientation predicates (denominators are
/// cleared so the predicates run over integers). Degenerate input returns 0.
Scalar hull3d_volume(const std::vector<Point3>& points);

/// Floating-point variant used by the optional floating oracle mode.
/// A facet is treated as visible only when the orientation determinant
/// exceeds eps scaled by the coordinate magnitudes.
double hull3d_volume_f(const std::vector<std::array<double, 3>>& points, double eps = 1e-12);

/// The 16 points (1-t) q_i + t r_j projected to (f, x1, x2); their hull is
/// the Minkowski-combination cross-section at parameter t in [0, 1].
std::vector<Point3> slice_points(const BoxDomain3& canonical, const Scalar& t);

/// Cross-section quadrature oracle: slice hull volumes at t in {0, 1/3, 2/3, 1}
/// combined by the Simpson 3/8 rule over x3, exact for the cubic integrand.
Scalar oracle_volume_quadrature(const BoxDomain3& canonical);
double oracle_volume_quadrature_f(const BoxDomain3& canonical);

/// True iff p is a convex combination of the eight vertices, decided by an
/// exact phase-1 simplex on the 5x8 feasibility system.
bool lp_membership(const Point4& p, const std::array<Point4, 8>& vertices);

struct McEstimate {
  double estimate;
  double std_error;  // sample sd of the hit indicator * bounding volume / sqrt(n)
  std::uint64_t samples;
  std::uint64_t seed;
};

/// Rejection-sampling estimate over the vertex-derived bounding box.
/// SplitMix64 streams are derived per batch from (seed, batch index), so the
/// result is deterministic for a fixed seed regardless of thread count.
McEstimate oracle_volume_montecarlo(const BoxDomain3& canonical, std::uint64_t samples,
                                    std::uint64_t seed, unsigned threads = 0);

}  // namespace trivol
