#pragma once

#include <array>
#include <utility>

#include "trivol/boxdom.hpp"

namespace trivol {

/// A point (or direction) in (f, x1, x2, x3) space.
struct Point4 {
  Scalar f, x1, x2, x3;

  Point4 operator+(const Point4& o) const { return {f + o.f, x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
  Point4 operator-(const Point4& o) const { return {f - o.f, x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
  Point4 operator-() const { return {-f, -x1, -x2, -x3}; }
  Point4 scaled(const Scalar& s) const { return {f * s, x1 * s, x2 * s, x3 * s}; }
  Scalar dot(const Point4& o) const { return f * o.f + x1 * o.x1 + x2 * o.x2 + x3 * o.x3; }

  bool operator==(const Point4&) const = default;
};

/// The eight extreme points v1..v8, in the fixed order (x1 fastest, x3 slowest).
struct HullVertices {
  std::array<Point4, 8> v;  // v[0] is v1
};

/// Four vertices lying in a common x3-hyperplane.
struct Tetra {
  std::array<Point4, 4> vertices;
  Scalar plane_x3;
};

/// Area-weighted outer facet normals, including the 2*l1*l2 factor and,
/// for Q, the (-1)^I sign. All normals have zero x3-component.
struct NormalSet {
  std::array<Point4, 4> normals;
};

struct IndicatorI {
  bool value;  // true iff c3/l3 < 1
};

HullVertices extreme_points(const BoxDomain3& canonical);

/// Q = conv{v1..v4} at x3 = c3-l3, R = conv{v5..v8} at x3 = c3+l3.
std::pair<Tetra, Tetra> split_QR(const HullVertices& verts);

/// 3D volume of the simplex within its hyperplane: drop x3, |det|/6 in (f,x1,x2).
Scalar tetra_volume_det(const Tetra& t);

struct VolQ {
  Scalar value;
  int subcase;  // 1: c3/l3 >= 1, 2: c3/l3 < 1
};
VolQ vol3_Q(const BoxDomain3& canonical);
Scalar vol3_R(const BoxDomain3& canonical);

/// Unscaled facet direction u_i for i in 1..8 (1..4 belong to Q, 5..8 to R).
Point4 facet_direction(const BoxDomain3& canonical, int i);

std::pair<NormalSet, IndicatorI> outer_normals_Q(const BoxDomain3& canonical);
NormalSet outer_normals_R(const BoxDomain3& canonical);

struct Support {
  Scalar value;
  int argmax_vertex;  // position 0..3 within the tetra, lowest index on ties
};

/// h_T(u): max of the four vertex dot products.
Support support(const Tetra& t, const Point4& direction);

}  // namespace trivol
