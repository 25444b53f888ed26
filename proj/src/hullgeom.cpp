#include "trivol/hullgeom.hpp"

#include <stdexcept>

namespace trivol {

namespace {

Scalar det3(const Scalar& a0, const Scalar& a1, const Scalar& a2,  //
            const Scalar& b0, const Scalar& b1, const Scalar& b2,  //
            const Scalar& c0, const Scalar& c1, const Scalar& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

}  // namespace

HullVertices extreme_points(const BoxDomain3& d) {
  HullVertices out;
  for (int j = 0; j < 8; ++j) {
    Scalar x1 = (j & 1) ? d.iv[0].hi() : d.iv[0].lo();
    Scalar x2 = (j & 2) ? d.iv[1].hi() : d.iv[1].lo();
    Scalar x3 = (j & 4) ? d.iv[2].hi() : d.iv[2].lo();
    out.v[j] = Point4{x1 * x2 * x3, x1, x2, x3};
  }
  return out;
}

std::pair<Tetra, Tetra> split_QR(const HullVertices& verts) {
  Tetra q{{verts.v[0], verts.v[1], verts.v[2], verts.v[3]}, verts.v[0].x3};
  Tetra r{{verts.v[4], verts.v[5], verts.v[6], verts.v[7]}, verts.v[4].x3};
  // Q flattens exactly when the lower x3 bound is 0 (all f-coordinates
  // vanish); that is a valid boundary configuration with vol Q = 0. R can
  // never flatten while the half-lengths are positive.
  if (tetra_volume_det(r) == 0) {
    throw std::logic_error("degenerate upper tetrahedron from positive half-lengths");
  }
  return {q, r};
}

Scalar tetra_volume_det(const Tetra& t) {
  const Point4& o = t.vertices[0];
  Point4 e1 = t.vertices[1] - o;
  Point4 e2 = t.vertices[2] - o;
  Point4 e3 = t.vertices[3] - o;
  Scalar d = det3(e1.f, e1.x1, e1.x2, e2.f, e2.x1, e2.x2, e3.f, e3.x1, e3.x2);
  return abs(d) / 6;
}

VolQ vol3_Q(const BoxDomain3& d) {
  const Scalar& c3 = d.iv[2].center;
  const Scalar& l3 = d.iv[2].half_length;
  Scalar k = Scalar(8, 3) * d.iv[0].half_length * d.iv[0].half_length * d.iv[1].half_length *
             d.iv[1].half_length;
  if (c3 >= l3) return {k * (c3 - l3), 1};
  return {k * (l3 - c3), 2};
}

Scalar vol3_R(const BoxDomain3& d) {
  const Scalar& c3 = d.iv[2].center;
  const Scalar& l3 = d.iv[2].half_length;
  return Scalar(8, 3) * d.iv[0].half_length * d.iv[0].half_length * d.iv[1].half_length *
         d.iv[1].half_length * (c3 + l3);
}

Point4 facet_direction(const BoxDomain3& d, int i) {
  Scalar a1 = d.iv[0].lo(), b1 = d.iv[0].hi();
  Scalar a2 = d.iv[1].lo(), b2 = d.iv[1].hi();
  Scalar a3 = d.iv[2].lo(), b3 = d.iv[2].hi();
  switch (i) {
    case 1: return {1, -a2 * a3, -b1 * a3, 0};
    case 2: return {1, -b2 * a3, -a1 * a3, 0};
    case 3: return {-1, b2 * a3, b1 * a3, 0};
    case 4: return {-1, a2 * a3, a1 * a3, 0};
    case 5: return {1, -a2 * b3, -b1 * b3, 0};
    case 6: return {1, -b2 * b3, -a1 * b3, 0};
    case 7: return {-1, b2 * b3, b1 * b3, 0};
    case 8: return {-1, a2 * b3, a1 * b3, 0};
    default: throw std::out_of_range("facet direction index must be 1..8");
  }
}

std::pair<NormalSet, IndicatorI> outer_normals_Q(const BoxDomain3& d) {
  IndicatorI ind{d.iv[2].center < d.iv[2].half_length};
  Scalar scale = 2 * d.iv[0].half_length * d.iv[1].half_length;
  if (ind.value) scale = -scale;
  NormalSet ns;
  for (int i = 0; i < 4; ++i) ns.normals[i] = facet_direction(d, i + 1).scaled(scale);
  return {ns, ind};
}

NormalSet outer_normals_R(const BoxDomain3& d) {
  Scalar scale = 2 * d.iv[0].half_length * d.iv[1].half_length;
  NormalSet ns;
  for (int i = 0; i < 4; ++i) ns.normals[i] = facet_direction(d, i + 5).scaled(scale);
  return ns;
}

Support support(const Tetra& t, const Point4& direction) {
  Support best{t.vertices[0].dot(direction), 0};
  for (int j = 1; j < 4; ++j) {
    Scalar val = t.vertices[j].dot(direction);
    if (val > best.value) best = {val, j};
  }
  return best;
}

}  // namespace trivol
