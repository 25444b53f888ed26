#include "trivol/mixedvol.hpp"

#include <cassert>
#include <stdexcept>

namespace trivol {

namespace {

struct Ratios {
  Scalar r1, r2, r3;
  Scalar sum() const { return r1 + r2 + r3; }
};

Ratios ratios_of(const BoxDomain3& d) {
  auto r = d.ratios();
  return {r[0], r[1], r[2]};
}

// Brute-force support maximum of `dir` over four vertices; global indexing
// starts at `base` (1 for Q's vertices, 5 for R's).
ZEntry brute_max(const std::array<Point4, 4>& verts, const Point4& dir, int normal_index,
                 int base) {
  ZEntry e{normal_index, verts[0].dot(dir), base, {}};
  for (int j = 1; j < 4; ++j) {
    Scalar val = verts[j].dot(dir);
    if (val > e.value) {
      e.value = val;
      e.chosen_vertex = base + j;
    }
  }
  return e;
}

}  // namespace

BranchPrediction predicted_branch(const BoxDomain3& d, int i) {
  Ratios r = ratios_of(d);
  bool flip = r.r3 < 1;  // indicator I
  switch (i) {
    case 1:
      if (!flip) return {8, "z1+"};
      if (r.r2 + r.r3 >= 1 + r.r1) return {7, "z1-(r2+r3>=1+r1)"};
      return {6, "z1-(r2+r3<1+r1)"};
    case 2:
      return flip ? BranchPrediction{7, "z2-"} : BranchPrediction{8, "z2+"};
    case 3:
      return flip ? BranchPrediction{8, "z3-"} : BranchPrediction{7, "z3+"};
    case 4:
      if (!flip) {
        if (r.r1 >= 1) return {5, "z4+(r1>=1)"};
        return {7, "z4+(r1<1)"};
      }
      if (r.sum() >= 1) return {8, "z4-(rsum>=1)"};
      return {5, "z4-(rsum<1)"};
    case 5:
      if (r.r2 >= 1) return {1, "z5(r2>=1)"};
      return {2, "z5(r2<1)"};
    case 6:
      if (r.r1 >= 1) return {1, "z6(r1>=1)"};
      return {3, "z6(r1<1)"};
    case 7:
      return {4, "z7"};
    case 8:
      if (r.r2 >= 1) return {2, "z8(r2>=1)"};
      return {1, "z8(r2<1)"};
    default:
      throw std::out_of_range("normal index must be 1..8");
  }
}

ZValueReport z_values_QQR(const BoxDomain3& d) {
  HullVertices verts = extreme_points(d);
  std::array<Point4, 4> r_verts{verts.v[4], verts.v[5], verts.v[6], verts.v[7]};
  bool flip = d.iv[2].center < d.iv[2].half_length;

  ZValueReport rep;
  for (int i = 1; i <= 4; ++i) {
    Point4 dir = facet_direction(d, i);
    if (flip) dir = -dir;
    ZEntry e = brute_max(r_verts, dir, i, 5);
    BranchPrediction pred = predicted_branch(d, i);
    e.branch_tag = pred.tag;
    // The branch selection proved for this region must agree on value.
    assert(e.value == verts.v[pred.vertex - 1].dot(dir));
    rep.entries[i - 1] = e;
  }
  return rep;
}

ZValueReport z_values_QRR(const BoxDomain3& d) {
  HullVertices verts = extreme_points(d);
  std::array<Point4, 4> q_verts{verts.v[0], verts.v[1], verts.v[2], verts.v[3]};

  ZValueReport rep;
  for (int i = 5; i <= 8; ++i) {
    Point4 dir = facet_direction(d, i);
    ZEntry e = brute_max(q_verts, dir, i, 1);
    BranchPrediction pred = predicted_branch(d, i);
    e.branch_tag = pred.tag;
    assert(e.value == verts.v[pred.vertex - 1].dot(dir));
    rep.entries[i - 5] = e;
  }
  return rep;
}

MixedVolume mixed_volume_QQR(const BoxDomain3& d) {
  Ratios r = ratios_of(d);
  const Scalar &c1 = d.iv[0].center, &c2 = d.iv[1].center, &c3 = d.iv[2].center;
  const Scalar &l1 = d.iv[0].half_length, &l2 = d.iv[1].half_length, &l3 = d.iv[2].half_length;
  Scalar k = Scalar(8, 3);

  MixedVolume mv;
  if (r.r1 >= 1) {
    mv = {k * l1 * l2 * (c3 * l1 * l2 + l3 * (2 * c2 * l1 + c1 * l2)), 1};
  } else if (r.sum() >= 1 && r.r2 + r.r3 >= 1 + r.r1) {
    mv = {k * l1 * l1 * l2 * (2 * c2 * l3 + l2 * (c3 + l3)), 2};
  } else if (r.sum() >= 1) {
    mv = {k * l1 * l2 * l3 * (c2 * l1 + l2 * (c1 + 2 * l1)), 3};
  } else {
    mv = {k * l1 * l1 * l2 * l2 * (3 * l3 - c3), 4};
  }

#ifndef NDEBUG
  ZValueReport z = z_values_QQR(d);
  Scalar zsum = z.entries[0].value + z.entries[1].value + z.entries[2].value + z.entries[3].value;
  assert(mv.value == 2 * l1 * l2 * zsum / 3);
#endif
  return mv;
}

MixedVolume mixed_volume_QRR(const BoxDomain3& d) {
  Ratios r = ratios_of(d);
  const Scalar &c1 = d.iv[0].center, &c2 = d.iv[1].center, &c3 = d.iv[2].center;
  const Scalar &l1 = d.iv[0].half_length, &l2 = d.iv[1].half_length, &l3 = d.iv[2].half_length;
  Scalar k = Scalar(8, 3);

  MixedVolume mv;
  if (r.r1 >= 1) {
    mv = {k * l1 * l2 * (c3 * l1 * l2 + l3 * (2 * c2 * l1 + c1 * l2)), 1};
  } else if (r.r2 >= 1) {
    mv = {k * l1 * l1 * l2 * (2 * c2 * l3 + l2 * (c3 + l3)), 2};
  } else {
    mv = {k * l1 * l1 * l2 * l2 * (c3 + 3 * l3), 3};
  }

#ifndef NDEBUG
  ZValueReport z = z_values_QRR(d);
  Scalar zsum = z.entries[0].value + z.entries[1].value + z.entries[2].value + z.entries[3].value;
  assert(mv.value == 2 * l1 * l2 * zsum / 3);
#endif
  return mv;
}

Scalar assemble_volume(const Scalar& vol_q, const Scalar& v_qqr, const Scalar& v_qrr,
                       const Scalar& vol_r, const Scalar& l3) {
  return l3 * (vol_q + v_qqr + v_qrr + vol_r) / 2;
}

}  // namespace trivol
