#pragma once

#include <array>
#include <string>

#include "trivol/hullgeom.hpp"

namespace trivol {

struct ZEntry {
  int normal_index;        // 1..8
  Scalar value;            // support of the opposite tetra at the unscaled direction
  int chosen_vertex;       // 1..8, global vertex numbering; lowest index on ties
  std::string branch_tag;  // which closed-form branch is active for this direction
};

struct ZValueReport {
  std::array<ZEntry, 4> entries;
};

/// Branch selection for the support maximum at direction i, decided from the
/// ratio predicates alone (no dot products). Used as a cross-check against
/// the brute-force maximization.
struct BranchPrediction {
  int vertex;  // 1..8, the predicted maximizing vertex
  std::string tag;
};
BranchPrediction predicted_branch(const BoxDomain3& canonical, int normal_index);

/// z-values for V(Q,Q,R): i = 1..4, maximized over v5..v8 at +-u_i per the
/// indicator. Computed by brute force; branch tags record the active branch.
ZValueReport z_values_QQR(const BoxDomain3& canonical);

/// z-values for V(Q,R,R): i = 5..8, maximized over v1..v4 at u_i.
ZValueReport z_values_QRR(const BoxDomain3& canonical);

struct MixedVolume {
  Scalar value;
  int subcase;  // QQR: 1..4, QRR: 1..3
};

MixedVolume mixed_volume_QQR(const BoxDomain3& canonical);
MixedVolume mixed_volume_QRR(const BoxDomain3& canonical);

/// Exact value of the cross-section integral: (l3/2) * (volQ + vQQR + vQRR + volR).
/// Each cubic Bernstein weight integrates to 2*l3/4 over the x3 range.
Scalar assemble_volume(const Scalar& vol_q, const Scalar& v_qqr, const Scalar& v_qrr,
                       const Scalar& vol_r, const Scalar& l3);

}  // namespace trivol
