#pragma once

#include "trivol/mixedvol.hpp"

namespace trivol {

/// Six-case classifier over canonical domains. Conditions are evaluated
/// exactly, in printed order; the cases partition the parameter space.
int classify(const BoxDomain3& canonical);

/// Evaluates the closed form of the given case regardless of whether the
/// domain actually lies in that case (used by the boundary-continuity tests).
Scalar case_formula(const BoxDomain3& canonical, int case_id);

/// Closed-form 4D hull volume of a canonical domain.
Scalar hull_volume(const BoxDomain3& canonical);

/// Nonnegative-bound formula (8/3) l1^2 l2^2 l3^2 (r1 + 2 r2 + 2 r3).
/// Throws std::domain_error unless l_i <= c_i for all i and the ratios are ordered.
Scalar hull_volume_nonneg(const BoxDomain3& canonical);

struct Table1Row {
  int qqr;   // 1..4
  int qrr;   // 1..3
  int volq;  // 1..2
};
Table1Row table1_subcases(int case_id);

/// Full derivation record for one domain.
struct VolumeReport {
  BoxDomain3 raw;
  BoxDomain3 canonical;
  Normalization record;
  Scalar vol_q, vol_r, v_qqr, v_qrr;
  int volq_subcase, qqr_subcase, qrr_subcase;
  int theorem6_case;
  Scalar closed_form;  // six-case formula
  Scalar assembled;    // (l3/2)(volQ + vQQR + vQRR + volR); equal by theorem
  ZValueReport z_qqr, z_qrr;
};

/// Normalizes an arbitrary valid domain and runs the whole pipeline.
/// Throws std::logic_error if the closed form and the assembled value differ.
VolumeReport hull_volume_any(const BoxDomain3& domain);

}  // namespace trivol
