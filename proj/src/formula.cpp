#include "trivol/formula.hpp"

#include <stdexcept>

namespace trivol {

int classify(const BoxDomain3& d) {
  auto r = d.ratios();
  if (r[0] >= 1) return 1;
  if (r[1] >= 1) return 2;  // c1/l1 < 1 implied by the previous check
  if (r[2] >= 1) return 3;
  Scalar sum = r[0] + r[1] + r[2];
  if (sum >= 1 && r[1] + r[2] >= 1 + r[0]) return 4;
  if (sum >= 1) return 5;
  return 6;
}

Scalar case_formula(const BoxDomain3& d, int case_id) {
  auto r = d.ratios();
  Scalar L = 1;
  for (const auto& iv : d.iv) L *= iv.half_length * iv.half_length;
  switch (case_id) {
    case 1: return Scalar(8, 3) * L * (r[0] + 2 * r[1] + 2 * r[2]);
    case 2: return Scalar(8, 3) * L * (2 * r[1] + 2 * r[2] + 1);
    case 3: return Scalar(8, 3) * L * (r[1] + 2 * r[2] + 2);
    case 4: return Scalar(8, 3) * L * (r[1] + r[2] + 3);
    case 5: return Scalar(4, 3) * L * (r[0] + r[1] + r[2] + 7);
    case 6: return Scalar(32, 3) * L;
    default: throw std::out_of_range("case id must be 1..6");
  }
}

Scalar hull_volume(const BoxDomain3& d) { return case_formula(d, classify(d)); }

Scalar hull_volume_nonneg(const BoxDomain3& d) {
  for (const auto& iv : d.iv) {
    if (iv.center < iv.half_length) {
      throw std::domain_error("nonnegative-bound formula requires l_i <= c_i");
    }
  }
  auto r = d.ratios();
  if (!(r[0] <= r[1] && r[1] <= r[2])) {
    throw std::domain_error("nonnegative-bound formula requires ordered ratios");
  }
  Scalar L = 1;
  for (const auto& iv : d.iv) L *= iv.half_length * iv.half_length;
  return Scalar(8, 3) * L * (r[0] + 2 * r[1] + 2 * r[2]);
}

Table1Row table1_subcases(int case_id) {
  switch (case_id) {
    case 1: return {1, 1, 1};
    case 2: return {2, 2, 1};
    case 3: return {2, 3, 1};
    case 4: return {2, 3, 2};
    case 5: return {3, 3, 2};
    case 6: return {4, 3, 2};
    default: throw std::out_of_range("case id must be 1..6");
  }
}

VolumeReport hull_volume_any(const BoxDomain3& domain) {
  NormalizedDomain nd = normalize(domain);

  VolumeReport rep;
  rep.raw = domain;
  rep.canonical = nd.canonical;
  rep.record = nd.record;

  VolQ vq = vol3_Q(nd.canonical);
  rep.vol_q = vq.value;
  rep.volq_subcase = vq.subcase;
  rep.vol_r = vol3_R(nd.canonical);

  MixedVolume qqr = mixed_volume_QQR(nd.canonical);
  MixedVolume qrr = mixed_volume_QRR(nd.canonical);
  rep.v_qqr = qqr.value;
  rep.qqr_subcase = qqr.subcase;
  rep.v_qrr = qrr.value;
  rep.qrr_subcase = qrr.subcase;
  rep.z_qqr = z_values_QQR(nd.canonical);
  rep.z_qrr = z_values_QRR(nd.canonical);

  rep.theorem6_case = classify(nd.canonical);
  rep.closed_form = case_formula(nd.canonical, rep.theorem6_case);
  rep.assembled = assemble_volume(rep.vol_q, rep.v_qqr, rep.v_qrr, rep.vol_r,
                                  nd.canonical.iv[2].half_length);
  if (rep.closed_form != rep.assembled) {
    throw std::logic_error("closed form " + fraction_string(rep.closed_form) +
                           " disagrees with assembled value " + fraction_string(rep.assembled));
  }
  return rep;
}

}  // namespace trivol
