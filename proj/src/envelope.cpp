#include "trivol/envelope.hpp"

#include <cmath>
#include <cstdio>

namespace trivol {

namespace {

using nlohmann::json;

std::string f64(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void put_scalar(json& j, const std::string& key, const Scalar& x) {
  j[key] = fraction_string(x);
  j[key + "_f64"] = double_string(x);
}

json z_report_json(const ZValueReport& z) {
  json arr = json::array();
  for (const auto& e : z.entries) {
    json item;
    item["normal"] = e.normal_index;
    item["value"] = fraction_string(e.value);
    item["vertex"] = e.chosen_vertex;
    item["branch"] = e.branch_tag;
    arr.push_back(item);
  }
  return arr;
}

json base_envelope(const std::string& command, const std::string& mode,
                   const VolumeReport& rep) {
  json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["mode"] = mode;
  j["input"] = domain_json(rep.raw);
  j["canonical"] = domain_json(rep.canonical);

  json norm;
  norm["signs"] = {rep.record.signs[0], rep.record.signs[1], rep.record.signs[2]};
  norm["permutation"] = {rep.record.perm_to[0] + 1, rep.record.perm_to[1] + 1,
                         rep.record.perm_to[2] + 1};
  j["normalization"] = norm;

  j["case"] = rep.theorem6_case;
  put_scalar(j, "volume", rep.closed_form);
  return j;
}

}  // namespace

json domain_json(const BoxDomain3& domain) {
  json j;
  json bounds = json::array();
  json centers = json::array();
  json half_lengths = json::array();
  json ratios = json::array();
  for (const auto& iv : domain.iv) {
    bounds.push_back({fraction_string(iv.lo()), fraction_string(iv.hi())});
    centers.push_back(fraction_string(iv.center));
    half_lengths.push_back(fraction_string(iv.half_length));
    ratios.push_back(fraction_string(iv.center / iv.half_length));
  }
  j["bounds"] = bounds;
  j["centers"] = centers;
  j["half_lengths"] = half_lengths;
  j["ratios"] = ratios;
  return j;
}

json volume_envelope(const VolumeReport& rep, const std::string& mode) {
  return base_envelope("volume", mode, rep);
}

json breakdown_envelope(const VolumeReport& rep, const std::string& mode) {
  json j = base_envelope("breakdown", mode, rep);
  put_scalar(j, "vol_q", rep.vol_q);
  put_scalar(j, "vol_r", rep.vol_r);
  put_scalar(j, "v_qqr", rep.v_qqr);
  put_scalar(j, "v_qrr", rep.v_qrr);
  j["volq_subcase"] = rep.volq_subcase;
  j["qqr_subcase"] = rep.qqr_subcase;
  j["qrr_subcase"] = rep.qrr_subcase;
  j["z_qqr"] = z_report_json(rep.z_qqr);
  j["z_qrr"] = z_report_json(rep.z_qrr);
  put_scalar(j, "closed_form", rep.closed_form);
  put_scalar(j, "assembled", rep.assembled);
  return j;
}

static nlohmann::json mc_json(const McEstimate& mc) {
  json j;
  j["estimate"] = f64(mc.estimate);
  j["std_error"] = f64(mc.std_error);
  j["samples"] = mc.samples;
  j["seed"] = mc.seed;
  return j;
}

json verify_envelope(const VolumeReport& rep, const Scalar& quadrature,
                     const std::optional<McEstimate>& mc, const std::string& mode) {
  json j = base_envelope("verify", mode, rep);
  put_scalar(j, "quadrature", quadrature);
  put_scalar(j, "abs_diff", abs(rep.closed_form - quadrature));
  Scalar rel;
  if (rep.closed_form == 0) {
    rel = abs(quadrature);
  } else {
    rel = abs(rep.closed_form - quadrature) / abs(rep.closed_form);
  }
  put_scalar(j, "rel_diff", rel);
  j["verified"] = rep.closed_form == quadrature;
  if (mc) j["mc"] = mc_json(*mc);
  return j;
}

json verify_envelope_float(const VolumeReport& rep, double quadrature,
                           const std::optional<McEstimate>& mc) {
  json j = base_envelope("verify", "float", rep);
  double closed = to_double(rep.closed_form);
  double abs_diff = std::abs(closed - quadrature);
  double rel = closed == 0 ? std::abs(quadrature) : abs_diff / std::abs(closed);
  j["quadrature_f64"] = f64(quadrature);
  j["abs_diff_f64"] = f64(abs_diff);
  j["rel_diff_f64"] = f64(rel);
  j["verified"] = rel <= 1e-9;
  if (mc) j["mc"] = mc_json(*mc);
  return j;
}

}  // namespace trivol
