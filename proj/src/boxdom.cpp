#include "trivol/boxdom.hpp"

#include <algorithm>
#include <stdexcept>

namespace trivol {

Interval Interval::from_bounds(const Scalar& lo, const Scalar& hi) {
  if (lo >= hi) {
    throw std::invalid_argument("interval requires lo < hi, got [" + fraction_string(lo) +
                                ", " + fraction_string(hi) + "]");
  }
  return Interval{(lo + hi) / 2, (hi - lo) / 2};
}

Interval Interval::from_center(const Scalar& c, const Scalar& l) {
  if (l <= 0) {
    throw std::invalid_argument("interval requires half_length > 0, got " + fraction_string(l));
  }
  return Interval{c, l};
}

std::array<Scalar, 3> BoxDomain3::ratios() const {
  return {iv[0].center / iv[0].half_length, iv[1].center / iv[1].half_length,
          iv[2].center / iv[2].half_length};
}

bool Normalization::is_identity() const {
  return signs == std::array<int, 3>{1, 1, 1} && perm_to == std::array<int, 3>{0, 1, 2};
}

NormalizedDomain normalize(const BoxDomain3& domain) {
  Normalization rec;
  BoxDomain3 absed = domain;
  for (int i = 0; i < 3; ++i) {
    rec.signs[i] = domain.iv[i].center < 0 ? -1 : 1;
    if (rec.signs[i] < 0) absed.iv[i].center = -absed.iv[i].center;
  }

  auto r = absed.ratios();
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r[a] < r[b]; });

  NormalizedDomain out;
  for (int slot = 0; slot < 3; ++slot) {
    out.canonical.iv[slot] = absed.iv[order[slot]];
    rec.perm_to[order[slot]] = slot;
  }
  out.record = rec;
  return out;
}

BoxDomain3 denormalize(const BoxDomain3& canonical, const Normalization& record) {
  BoxDomain3 out;
  for (int i = 0; i < 3; ++i) {
    out.iv[i] = canonical.iv[record.perm_to[i]];
    if (record.signs[i] < 0) out.iv[i].center = -out.iv[i].center;
  }
  return out;
}

bool is_canonical(const BoxDomain3& domain) {
  for (const auto& iv : domain.iv) {
    if (iv.center < 0) return false;
  }
  auto r = domain.ratios();
  return r[0] <= r[1] && r[1] <= r[2];
}

}  // namespace trivol
