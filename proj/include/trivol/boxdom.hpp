#pragma once

#include <array>

#include "trivol/rational.hpp"

namespace trivol {

/// Interval in center/half-length form: [c - l, c + l] with l > 0.
struct Interval {
  Scalar center;
  Scalar half_length;

  /// Builds from bounds: c = (lo+hi)/2, l = (hi-lo)/2.
  /// Throws std::invalid_argument unless lo < hi.
  static Interval from_bounds(const Scalar& lo, const Scalar& hi);

  /// Throws std::invalid_argument unless l > 0.
  static Interval from_center(const Scalar& c, const Scalar& l);

  Scalar lo() const { return center - half_length; }
  Scalar hi() const { return center + half_length; }

  bool operator==(const Interval&) const = default;
};

/// A 3-variable box domain.
struct BoxDomain3 {
  std::array<Interval, 3> iv;  // variables 1..3 at indices 0..2

  /// (c1/l1, c2/l2, c3/l3), exact.
  std::array<Scalar, 3> ratios() const;

  bool operator==(const BoxDomain3&) const = default;
};

/// Sign flips and relabeling mapping a raw domain to canonical form.
struct Normalization {
  std::array<int, 3> signs;    // sigma_i in {-1,+1}; sign(0) = +1
  std::array<int, 3> perm_to;  // original variable i lands in canonical slot perm_to[i] (0-based)

  bool is_identity() const;
};

struct NormalizedDomain {
  BoxDomain3 canonical;
  Normalization record;
};

/// Takes |c_i|, then stably relabels variables so c1/l1 <= c2/l2 <= c3/l3.
/// Half-lengths travel with their variable and are never altered.
NormalizedDomain normalize(const BoxDomain3& domain);

/// Inverse mapping: undoes the permutation, then re-applies the sign flips.
BoxDomain3 denormalize(const BoxDomain3& canonical, const Normalization& record);

/// True iff all centers are nonnegative and the ratios are nondecreasing.
bool is_canonical(const BoxDomain3& domain);

}  // namespace trivol
