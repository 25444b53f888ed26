#include <doctest.h>

#include "support/testrand.hpp"
#include "trivol/formula.hpp"
#include "trivol/oracle.hpp"

using namespace trivol;
using testsupport::Rng;

namespace {

const BoxDomain3 kUnitBox{{Interval{0, 1}, Interval{0, 1}, Interval{0, 1}}};
const BoxDomain3 kWorked{{Interval{1, 3}, Interval{2, 1}, Interval{5, 2}}};

BoxDomain3 ratio_domain(const Scalar& r1, const Scalar& r2, const Scalar& r3) {
  return BoxDomain3{{Interval{r1, 1}, Interval{r2, 1}, Interval{r3, 1}}};
}

}  // namespace

TEST_CASE("classifier") {
  CHECK(classify(kWorked) == 2);
  CHECK(classify(kUnitBox) == 6);
  CHECK(classify(BoxDomain3{{Interval{2, 1}, Interval{3, 1}, Interval{4, 1}}}) == 1);
}

TEST_CASE("classifier partition totality including boundaries") {
  // Boundary configurations: ratios exactly 0 and 1, ratio-sum exactly 1.
  const std::array<BoxDomain3, 7> boundary = {
      ratio_domain(1, 1, 1),
      ratio_domain(0, 1, 1),
      ratio_domain(0, 0, 1),
      ratio_domain(0, 0, 0),
      ratio_domain(0, Scalar(1, 2), Scalar(1, 2)),
      ratio_domain(Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)),
      ratio_domain(Scalar(1, 4), Scalar(1, 4), Scalar(1, 2)),
  };
  for (const BoxDomain3& d : boundary) {
    int c = classify(d);
    CHECK(c >= 1);
    CHECK(c <= 6);
  }

  Rng rng(0x80808);
  for (int iter = 0; iter < 300; ++iter) {
    int c = classify(testsupport::rand_canonical(rng));
    CHECK(c >= 1);
    CHECK(c <= 6);
  }
}

TEST_CASE("closed-form volume") {
  CHECK(hull_volume(kWorked) == 960);
  CHECK(hull_volume(kUnitBox) == Scalar(32, 3));
  CHECK(hull_volume(BoxDomain3{{Interval{2, 1}, Interval{3, 1}, Interval{4, 1}}}) ==
        Scalar(128, 3));
}

TEST_CASE("nonnegative-bound formula") {
  BoxDomain3 d{{Interval{2, 1}, Interval{3, 1}, Interval{4, 1}}};
  CHECK(hull_volume_nonneg(d) == Scalar(128, 3));

  BoxDomain3 edge{{Interval{1, 1}, Interval{1, 1}, Interval{1, 1}}};  // box [0,2]^3
  CHECK(hull_volume_nonneg(edge) == Scalar(40, 3));
  CHECK(hull_volume(edge) == Scalar(40, 3));

  CHECK_THROWS_AS(hull_volume_nonneg(kWorked), std::domain_error);  // c1 < l1
}

TEST_CASE("Table 1 rows") {
  CHECK(table1_subcases(1).qqr == 1);
  CHECK(table1_subcases(1).qrr == 1);
  CHECK(table1_subcases(1).volq == 1);
  CHECK(table1_subcases(2).qqr == 2);
  CHECK(table1_subcases(2).qrr == 2);
  CHECK(table1_subcases(2).volq == 1);
  CHECK(table1_subcases(6).qqr == 4);
  CHECK(table1_subcases(6).qrr == 3);
  CHECK(table1_subcases(6).volq == 2);
}

TEST_CASE("full pipeline on arbitrary domains") {
  {
    BoxDomain3 raw{{Interval::from_bounds(3, 7), Interval::from_bounds(-2, 4),
                    Interval::from_bounds(-3, -1)}};
    VolumeReport rep = hull_volume_any(raw);
    CHECK(rep.closed_form == 960);
    CHECK(rep.assembled == 960);
    CHECK(rep.theorem6_case == 2);
    CHECK(rep.vol_q == 72);
    CHECK(rep.vol_r == 168);
    CHECK(rep.v_qqr == 360);
    CHECK(rep.v_qrr == 360);
  }
  {
    BoxDomain3 raw{{Interval::from_bounds(-1, 1), Interval::from_bounds(-1, 1),
                    Interval::from_bounds(-1, 1)}};
    CHECK(hull_volume_any(raw).closed_form == Scalar(32, 3));
  }
  {
    BoxDomain3 raw{{Interval::from_bounds(1, 3), Interval::from_bounds(2, 4),
                    Interval::from_bounds(3, 5)}};
    VolumeReport rep = hull_volume_any(raw);
    CHECK(rep.closed_form == hull_volume_nonneg(rep.canonical));
  }
}

TEST_CASE("pipeline identity and Table 1 conformance on random domains") {
  Rng rng(0x90909);
  for (int iter = 0; iter < 200; ++iter) {
    BoxDomain3 raw = testsupport::scramble(rng, testsupport::rand_canonical(rng));
    VolumeReport rep = hull_volume_any(raw);
    CAPTURE(iter);

    CHECK(rep.closed_form == rep.assembled);
    CHECK(rep.closed_form ==
          assemble_volume(rep.vol_q, rep.v_qqr, rep.v_qrr, rep.vol_r,
                          rep.canonical.iv[2].half_length));

    Table1Row row = table1_subcases(rep.theorem6_case);
    CHECK(rep.qqr_subcase == row.qqr);
    CHECK(rep.qrr_subcase == row.qrr);
    CHECK(rep.volq_subcase == row.volq);
  }
}

TEST_CASE("adjacent case formulas agree on the boundary surfaces") {
  Rng rng(0xA0A0A);
  auto rat = [&](const Scalar& lo, const Scalar& hi) { return testsupport::rat_in(rng, lo, hi); };

  for (int iter = 0; iter < 60; ++iter) {
    CAPTURE(iter);
    {
      // cases 1/2 at r1 = 1
      Scalar r2 = rat(1, 3);
      BoxDomain3 d = ratio_domain(1, r2, r2 + rat(0, 2));
      CHECK(case_formula(d, 1) == case_formula(d, 2));
    }
    {
      // cases 2/3 at r2 = 1
      BoxDomain3 d = ratio_domain(rat(0, Scalar(9, 10)), 1, rat(1, 3));
      CHECK(case_formula(d, 2) == case_formula(d, 3));
    }
    {
      // cases 3/4 at r3 = 1 (with r2 + r3 >= 1 + r1)
      Scalar r2 = rat(0, Scalar(9, 10));
      BoxDomain3 d = ratio_domain(rat(0, r2), r2, 1);
      CHECK(case_formula(d, 3) == case_formula(d, 4));
    }
    {
      // cases 3/5 at r3 = 1 (needs r2 + r3 < 1 + r1, so r1 = r2)
      Scalar r = rat(0, Scalar(9, 10));
      BoxDomain3 d = ratio_domain(r, r, 1);
      CHECK(case_formula(d, 3) == case_formula(d, 5));
    }
    {
      // cases 4/5 at r2 + r3 = 1 + r1; r1 in [max(0, 2 r2 - 1), r2) keeps
      // r1 <= r2 <= r3 < 1 with r3 = 1 + r1 - r2 on the surface.
      Scalar r2 = rat(Scalar(1, 2), Scalar(9, 10));
      Scalar lo = 2 * r2 - 1;
      if (lo < 0) lo = 0;
      Scalar r1 = rat(lo, r2);
      if (r1 == r2) r1 = lo;
      Scalar r3 = 1 + r1 - r2;
      BoxDomain3 d = ratio_domain(r1, r2, r3);
      REQUIRE(is_canonical(d));
      CHECK(case_formula(d, 4) == case_formula(d, 5));
    }
    {
      // cases 5/6 at r1 + r2 + r3 = 1
      Scalar r1 = rat(Scalar(1, 5), Scalar(1, 3));
      Scalar r2 = rat(r1, Scalar(1 - r1) / 2);
      Scalar r3 = 1 - r1 - r2;
      BoxDomain3 d = ratio_domain(r1, r2, r3);
      REQUIRE(is_canonical(d));
      CHECK(case_formula(d, 5) == case_formula(d, 6));
    }
    {
      // cases 4/6 at r1 + r2 + r3 = 1 with r1 = 0
      Scalar r2 = rat(Scalar(1, 10), Scalar(1, 2));
      BoxDomain3 d = ratio_domain(0, r2, 1 - r2);
      REQUIRE(is_canonical(d));
      CHECK(case_formula(d, 4) == case_formula(d, 6));
    }
  }
}

TEST_CASE("volume is invariant under sign flips and relabeling") {
  Rng rng(0xB0B0B);
  for (int iter = 0; iter < 30; ++iter) {
    BoxDomain3 d = testsupport::rand_canonical(rng);
    Scalar reference = hull_volume_any(d).closed_form;
    for (int mask = 0; mask < 8; ++mask) {
      for (int perm = 0; perm < 6; ++perm) {
        CHECK(hull_volume_any(testsupport::variant(d, mask, perm)).closed_form == reference);
      }
    }
  }
}

TEST_CASE("scaling one variable by s scales the volume by s^2") {
  Rng rng(0xC0C0C);
  for (int iter = 0; iter < 60; ++iter) {
    BoxDomain3 d = testsupport::rand_canonical(rng);
    Scalar before = hull_volume_any(d).closed_form;
    int i = static_cast<int>(rng.uniform(0, 2));
    Scalar s = testsupport::rat_in(rng, Scalar(1, 3), 4);
    if (s == 0) s = 1;
    BoxDomain3 scaled = d;
    scaled.iv[i].center *= s;
    scaled.iv[i].half_length *= s;
    CHECK(hull_volume_any(scaled).closed_form == s * s * before);
  }
}

TEST_CASE("agrees with the nonnegative-bound formula when all c >= l") {
  Rng rng(0xD0D0D);
  for (int iter = 0; iter < 100; ++iter) {
    BoxDomain3 d = testsupport::rand_canonical_for_case(rng, 1);
    CHECK(hull_volume(d) == hull_volume_nonneg(d));
  }
}
