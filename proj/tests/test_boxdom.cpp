#include <doctest.h>

#include <algorithm>

#include "support/testrand.hpp"
#include "trivol/boxdom.hpp"

using namespace trivol;
using testsupport::Rng;

TEST_CASE("parse_scalar accepts integers, fractions, and finite decimals") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-17") == -17);
  CHECK(parse_scalar("2/6") == Scalar(1, 3));
  CHECK(parse_scalar("-4/8") == Scalar(-1, 2));
  CHECK(parse_scalar("0.25") == Scalar(1, 4));
  CHECK(parse_scalar("-1.5") == Scalar(-3, 2));
  CHECK(parse_scalar(" 7/2 ") == Scalar(7, 2));
  CHECK(parse_scalar("1.") == 1);
  CHECK(parse_scalar(".5") == Scalar(1, 2));

  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1.2.3"), std::invalid_argument);
}

TEST_CASE("fraction_string always renders p/q") {
  CHECK(fraction_string(Scalar(5)) == "5/1");
  CHECK(fraction_string(Scalar(-2, 3)) == "-2/3");
  CHECK(fraction_string(Scalar(0)) == "0/1");
}

TEST_CASE("interval from bounds") {
  Interval a = Interval::from_bounds(3, 7);
  CHECK(a.center == 5);
  CHECK(a.half_length == 2);

  Interval b = Interval::from_bounds(-1, 1);
  CHECK(b.center == 0);
  CHECK(b.half_length == 1);

  Interval c = Interval::from_bounds(-3, -1);
  CHECK(c.center == -2);
  CHECK(c.half_length == 1);
  CHECK(c.lo() == -3);
  CHECK(c.hi() == -1);

  CHECK_THROWS_AS(Interval::from_bounds(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Interval::from_bounds(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Interval::from_center(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Interval::from_center(0, -1), std::invalid_argument);
}

TEST_CASE("ratios") {
  BoxDomain3 d{{Interval{1, 3}, Interval{2, 1}, Interval{5, 2}}};
  auto r = d.ratios();
  CHECK(r[0] == Scalar(1, 3));
  CHECK(r[1] == 2);
  CHECK(r[2] == Scalar(5, 2));

  BoxDomain3 z{{Interval{0, 2}, Interval{0, 5}, Interval{0, 1}}};
  CHECK(z.ratios() == std::array<Scalar, 3>{0, 0, 0});

  BoxDomain3 u{{Interval{1, 1}, Interval{1, 1}, Interval{1, 1}}};
  CHECK(u.ratios() == std::array<Scalar, 3>{1, 1, 1});
}

TEST_CASE("normalize worked example") {
  BoxDomain3 d{{Interval{5, 2}, Interval{1, 3}, Interval{-2, 1}}};
  auto [canonical, rec] = normalize(d);

  CHECK(canonical.iv[0].center == 1);
  CHECK(canonical.iv[1].center == 2);
  CHECK(canonical.iv[2].center == 5);
  CHECK(canonical.iv[0].half_length == 3);
  CHECK(canonical.iv[1].half_length == 1);
  CHECK(canonical.iv[2].half_length == 2);
  CHECK(rec.signs == std::array<int, 3>{1, 1, -1});
  CHECK(rec.perm_to == std::array<int, 3>{2, 0, 1});  // reported as (3,1,2)
  CHECK(is_canonical(canonical));
}

TEST_CASE("normalize of an already canonical domain is the identity") {
  BoxDomain3 d{{Interval{0, 1}, Interval{0, 1}, Interval{0, 1}}};
  auto [canonical, rec] = normalize(d);
  CHECK(canonical == d);
  CHECK(rec.is_identity());
  CHECK(rec.signs == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("normalize sorts ratios stably") {
  BoxDomain3 d{{Interval{2, 1}, Interval{1, 1}, Interval{3, 1}}};
  auto [canonical, rec] = normalize(d);
  auto r = canonical.ratios();
  CHECK(r == std::array<Scalar, 3>{1, 2, 3});
  CHECK(rec.perm_to == std::array<int, 3>{1, 0, 2});
  CHECK(is_canonical(canonical));
}

TEST_CASE("normalize properties on random domains") {
  Rng rng(0x10101);
  for (int iter = 0; iter < 200; ++iter) {
    BoxDomain3 raw = testsupport::scramble(rng, testsupport::rand_canonical(rng));
    auto [canonical, rec] = normalize(raw);

    CAPTURE(iter);
    CHECK(is_canonical(canonical));

    // Idempotence.
    auto again = normalize(canonical);
    CHECK(again.canonical == canonical);
    CHECK(again.record.is_identity());

    // Half-length multiset and |center| multiset preserved.
    std::array<Scalar, 3> hl_raw, hl_can, c_raw, c_can;
    for (int i = 0; i < 3; ++i) {
      hl_raw[i] = raw.iv[i].half_length;
      hl_can[i] = canonical.iv[i].half_length;
      c_raw[i] = abs(raw.iv[i].center);
      c_can[i] = canonical.iv[i].center;
    }
    std::sort(hl_raw.begin(), hl_raw.end());
    std::sort(hl_can.begin(), hl_can.end());
    std::sort(c_raw.begin(), c_raw.end());
    std::sort(c_can.begin(), c_can.end());
    CHECK(hl_raw == hl_can);
    CHECK(c_raw == c_can);

    // Round trip.
    CHECK(denormalize(canonical, rec) == raw);
  }
}
