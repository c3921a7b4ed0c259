#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "khcurves/detection.hpp"

using namespace khc;
using khc::testing::compiled;

namespace {

CurveComponent rational(std::int64_t p, std::int64_t q, int length = 1) {
  return CurveComponent::rational(Slope::make(p, q), length);
}
CurveComponent special(std::int64_t p, std::int64_t q, int length) {
  return CurveComponent::special(Slope::make(p, q), length);
}

const Multicurve p23{{special(0, 1, 4), rational(1, 2)}};

}  // namespace

TEST_CASE("split detection examples") {
  const auto v = detect_split(direct_sum(compiled("e2"), shift_complex(compiled("a0"), 3, 1)));
  CHECK(v.split);
  CHECK(v.c_generators.empty());
  CHECK(v.components.size() == 2);
  CHECK_FALSE(detect_split(compiled("a-inf")).split);
  CHECK_FALSE(detect_split(compiled("bn-q13")).split);
  const auto w = detect_split(compiled("alpha-plus"));
  CHECK_FALSE(w.split);
  CHECK(w.c_generators.size() == 2);
}

TEST_CASE("split detection sees through contractible C pairs") {
  const Complex x = direct_sum(compiled("e1"), testing::id_pair(Vertex::C, 4, -1));
  CHECK(detect_split(x).split);
}

TEST_CASE("split detection on random fixtures, before and after the cone") {
  std::mt19937 rng(23);
  for (int i = 0; i < 80; ++i) {
    const bool split = i % 2 == 0;
    const Complex x = testing::random_fixture(rng, split);
    const auto v = detect_split(x);
    CHECK(v.split == split);
    CHECK(detect_split(cone_h(x)).split == split);
    CHECK(v.split == v.c_generators.empty());
  }
}

TEST_CASE("rational detection") {
  CHECK(detect_rational({{rational(1, 2)}}));
  CHECK_FALSE(detect_rational(p23));
  CHECK_FALSE(detect_rational({{rational(0, 1, 2)}}));
  CHECK_FALSE(detect_rational({}));
}

TEST_CASE("connectivity") {
  const auto v = connectivity_check(Connectivity::NoCrossing, {{rational(1, 2)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].component == 0);
  CHECK(connectivity_check(Connectivity::NoCrossing, {{rational(0, 1)}}).empty());
  CHECK(connectivity_check(Connectivity::NoCrossing, {{rational(1, 2, 2)}}).empty());
  CHECK(connectivity_check(Connectivity::Other, {{rational(1, 2)}}).empty());
  CHECK(parse_connectivity(connectivity_name(Connectivity::NoCrossing)) == Connectivity::NoCrossing);
  CHECK_THROWS_AS(parse_connectivity("sideways"), CurveError);
}

TEST_CASE("ecsc on s2(inf) and r1(0)") {
  const auto r = ecsc_scan({{special(1, 0, 2), rational(0, 1)}}, 3);
  REQUIRE(r.applicable);
  CHECK(r.rational_slope == 0);
  CHECK(r.special_count == 1);
  REQUIRE(r.case1.has_value());
  CHECK(r.case1->q_shifts == std::vector<int>{2});
  CHECK(r.case1->distinguished_by == "quantum grading");
  REQUIRE(r.case2.size() == 3);
  CHECK(r.case2[0].q_shifts == std::vector<int>{-2});
  CHECK(r.case2[1].q_shifts == std::vector<int>{-4});
  // the formula 8j - 4 - 4n at n = 3, j = 1, then the odd-n term
  CHECK(r.case2[2].q_shifts == std::vector<int>{-8, -2});
  CHECK(r.all_distinguished());
}

TEST_CASE("ecsc shift law for n up to 8") {
  const auto r = ecsc_scan({{special(1, 0, 2), rational(0, 1)}}, 8);
  REQUIRE(r.case2.size() == 8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> expected;
    for (int j = 1; j <= n / 2; ++j) expected.push_back(8 * j - 4 - 4 * n);
    if (n % 2 == 1) expected.push_back(-2);
    CAPTURE(n);
    CHECK(r.case2[static_cast<std::size_t>(n - 1)].q_shifts == expected);
    for (int s : expected) CHECK(s < 0);
  }
}

TEST_CASE("ecsc decided by dimensions when s = 2") {
  const auto r = ecsc_scan({{special(1, 0, 2), rational(2, 1)}}, 2);
  REQUIRE(r.applicable);
  CHECK(r.case1->rational_dims.plus == 2);
  CHECK(r.case1->rational_dims.minus == 4);
  CHECK(r.case1->distinguished_by == "dimension");
  CHECK(r.case1->q_shifts.empty());
  // |1 - sn| against |1 + sn|
  CHECK(r.case2[0].rational_dims.plus == 1);
  CHECK(r.case2[0].rational_dims.minus == 3);
}

TEST_CASE("ecsc inapplicable cases") {
  CHECK_FALSE(ecsc_scan({{rational(3, 1)}}).applicable);
  CHECK_FALSE(ecsc_scan({{special(1, 0, 2), rational(1, 1)}}).applicable);  // odd slope
  CHECK_FALSE(ecsc_scan({{special(0, 1, 2), rational(0, 1)}}).applicable);  // meets the vertical arc 3 times
  CHECK_FALSE(ecsc_scan({{special(1, 0, 2)}}).applicable);
  CHECK_FALSE(ecsc_scan({{CurveComponent::figure_eight(1)}}).applicable);
  CHECK_THROWS_AS(ecsc_scan(p23, 0), CurveError);
}

TEST_CASE("agccc branches") {
  SUBCASE("all zero with a special") {
    const auto r = agccc_report({{special(0, 1, 2), rational(0, 1)}}, 3);
    CHECK(r.branch == AgcccBranch::AllZeroWithSpecial);
    for (int n = -3; n <= 3; ++n) CHECK(r.special_q_shift.at(n) == 4 * n);
    CHECK(r.monotone);
    CHECK_FALSE(r.q_lower_bound.has_value());
  }
  SUBCASE("horizontally split") {
    CHECK(agccc_report({{rational(0, 1)}}).branch == AgcccBranch::HorizontallySplit);
  }
  SUBCASE("nonzero slope") {
    const auto r = agccc_report(p23, 8, -3);
    CHECK(r.branch == AgcccBranch::NonzeroSlope);
    CHECK(r.M == Fraction{1, 1});
    CHECK(r.N == 2);
    for (int n = -8; n <= 8; ++n) {
      const std::int64_t expected = n == 1 ? 6 : 4 + std::abs(2 - 2 * n);
      CHECK(r.dims.at(n) == expected);
    }
    CHECK(r.monotone);
    CHECK(r.separated_by_dimension == false);
    CHECK(r.q_lower_bound == -4);
    CHECK(r.connectivity_warnings.size() == 1);
  }
  SUBCASE("fractional bound") {
    const auto r = agccc_report({{rational(2, 3), special(0, 1, 2)}}, 4);
    CHECK(r.M == Fraction{3, 4});
    CHECK(r.N == 1);
  }
  SUBCASE("not of Kh type") {
    CHECK(agccc_report({{CurveComponent::arc(Slope::make(0, 1))}}).branch == AgcccBranch::Inapplicable);
    CHECK(agccc_report({}).branch == AgcccBranch::Inapplicable);
  }
}

TEST_CASE("agccc monotonicity beyond M on random multicurves") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    Multicurve c;
    const int k = testing::uniform(rng, 1, 3);
    for (int j = 0; j < k; ++j) {
      const int p = testing::uniform(rng, -3, 3);
      const int q = testing::uniform(rng, 1, 5);
      if (p == 0) c.components.push_back(special(0, 1, 2 * testing::uniform(rng, 1, 2)));
      else c.components.push_back(rational(p, q));
    }
    const auto r = agccc_report(c, 8);
    if (r.branch != AgcccBranch::NonzeroSlope) continue;
    for (const auto& [n, d] : r.dims) {
      if (n * r.M.den > r.M.num && r.dims.count(n + 1)) CHECK(r.dims.at(n + 1) > d);
      if (-n * r.M.den > r.M.num && r.dims.count(n - 1)) CHECK(r.dims.at(n - 1) > d);
    }
    CHECK(r.monotone);
  }
}

TEST_CASE("split closure") {
  CHECK(split_closure_analysis({{rational(1, 2)}}) == ClosureVerdict::NecessaryViolated);
  CHECK(split_closure_analysis({{rational(0, 1), special(0, 1, 2)}}) == ClosureVerdict::SufficientHolds);
  CHECK(split_closure_analysis({{rational(0, 1, 2)}}) == ClosureVerdict::Inconclusive);
}
