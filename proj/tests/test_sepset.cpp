#include <doctest.h>

#include <cmath>

#include "dynramsey/error.hpp"
#include "dynramsey/sepset.hpp"

using namespace dynramsey;

TEST_CASE("greedy_separated on the shift") {
  SUBCASE("duplicates collapse") {
    const Pattern a(3, 2);
    Pattern b(3, 2);
    b.set_cell(0, 0, 1);
    const std::vector<Pattern> stream{a, b, a, b, a};
    const auto set = greedy_separated(stream, ShiftDistance::from_exponent(1));
    REQUIRE(set.points.size() == 2);
    CHECK(set.points[0] == a);
    CHECK(set.points[1] == b);
    CHECK(set.maximal_wrt == Maximality::Stream);
  }
  SUBCASE("all w=3 patterns are pairwise 1/2-separated") {
    PatternEnumerator all(2, 3);
    const auto set = greedy_separated(all, ShiftDistance::from_exponent(1));
    CHECK(set.points.size() == 512);
    CHECK(set.maximal_wrt == Maximality::Exhaustive);
    CHECK(separation_check(set.points, set.epsilon).separated);
  }
}

TEST_CASE("separation_check") {
  std::vector<Pattern> all;
  PatternEnumerator e(2, 3);
  while (auto p = e.next()) all.push_back(*p);
  CHECK(separation_check(all, ShiftDistance::from_exponent(1)).separated);
  const auto coarse = separation_check(all, ShiftDistance::from_exponent(0));
  CHECK_FALSE(coarse.separated);
  REQUIRE(coarse.violation.has_value());
  // both differ first away from the origin: 000000000 and 000000001
  CHECK(coarse.violation->first == 0);
  CHECK(coarse.violation->second == 1);

  // subsets of a separated set stay separated
  std::vector<Pattern> half;
  for (std::size_t i = 0; i < all.size(); i += 3) half.push_back(all[i]);
  CHECK(separation_check(half, ShiftDistance::from_exponent(1)).separated);
}

TEST_CASE("greedy_separated on the torus") {
  const Matrix2 cat{2, 1, 1, 1};
  const TorusSystem sys(cat, multiply(cat, cat), 2.0, 2);
  std::vector<TorusPoint> grid;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) grid.push_back({i / 10.0, j / 10.0});
  const auto set = greedy_separated(sys, grid, 0.15);
  CHECK_FALSE(set.points.empty());
  CHECK(separation_check(sys, set.points, 0.15).separated);
  // every dropped grid point is within 0.15 of a kept point
  for (const auto& g : grid) {
    bool near = false;
    for (const auto& p : set.points) near = near || sys.distance(g, p) < 0.15;
    bool kept = false;
    for (const auto& p : set.points) kept = kept || (p.u == g.u && p.v == g.v);
    CHECK((near || kept));
  }
}

TEST_CASE("s_count_shift_exact agrees with exhaustive greedy counts") {
  CHECK(s_count_shift_exact(2, 0) == 2);
  CHECK(s_count_shift_exact(2, 1) == 512);
  CHECK(s_count_shift_exact(3, 1) == 19683);
  CHECK(s_count_shift_exact(2, 2) == BigInt(1) << 25);

  for (auto [k, n] : {std::pair{2, 0}, std::pair{3, 0}, std::pair{2, 1}, std::pair{3, 1}}) {
    PatternEnumerator all(k, 2 * n + 1);
    const auto set = greedy_separated(all, ShiftDistance::from_exponent(n));
    CHECK(BigInt(set.points.size()) == s_count_shift_exact(k, n));
  }
}

TEST_CASE("dimension_sequence") {
  const auto seq = shift_growth_sequence(2, 1, 4);
  const auto d = dimension_sequence(seq, Ratio{2, 1});
  REQUIRE(d.size() == 4);
  CHECK(d[0] == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(d[1] == doctest::Approx(12.5).epsilon(1e-12));
  CHECK(d[2] == doctest::Approx(49.0 / 3.0).epsilon(1e-12));
  for (int n = 1; n <= 4; ++n) {
    const double closed = (2.0 * n + 1) * (2.0 * n + 1) / n;
    CHECK(std::abs(d[n - 1] - closed) < 1e-9);
  }
  for (int n = 2; n < 4; ++n) CHECK(d[n] > d[n - 1]);

  const auto d3 = dimension_sequence(shift_growth_sequence(3, 1, 3), Ratio{3, 2});
  for (int n = 1; n <= 3; ++n) {
    const double closed = (2.0 * n + 1) * (2.0 * n + 1) * std::log(3.0) / (n * std::log(1.5));
    CHECK(std::abs(d3[n - 1] - closed) < 1e-9);
  }

  CHECK_THROWS_AS(dimension_sequence(shift_growth_sequence(2, 0, 2), Ratio{2, 1}), Error);
  CHECK(growth_csv(shift_growth_sequence(2, 1, 3), Ratio{2, 1}) ==
        "n,count_log2,term\n1,9,9\n2,25,12.5\n3,49,16.33333333\n");
}

TEST_CASE("superpoly_check exponential ratio") {
  const auto q = shift_growth_sequence(2, 1, 4);
  const auto from1 = superpoly_check(q, GrowthMode::ExponentialRatio, 1024, 1);
  REQUIRE(from1.samples.size() == 4);
  CHECK(*from1.samples[0].exact_gap_log2 == -1);
  CHECK(*from1.samples[1].exact_gap_log2 == 5);
  CHECK(*from1.samples[2].exact_gap_log2 == 19);
  CHECK_FALSE(from1.established);
  CHECK(*from1.first_failure == 1);

  const auto from2 = superpoly_check(q, GrowthMode::ExponentialRatio, 1024, 2);
  CHECK(from2.established);
  CHECK_FALSE(from2.first_failure.has_value());

  GrowthSequence linear;
  for (int n = 1; n <= 6; ++n) linear.push_back({n, PowerCount{2, static_cast<std::uint64_t>(n)}});
  const auto lin = superpoly_check(linear, GrowthMode::ExponentialRatio, 4, 1);
  CHECK_FALSE(lin.established);
  for (const auto& s : lin.samples) CHECK(*s.exact_gap_log2 == -static_cast<std::int64_t>(s.n));

  CHECK_THROWS_AS(superpoly_check(q, GrowthMode::ExponentialRatio, 1024, 3), Error);
}

TEST_CASE("superpoly_check log composition") {
  const auto q = shift_growth_sequence(2, 1, 15);
  const auto r = superpoly_check(q, GrowthMode::LogComposition, 5, 0);
  CHECK(r.established);
  CHECK(r.samples.size() >= 3);
  CHECK(r.samples.back().n == 1'000'000);

  // polynomial q(n) = e^(n) composed with ln gives degree 1 growth; degree 5 beats it
  GrowthSequence poly;
  for (int n = 1; n <= 15; ++n) poly.push_back({n, PowerCount{3, static_cast<std::uint64_t>(n)}});
  CHECK_FALSE(superpoly_check(poly, GrowthMode::LogComposition, 5, 0).established);

  const auto short_q = shift_growth_sequence(2, 1, 3);
  CHECK_THROWS_AS(superpoly_check(short_q, GrowthMode::LogComposition, 5, 0), Error);
  try {
    superpoly_check(q, GrowthMode::LogComposition, 5, 0, 2);
    FAIL("expected RangeTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RangeTooSmall);
  }
}
