#include <doctest.h>

#include <set>

#include "dynramsey/action.hpp"
#include "dynramsey/error.hpp"

using namespace dynramsey;

namespace {

Pattern single(int w, int i, int j, std::uint8_t symbol = 1) {
  Pattern p(w, 2);
  p.set_cell(i, j, symbol);
  return p;
}

// Oracle: min sup-norm over the whole box [-w, w]^2, no scan order involved.
int brute_min_diff(const Pattern& x, const Pattern& y) {
  const int w = x.period();
  int best = -1;
  for (int a = -w; a <= w; ++a) {
    for (int b = -w; b <= w; ++b) {
      if (x.at({a, b}) != y.at({a, b})) {
        const int norm = LatticeVector{a, b}.norm();
        if (best < 0 || norm < best) best = norm;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("lattice vector norm") {
  CHECK(LatticeVector{0, 0}.norm() == 0);
  CHECK(LatticeVector{-3, 2}.norm() == 3);
  CHECK(LatticeVector{1, -4}.norm() == 4);
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) CHECK((LatticeVector{x, y}.norm() == 0) == (x == 0 && y == 0));
  }
}

TEST_CASE("scan order is ring by ring, lexicographic within a ring") {
  const auto order = scan_order(2);
  REQUIRE(order.size() == 25);
  CHECK(order[0] == LatticeVector{0, 0});
  CHECK(order[1] == LatticeVector{-1, -1});
  CHECK(order[2] == LatticeVector{-1, 0});
  CHECK(order[8] == LatticeVector{1, 1});
  CHECK(order[9] == LatticeVector{-2, -2});
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto &a = order[i - 1], &b = order[i];
    const bool ok = a.norm() < b.norm() ||
                    (a.norm() == b.norm() && (a.x < b.x || (a.x == b.x && a.y < b.y)));
    CHECK(ok);
  }
}

TEST_CASE("pattern encoding") {
  const auto p = Pattern::decode("k2:w3:010110001");
  CHECK(p.period() == 3);
  CHECK(p.cell(0, 1) == 1);
  CHECK(p.cell(1, 0) == 1);
  CHECK(p.cell(2, 2) == 1);
  CHECK(p.encode() == "k2:w3:010110001");
  CHECK(Pattern::decode("k36:w1:z").cell(0, 0) == 35);
  CHECK_THROWS_AS(Pattern::decode("k2:w3:01011000"), Error);
  CHECK_THROWS_AS(Pattern::decode("k2:w3:010110002"), Error);
  CHECK_THROWS_AS(Pattern::decode("x2:w3:010110001"), Error);
  CHECK_THROWS_AS(Pattern(3, 2, {0, 0, 0, 0, 0, 0, 0, 0, 2}), Error);
}

TEST_CASE("apply") {
  const auto x = Pattern::decode("k2:w3:010110001");
  CHECK(apply(x, {0, 0}) == x);
  const Pattern zero(3, 2);
  CHECK(apply(zero, {1, 0}) == zero);
  // x'(u) = x(u + v): the 1 at (1,0) moves to (0,0).
  CHECK(apply(single(3, 1, 0), {1, 0}) == single(3, 0, 0));
  // periodicity: translating by the period is the identity
  CHECK(apply(x, {3, -3}) == x);
}

TEST_CASE("group action law, exhaustive on w=3 sample") {
  PatternEnumerator all(2, 3);
  int checked = 0;
  while (auto x = all.next()) {
    if (checked++ % 37 != 0) continue;  // 14 patterns is plenty for the law
    for (int ux = -2; ux <= 2; ++ux)
      for (int uy = -2; uy <= 2; ++uy)
        for (int vx = -2; vx <= 2; ++vx)
          for (int vy = -2; vy <= 2; ++vy) {
            const LatticeVector u{ux, uy}, v{vx, vy};
            REQUIRE(apply(apply(*x, v), u) == apply(*x, u + v));
          }
  }
}

TEST_CASE("shift_min_diff") {
  const Pattern zero(3, 2);
  CHECK(shift_min_diff(zero, zero).is_equal());
  CHECK(shift_min_diff(zero, single(3, 0, 0)).exponent() == 0);
  // (2,1) = (-1,1) mod 3
  CHECK(shift_min_diff(zero, single(3, 2, 1)).exponent() == 1);
  CHECK(*min_diff_vector(zero, single(3, 2, 1)) == LatticeVector{-1, 1});
  CHECK_THROWS_AS(shift_min_diff(zero, Pattern(5, 2)), Error);
  CHECK_THROWS_AS(shift_min_diff(zero, Pattern(3, 3)), Error);

  // agrees with the box oracle, and never exceeds w
  auto samples = sample_periodic_points(3, 4, 60, 11);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto d = shift_min_diff(samples[i], samples[i + 1]);
    CHECK(d.exponent() == brute_min_diff(samples[i], samples[i + 1]));
    CHECK(d.exponent() <= 4);
  }
}

TEST_CASE("shift distance ordering is by value") {
  const auto eq = ShiftDistance::equal();
  const auto d0 = ShiftDistance::from_exponent(0);
  const auto d3 = ShiftDistance::from_exponent(3);
  CHECK(d0 > d3);
  CHECK(d3 > eq);
  CHECK(eq < d0);
  CHECK(eq == ShiftDistance::equal());
  CHECK(d3.value({2, 1}) == doctest::Approx(0.125));
  CHECK(eq.value({2, 1}) == 0.0);
}

TEST_CASE("threshold exponent") {
  CHECK(threshold_exponent({2, 1}) == 3);   // 2^-3 = 1/8
  CHECK(threshold_exponent({4, 1}) == 2);   // 4^-2 = 1/16 = 1/(4*4)
  CHECK(threshold_exponent({3, 2}) == 5);   // (3/2)^4 = 5.06 >= 4
  CHECK(threshold_exponent({5, 1}) == 2);
  CHECK_THROWS_AS(threshold_exponent({1, 1}), Error);
  CHECK(ShiftSystem::make(2).threshold == 3);
}

TEST_CASE("isometry compatibility on the shift") {
  auto pts = sample_periodic_points(2, 5, 40, 3);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int m = shift_min_diff(pts[i], pts[i + 1]).exponent();
    for (const auto& v : scan_order(3)) {
      const int mv = shift_min_diff(apply(pts[i], v), apply(pts[i + 1], v)).exponent();
      CHECK(mv >= m - v.norm());
      CHECK(mv <= m + v.norm());
    }
  }
}

TEST_CASE("shift separation recovery via the min-norm vector") {
  auto pts = sample_periodic_points(2, 7, 30, 5);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto v0 = *min_diff_vector(pts[i], pts[i + 1]);
    CHECK(shift_min_diff(apply(pts[i], v0), apply(pts[i + 1], v0)).exponent() == 0);
  }
}

TEST_CASE("torus metric") {
  const Matrix2 cat{2, 1, 1, 1};
  const Matrix2 cat2 = multiply(cat, cat);
  const TorusPoint origin{0.0, 0.0};

  SUBCASE("identical points") {
    const TorusSystem sys(cat, cat2);
    CHECK(sys.distance({0.3, 0.7}, {0.3, 0.7}) == 0.0);
  }
  SUBCASE("N = 0 is the capped torus metric") {
    const TorusSystem sys(cat, cat2, 2.0, 0);
    CHECK(sys.distance(origin, {0.5, 0.0}) == doctest::Approx(0.5));
  }
  SUBCASE("values frozen from the exact-rational oracle") {
    // tests/oracles/torus_distance_oracle.py
    const TorusSystem n1(cat, cat2, 2.0, 1);
    CHECK(n1.distance(origin, {0.25, 0.0}) == doctest::Approx(0.25).epsilon(1e-12));
    const TorusSystem n2(cat, cat2, 2.0, 2);
    CHECK(n2.distance({0.125, 0.375}, {0.25, 0.5}) == doctest::Approx(3.0 / 16.0).epsilon(1e-12));
  }
  SUBCASE("symmetry") {
    const TorusSystem sys(cat, cat2);
    auto pts = sample_torus_points(20, 9);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      CHECK(sys.distance(pts[i], pts[i + 1]) == doctest::Approx(sys.distance(pts[i + 1], pts[i])));
    }
  }
  SUBCASE("group law") {
    const TorusSystem sys(cat, cat2);
    const TorusPoint p{0.123, 0.456};
    const auto lhs = sys.apply({1, -1}, sys.apply({-1, 2}, p));
    const auto rhs = sys.apply({0, 1}, p);
    CHECK(torus_rho(lhs, rhs) < 1e-9);
  }
  SUBCASE("construction checks") {
    CHECK_THROWS_AS(TorusSystem(cat, Matrix2{1, 1, 0, 1}), Error);   // parabolic
    CHECK_THROWS_AS(TorusSystem(cat, Matrix2{2, 0, 0, 1}), Error);   // det 2
    CHECK_THROWS_AS(TorusSystem(cat, Matrix2{3, 1, 2, 1}), Error);   // does not commute
    CHECK_THROWS_AS(TorusSystem(cat, cat2, 2.0, 40), Error);         // powers overflow the cap
  }
}

TEST_CASE("enumerate periodic points") {
  CHECK(PatternEnumerator(2, 1).size() == 2);
  CHECK(PatternEnumerator(2, 2).size() == 16);
  PatternEnumerator e(2, 3);
  std::vector<Pattern> all;
  while (auto p = e.next()) all.push_back(*p);
  REQUIRE(all.size() == 512);
  CHECK(all.front() == Pattern(3, 2));
  CHECK(all.back().encode() == "k2:w3:111111111");
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<Pattern>(all.begin(), all.end()).size() == 512);
  CHECK(pattern_from_index(2, 3, 5).encode() == "k2:w3:000000101");
  CHECK_THROWS_AS(PatternEnumerator(2, 6), Error);  // 2^36
}

TEST_CASE("sample periodic points") {
  const auto both = sample_periodic_points(2, 1, 2, 0);
  REQUIRE(both.size() == 2);
  CHECK(both[0] != both[1]);

  const auto a = sample_periodic_points(2, 5, 1000, 7);
  const auto b = sample_periodic_points(2, 5, 1000, 7);
  const auto c = sample_periodic_points(2, 5, 1000, 8);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(std::set<Pattern>(a.begin(), a.end()).size() == 1000);

  // dense regime draws every pattern exactly once
  const auto full = sample_periodic_points(2, 3, 512, 1);
  CHECK(std::set<Pattern>(full.begin(), full.end()).size() == 512);
  CHECK_THROWS_AS(sample_periodic_points(2, 2, 17, 0), Error);
}

TEST_CASE("mix64 is SplitMix64") {
  // SplitMix64 seeded with 0: first output 0xe220a8397b1dcdaf
  CHECK(mix64(0, 0) == 0xe220a8397b1dcdafULL);
  CHECK(mix64(0, 1) == 0x6e789e6aa1b965f4ULL);
}
