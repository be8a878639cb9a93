#include <doctest.h>

#include "dynramsey/error.hpp"
#include "dynramsey/ramsey.hpp"

using namespace dynramsey;

namespace {

int max_k_holding(int p, int q) {
  int k = 1;
  while (k + 1 <= q && ramsey_holds(p, k + 1, q)) ++k;
  return k;
}

}  // namespace

TEST_CASE("opposite_ramsey_exact small values") {
  CHECK(opposite_ramsey_exact(1, 3).r == 3);
  CHECK(opposite_ramsey_exact(2, 6).r == 3);
  CHECK(opposite_ramsey_exact(3, 4).r == 2);

  const auto five = opposite_ramsey_exact(2, 5);
  CHECK(five.r == 2);
  // the extremal coloring is a pentagon and its complementary pentagram
  const auto& c = five.extremal;
  // the extremal coloring splits K5 into two 5-cycles: every vertex has degree 2 in each color
  for (int i = 0; i < 5; ++i) {
    int zero = 0;
    for (int j = 0; j < 5; ++j)
      if (j != i && c.color(i, j) == 0) ++zero;
    CHECK(zero == 2);
  }
  CHECK(c.max_mono_clique() == 2);

  for (int q = 2; q <= 6; ++q) CHECK(opposite_ramsey_exact(1, q).r == q);
  for (int p = 1; p <= 4; ++p) CHECK(opposite_ramsey_exact(p, 2).r == 2);
}

TEST_CASE("extremal colorings re-verify through the clique module") {
  for (auto [p, q] : {std::pair{1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}}) {
    const auto res = opposite_ramsey_exact(p, q);
    CHECK(res.extremal.max_mono_clique() == static_cast<std::size_t>(res.r));
  }
}

TEST_CASE("ramsey_holds") {
  for (int q = 2; q <= 6; ++q) CHECK(ramsey_holds(2, 2, q));
  CHECK(ramsey_holds(2, 3, 6));
  CHECK_FALSE(ramsey_holds(2, 3, 5));
  CHECK(ramsey_holds(3, 1, 3));
  CHECK_FALSE(ramsey_holds(1, 5, 4));
  CHECK_THROWS_AS(ramsey_holds(3, 3, 8), Error);  // 3^28 colorings
}

TEST_CASE("definition consistency and monotonicity") {
  int table[4][7] = {};
  for (int p = 1; p <= 3; ++p)
    for (int q = 2; q <= 6; ++q) {
      table[p][q] = opposite_ramsey_exact(p, q).r;
      CHECK(table[p][q] == max_k_holding(p, q));
    }
  for (int p = 1; p <= 3; ++p)
    for (int q = 2; q < 6; ++q)
      CHECK(table[p][q + 1] >= table[p][q]);
  for (int p = 1; p < 3; ++p)
    for (int q = 2; q <= 6; ++q)
      CHECK(table[p + 1][q] <= table[p][q]);
}

TEST_CASE("thread count does not change the result") {
  for (auto [p, q] : {std::pair{2, 5}, {2, 6}, {3, 4}}) {
    const auto a = opposite_ramsey_exact(p, q, kColoringCap, 1);
    const auto b = opposite_ramsey_exact(p, q, kColoringCap, 4);
    CHECK(a.r == b.r);
    CHECK(a.extremal_index == b.extremal_index);
    CHECK(a.extremal.colors == b.extremal.colors);
  }
}

TEST_CASE("bound formulas") {
  CHECK(gg_upper(2, 2) == 16);
  CHECK(gg_upper(1, 7) == 1);
  BigInt naive = 1;
  for (int i = 0; i < 18; ++i) naive *= 9;
  CHECK(gg_upper(9, 2) == naive);
  CHECK(gg_upper(9, 2) == BigInt("150094635296999121"));

  CHECK(lr_lower(2, 2) == 16);
  CHECK(lr_lower(9, 2) == 262144);
  CHECK(lr_lower(9, 2, Ratio{1, 2}) == 512);
  CHECK(lr_lower(9, 3, Ratio{1, 3}) == 512);
  CHECK(lr_lower(3, 1, Ratio{1, 2}) == 4);  // ceil(1.5)

  for (std::uint64_t g = 2; g <= 12; ++g)
    for (std::uint64_t k = 1; k <= 6; ++k) CHECK(lr_lower(g, k) <= gg_upper(g, k));
  CHECK_THROWS_AS(gg_upper(0, 1), Error);
}

TEST_CASE("sandwich_report from an exact value") {
  const auto s = sandwich_report(opposite_ramsey_exact(2, 6));
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0] == "R_2(3) <= 6");
  CHECK(s.statements[1] == "R_2(4) > 6");
  CHECK(s.exact);
  CHECK(s.lr_lower_next == 256);
}

TEST_CASE("floor_log_shift") {
  CHECK(floor_log_shift(1) == 1);
  CHECK(floor_log_shift(2) == 1);
  CHECK(floor_log_shift(3) == 2);
  CHECK(floor_log_shift(7) == 2);   // e^2 ~ 7.389
  CHECK(floor_log_shift(8) == 3);
  CHECK(floor_log_shift(20) == 3);  // e^3 ~ 20.09
  CHECK(floor_log_shift(21) == 4);
  CHECK(floor_log_shift(1'000'000) == 14);
  CHECK(floor_log_shift(1'202'604) == 14);  // e^14 ~ 1202604.28
  CHECK(floor_log_shift(1'202'605) == 15);
  CHECK(floor_log_shift(1'000'000'000'000'000'000ULL) == 42);
  CHECK_THROWS_AS(floor_log_shift(0), Error);
}

TEST_CASE("sandwich_report from a coloring certificate") {
  std::vector<Pattern> pts;
  PatternEnumerator e(2, 3);
  while (auto p = e.next()) pts.push_back(*p);
  const auto g = color_graph(ShiftSystem::make(2),
                             {pts, ShiftDistance::from_exponent(1), Maximality::Stream}, 1);
  const auto cert = *opposite_upper_bound(mono_clique_report(g), g).certificate;
  const auto s = sandwich_report(cert, g);
  REQUIRE(s.statements.size() == 1);
  CHECK(s.statements[0] == "R_9(3) > 512");
  CHECK_FALSE(s.exact);
  CHECK(s.lr_lower_next == BigInt(1) << 27);
  CHECK(s.weaker_than_lr);
  CHECK(s.within_gg);

  auto tampered = cert;
  tampered.graph_checksum[0] = tampered.graph_checksum[0] == 'a' ? 'b' : 'a';
  try {
    sandwich_report(tampered, g);
    FAIL("expected InconsistentCertificate");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InconsistentCertificate);
  }
  auto unverified = cert;
  unverified.verified = false;
  CHECK_THROWS_AS(sandwich_report(unverified, g), Error);
}
