#include <doctest.h>

#include <random>

#include "dynramsey/cliques.hpp"
#include "dynramsey/error.hpp"

using namespace dynramsey;

namespace {

Adjacency cycle(std::size_t n) {
  Adjacency a(n);
  for (std::size_t i = 0; i < n; ++i) a.add_edge(i, (i + 1) % n);
  return a;
}

std::size_t brute_force_clique(const Adjacency& a) {
  const std::size_t n = a.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !a.adjacent(i, j)) clique = false;
    if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

ColoredGraph build(int w, int n, std::vector<Pattern> pts, Sampling s = {}) {
  (void)w;
  return color_graph(ShiftSystem::make(2),
                     {std::move(pts), ShiftDistance::from_exponent(n), Maximality::Stream}, n, s);
}

std::vector<Pattern> all_w3() {
  std::vector<Pattern> out;
  PatternEnumerator e(2, 3);
  while (auto p = e.next()) out.push_back(*p);
  return out;
}

}  // namespace

TEST_CASE("max_clique small graphs") {
  Adjacency tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const auto t = max_clique(tri);
  CHECK(t.order == 3);
  CHECK(t.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK(max_clique(cycle(5)).order == 2);
  CHECK(max_clique(Adjacency(5)).order == 1);
  CHECK(max_clique(Adjacency(0)).order == 0);
  CHECK_THROWS_AS(max_clique(Adjacency(10), 9), Error);
}

TEST_CASE("max_clique agrees with subset enumeration") {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed);
    const std::size_t n = 1 + rng() % 12;
    const double density = (rng() % 100) / 100.0;
    std::bernoulli_distribution coin(density);
    Adjacency a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) a.add_edge(i, j);
    const auto c = max_clique(a);
    CHECK(c.order == brute_force_clique(a));
    REQUIRE(c.witness.size() == c.order);
    for (std::size_t x = 0; x < c.order; ++x)
      for (std::size_t y = x + 1; y < c.order; ++y) CHECK(a.adjacent(c.witness[x], c.witness[y]));
  }
}

TEST_CASE("max_clique on a larger planted clique") {
  std::mt19937 rng(5);
  Adjacency a(300);
  std::bernoulli_distribution coin(0.1);
  for (std::size_t i = 0; i < 300; ++i)
    for (std::size_t j = i + 1; j < 300; ++j)
      if (coin(rng)) a.add_edge(i, j);
  const std::vector<std::size_t> planted{7, 40, 41, 99, 150, 151, 152, 280, 299};
  for (std::size_t x = 0; x < planted.size(); ++x)
    for (std::size_t y = x + 1; y < planted.size(); ++y) a.add_edge(planted[x], planted[y]);
  CHECK(max_clique(a).order == 9);
}

TEST_CASE("color_class_adjacency") {
  Pattern a(3, 2), b(3, 2);
  b.set_cell(0, 0, 1);
  const auto g = build(3, 1, {a, b});
  const auto origin = color_class_adjacency(g, 4);
  CHECK(origin.edge_count() == 1);
  CHECK(origin.adjacent(0, 1));
  CHECK(color_class_adjacency(g, 0).edge_count() == 0);
  CHECK_THROWS_AS(color_class_adjacency(g, 9), Error);
}

TEST_CASE("K512 color (0,0) class is exactly the pairs differing at the origin") {
  const auto pts = all_w3();
  const auto g = build(3, 1, pts);
  const auto adj = color_class_adjacency(g, 4);
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const bool origin = pts[i].at({0, 0}) != pts[j].at({0, 0});
      expected += origin;
      CHECK(adj.adjacent(i, j) == origin);
    }
  CHECK(adj.edge_count() == expected);
  CHECK(expected == 256 * 256);
}

TEST_CASE("mono_clique_report and certificates") {
  SUBCASE("one edge") {
    Pattern a(3, 2), b(3, 2);
    b.set_cell(0, 0, 1);
    const auto g = build(3, 1, {a, b});
    const auto r = mono_clique_report(g);
    CHECK(r.overall_max == 2);
    CHECK(r.colors.size() == 9);
    CHECK(r.separation.verified);
    const auto bound = opposite_upper_bound(r, g);
    CHECK(bound.bound == 2);
    REQUIRE(bound.certificate.has_value());
    CHECK(bound.certificate->statement() == "R_9(3) > 2");
    CHECK(bound.certificate->verified);
  }
  SUBCASE("one vertex") {
    const auto g = build(3, 1, {Pattern(3, 2)});
    const auto r = mono_clique_report(g);
    CHECK(r.overall_max == 1);
    CHECK_FALSE(opposite_upper_bound(r, g).certificate.has_value());
  }
  SUBCASE("K512") {
    const auto g = build(3, 1, all_w3());
    const auto r = mono_clique_report(g, 2);
    CHECK(r.overall_max == 2);
    for (const auto& c : r.colors) CHECK(c.order == 2);
    CHECK(r.separation.verified);
    const auto bound = opposite_upper_bound(r, g);
    REQUIRE(bound.certificate.has_value());
    CHECK(bound.certificate->statement() == "R_9(3) > 512");
    CHECK(bound.certificate->verified);
    CHECK(bound.certificate->graph_checksum == hex64(decg_checksum(g)));

    // a report that does not match the graph is not verified
    auto forged = r;
    forged.colors[0].order = 1;
    CHECK_FALSE(opposite_upper_bound(forged, g).certificate->verified);
  }
  SUBCASE("sampled K1000 at n = 2") {
    const auto g = build(5, 2, sample_periodic_points(2, 5, 1000, 7), {true, 7});
    const auto r = mono_clique_report(g);
    CHECK(r.overall_max == 2);
    CHECK(opposite_upper_bound(r, g).certificate->statement() == "R_25(3) > 1000");
  }
}

TEST_CASE("overall_max never exceeds the alphabet and never drops on supersets") {
  const auto pts = sample_periodic_points(2, 5, 400, 11);
  std::size_t previous = 0;
  for (std::size_t m : {2u, 10u, 50u, 200u, 400u}) {
    std::vector<Pattern> prefix(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(m));
    for (int n = 2; n <= 3; ++n) {
      std::vector<Pattern> lifted;
      if (n == 3) {
        // period 7 copies are still separated at exponent 3
        for (const auto& p : prefix) {
          Pattern q(7, 2);
          for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) q.set_cell(i, j, p.cell(i % 5, j % 5));
          lifted.push_back(q);
        }
        const auto sep = greedy_separated(lifted, ShiftDistance::from_exponent(3));
        lifted = sep.points;
      } else {
        lifted = prefix;
      }
      const auto r = mono_clique_report(build(5, n, lifted));
      CHECK(r.overall_max <= 2);
      CHECK(r.separation.verified);
      if (n == 2) {
        CHECK(r.overall_max >= previous);
        previous = r.overall_max;
      }
    }
  }
}
