#pragma once

// Monochromatic clique analysis of colored complete graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynramsey/colorer.hpp"

namespace dynramsey {

/// Dense symmetric, irreflexive adjacency as bit rows.
class Adjacency {
 public:
  explicit Adjacency(std::size_t vertices = 0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63U)) & 1U;
  }
  const std::uint64_t* row(std::size_t u) const noexcept { return bits_.data() + u * words_; }
  std::size_t degree(std::size_t u) const noexcept;
  std::uint64_t edge_count() const noexcept;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Edges of `color` only. Throws UnknownColor when color is outside C_n.
Adjacency color_class_adjacency(const ColoredGraph& graph, std::uint32_t color);

inline constexpr std::size_t kCliqueVertexCap = 5000;

struct Clique {
  std::size_t order = 0;
  std::vector<std::size_t> witness;  // ascending vertex indices
};

/// Exact maximum clique: branch and bound over a degeneracy ordering with a
/// greedy-coloring bound. Throws CapExceeded above `cap` vertices.
Clique max_clique(const Adjacency& adjacency, std::size_t cap = kCliqueVertexCap);

struct ColorClique {
  std::uint32_t index = 0;
  LatticeVector vector;
  std::size_t order = 0;
  std::vector<std::size_t> witness;
};

/// The winning clique pushed through T^v and rechecked at 1/(4 alpha).
struct SeparationCertificate {
  std::uint32_t color = 0;
  LatticeVector vector;
  int threshold_exponent = 0;
  std::size_t points = 0;
  bool verified = false;
};

struct CliqueReport {
  std::vector<ColorClique> colors;  // every color of C_n, by index
  std::size_t overall_max = 0;
  SeparationCertificate separation;
};

/// Max clique per color class; every witness is rechecked to be monochromatic
/// and complete. Per-color searches run concurrently, merged by color index.
CliqueReport mono_clique_report(const ColoredGraph& graph, int threads = 1);

/// "R_p(k) > q": a p-coloring of K_q without a monochromatic K_k exists.
struct RamseyCertificate {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::string graph_checksum;
  bool verified = false;

  std::string statement() const;
};

struct OppositeUpperBound {
  std::size_t bound = 0;  // r(p, q) <= bound
  std::optional<RamseyCertificate> certificate;  // absent for q < 2
};

/// r((2n+1)^2, q) <= overall_max. The certificate is marked verified only if
/// the graph revalidates and the report matches the graph.
OppositeUpperBound opposite_upper_bound(const CliqueReport& report, const ColoredGraph& graph,
                                        int threads = 1);

}  // namespace dynramsey
