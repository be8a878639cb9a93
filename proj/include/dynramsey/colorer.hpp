#pragma once

// Edge-coloring of the complete graph on a separated set of shift points by
// witness vectors, plus the DECG text format.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynramsey/action.hpp"
#include "dynramsey/sepset.hpp"

namespace dynramsey {

/// C_n = {v : |v| <= n}, row-major from (-n,-n) to (n,n).
struct ColorSet {
  int n = 0;
  std::vector<LatticeVector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  /// Position of v in the row-major order; v must satisfy |v| <= n.
  std::uint32_t index_of(LatticeVector v) const noexcept {
    return static_cast<std::uint32_t>((v.x + n) * (2 * n + 1) + (v.y + n));
  }
  bool contains(LatticeVector v) const noexcept { return v.norm() <= n; }
};

ColorSet build_color_set(int n);

struct Sampling {
  bool subsampled = false;
  std::uint64_t seed = 0;
  friend bool operator==(const Sampling&, const Sampling&) = default;
};

struct EdgeLabel {
  std::uint32_t color = 0;
  std::int32_t achieved = 0;  // exponent of D(T^v x, T^v y)
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Complete graph on `vertices`, edges stored upper-triangular in (i < j)
/// row order. Vertex identity is positional.
struct ColoredGraph {
  ShiftSystem system;
  int n = 0;
  Sampling sampling;
  std::vector<Pattern> vertices;
  std::vector<EdgeLabel> edges;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::uint64_t edge_count() const noexcept { return edges.size(); }
  std::size_t color_count() const noexcept {
    return static_cast<std::size_t>(2 * n + 1) * static_cast<std::size_t>(2 * n + 1);
  }

  static std::uint64_t edge_index(std::size_t i, std::size_t j, std::size_t q) noexcept {
    // requires i < j < q
    return static_cast<std::uint64_t>(i) * q - static_cast<std::uint64_t>(i) * (i + 1) / 2 +
           (j - i - 1);
  }
  const EdgeLabel& edge(std::size_t i, std::size_t j) const {
    return i < j ? edges[edge_index(i, j, vertices.size())]
                 : edges[edge_index(j, i, vertices.size())];
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.system.alphabet == b.system.alphabet && a.system.alpha == b.system.alpha &&
           a.n == b.n && a.sampling == b.sampling && a.vertices == b.vertices &&
           a.edges == b.edges;
  }
};

struct ColorOptions {
  int threads = 1;
  /// Skip the alpha^-n separation check of the vertex set.
  bool precertified = false;
};

/// Colors each edge {x, y} by find_witness(system, x, y, n). Throws
/// MismatchedSystems, InvalidArgument (vertex set not alpha^-n separated) or
/// the NoWitnessError of the smallest offending pair. Output does not depend
/// on the thread count.
ColoredGraph color_graph(const ShiftSystem& system, const ShiftSeparatedSet& vertices, int n,
                         Sampling sampling = {}, ColorOptions options = {});

struct EdgeViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string reason;
};

/// Recomputes D(T^v x, T^v y) for every edge and checks it against the
/// threshold and the recorded exponent. First violation in edge order.
std::optional<EdgeViolation> revalidate(const ColoredGraph& graph, int threads = 1);

/// Serialized DECG v1 text.
std::string to_decg(const ColoredGraph& graph);
void write_decg(const ColoredGraph& graph, std::ostream& out);

/// Parses DECG v1. Throws BadFormat (with line number) or ChecksumMismatch.
ColoredGraph read_decg(std::istream& in);
ColoredGraph parse_decg(const std::string& text);

/// FNV-1a 64 of every line before `end`, i.e. the value the file carries.
std::uint64_t decg_checksum(const ColoredGraph& graph);

}  // namespace dynramsey
