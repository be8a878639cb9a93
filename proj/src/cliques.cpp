#include "dynramsey/cliques.hpp"

#include <algorithm>
#include <bit>

#include "dynramsey/error.hpp"
#include "dynramsey/parallel.hpp"

namespace dynramsey {

Adjacency::Adjacency(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), bits_(n_ * words_, 0) {}

void Adjacency::add_edge(std::size_t u, std::size_t v) {
  if (u == v || u >= n_ || v >= n_) {
    throw Error(ErrorCode::InvalidArgument, "adjacency edge must join two distinct vertices");
  }
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63U);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63U);
}

std::size_t Adjacency::degree(std::size_t u) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
  return d;
}

std::uint64_t Adjacency::edge_count() const noexcept {
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

Adjacency color_class_adjacency(const ColoredGraph& graph, std::uint32_t color) {
  if (color >= graph.color_count()) {
    throw Error(ErrorCode::UnknownColor, "color " + std::to_string(color) + " is not in C_" +
                                             std::to_string(graph.n));
  }
  const std::size_t q = graph.vertex_count();
  Adjacency adj(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (graph.edges[ColoredGraph::edge_index(i, j, q)].color == color) adj.add_edge(i, j);
    }
  }
  return adj;
}

// ---------------------------------------------------------------- max clique

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

/// Removal order of the min-degree peeling; ties go to the smaller index.
std::vector<std::size_t> degeneracy_order(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && adj.adjacent(pick, u)) --degree[u];
    }
  }
  return order;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Adjacency& adj) : words_(adj.words()) {
    const std::size_t n = adj.vertex_count();
    // Last peeled (densest core) first.
    order_ = degeneracy_order(adj);
    std::reverse(order_.begin(), order_.end());
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order_[p]] = p;
    rows_.assign(n, Bits(words_, 0));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (adj.adjacent(order_[p], order_[q])) rows_[p][q >> 6] |= std::uint64_t{1} << (q & 63U);
      }
    }
  }

  Clique run() {
    const std::size_t n = order_.size();
    Bits all(words_, 0);
    for (std::size_t p = 0; p < n; ++p) all[p >> 6] |= std::uint64_t{1} << (p & 63U);
    std::vector<std::size_t> current;
    if (n > 0) expand(current, all);
    Clique out;
    out.order = best_.size();
    for (auto p : best_) out.witness.push_back(order_[p]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

 private:
  void color_sort(const Bits& candidates, std::vector<std::size_t>& vertices,
                  std::vector<std::size_t>& bounds) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63U));
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~rows_[v][k];
          vertices.push_back(v);
          bounds.push_back(color);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits candidates) {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> bounds;
    color_sort(candidates, vertices, bounds);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current.size() + bounds[i] <= best_.size()) return;
      const std::size_t v = vertices[i];
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & rows_[v][w];
      current.push_back(v);
      if (!any(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates[v >> 6] &= ~(std::uint64_t{1} << (v & 63U));
    }
  }

  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> best_;
};

}  // namespace

Clique max_clique(const Adjacency& adjacency, std::size_t cap) {
  if (adjacency.vertex_count() > cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(adjacency.vertex_count()) +
                                            " vertices exceed the clique cap " +
                                            std::to_string(cap));
  }
  return CliqueSearch(adjacency).run();
}

// ---------------------------------------------------------------- reports

namespace {

bool monochromatic_complete(const ColoredGraph& graph, std::uint32_t color,
                            const std::vector<std::size_t>& clique) {
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      if (clique[a] == clique[b] || graph.edge(clique[a], clique[b]).color != color) return false;
    }
  }
  return true;
}

}  // namespace

CliqueReport mono_clique_report(const ColoredGraph& graph, int threads) {
  const auto colors = build_color_set(graph.n);
  CliqueReport report;
  report.colors.resize(colors.size());
  parallel_for(colors.size(), threads, [&](std::size_t c) {
    const auto color = static_cast<std::uint32_t>(c);
    auto clique = max_clique(color_class_adjacency(graph, color));
    if (!monochromatic_complete(graph, color, clique.witness)) {
      throw Error(ErrorCode::InvalidArgument,
                  "clique search returned a non-monochromatic witness for color " +
                      std::to_string(c));
    }
    report.colors[c] = {color, colors.vectors[c], clique.order, std::move(clique.witness)};
  });

  std::size_t winner = 0;
  for (std::size_t c = 0; c < report.colors.size(); ++c) {
    if (report.colors[c].order > report.overall_max) {
      report.overall_max = report.colors[c].order;
      winner = c;
    }
  }

  // The winning clique's image under T^v must be 1/(4 alpha)-separated.
  const auto& win = report.colors[winner];
  std::vector<Pattern> images;
  for (auto idx : win.witness) images.push_back(apply(graph.vertices[idx], win.vector));
  report.separation.color = win.index;
  report.separation.vector = win.vector;
  report.separation.threshold_exponent = graph.system.threshold;
  report.separation.points = images.size();
  report.separation.verified =
      separation_check(images, ShiftDistance::from_exponent(graph.system.threshold)).separated;
  return report;
}

std::string RamseyCertificate::statement() const {
  return "R_" + std::to_string(p) + "(" + std::to_string(k) + ") > " + std::to_string(q);
}

OppositeUpperBound opposite_upper_bound(const CliqueReport& report, const ColoredGraph& graph,
                                        int threads) {
  OppositeUpperBound out;
  out.bound = report.overall_max;
  if (graph.vertex_count() < 2) return out;

  bool verified = !revalidate(graph, threads).has_value() && report.separation.verified &&
                  report.colors.size() == graph.color_count();
  if (verified) {
    std::vector<std::size_t> rerun(report.colors.size());
    parallel_for(report.colors.size(), threads, [&](std::size_t c) {
      rerun[c] = max_clique(color_class_adjacency(graph, static_cast<std::uint32_t>(c))).order;
    });
    std::size_t best = 0;
    for (std::size_t c = 0; c < rerun.size(); ++c) {
      const auto& entry = report.colors[c];
      verified = verified && rerun[c] == entry.order && entry.witness.size() == entry.order &&
                 monochromatic_complete(graph, entry.index, entry.witness);
      best = std::max(best, rerun[c]);
    }
    verified = verified && best == report.overall_max;
  }

  RamseyCertificate cert;
  cert.p = graph.color_count();
  cert.k = report.overall_max + 1;
  cert.q = graph.vertex_count();
  cert.graph_checksum = hex64(decg_checksum(graph));
  cert.verified = verified;
  out.certificate = cert;
  return out;
}

}  // namespace dynramsey
