#include "dynramsey/ramsey.hpp"

#include <array>
#include <bit>

#include "dynramsey/error.hpp"
#include "dynramsey/parallel.hpp"

namespace dynramsey {

std::uint8_t EdgeColoring::color(int i, int j) const {
  if (i > j) std::swap(i, j);
  return colors.at(ColoredGraph::edge_index(static_cast<std::size_t>(i),
                                            static_cast<std::size_t>(j),
                                            static_cast<std::size_t>(q)));
}

std::size_t EdgeColoring::max_mono_clique() const {
  std::size_t best = 0;
  for (int c = 0; c < p; ++c) {
    Adjacency adj(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        if (color(i, j) == c) adj.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
    best = std::max(best, max_clique(adj).order);
  }
  return best;
}

namespace {

constexpr int kMaxOrder = 32;
constexpr int kMaxColors = 255;

/// Mixed-radix walk over all p-colorings of K_q. Each coloring is presented
/// as per-color neighbourhood masks.
class ColoringSpace {
 public:
  ColoringSpace(int p, int q, std::uint64_t cap) : p_(p), q_(q) {
    if (p < 1 || p > kMaxColors) throw Error(ErrorCode::InvalidArgument, "need 1 <= p <= 255");
    if (q < 2 || q > kMaxOrder) throw Error(ErrorCode::InvalidArgument, "need 2 <= q <= 32");
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) edges_.push_back({i, j});
    }
    const auto total = pow_capped(static_cast<std::uint64_t>(p), edges_.size(), cap);
    if (!total) {
      throw Error(ErrorCode::CapExceeded, std::to_string(p) + "^" + std::to_string(edges_.size()) +
                                              " colorings exceed the cap " + std::to_string(cap));
    }
    total_ = *total;
  }

  std::uint64_t total() const noexcept { return total_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Calls fn(digits, masks, index) for indices in [begin, end) until fn returns false.
  template <class Fn>
  void scan(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::vector<std::uint8_t> digits(edges_.size());
    std::uint64_t rest = begin;
    for (std::size_t e = edges_.size(); e-- > 0;) {
      digits[e] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(p_));
      rest /= static_cast<std::uint64_t>(p_);
    }
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(p_) * q_);
    for (std::uint64_t index = begin; index < end; ++index) {
      std::fill(masks.begin(), masks.end(), 0U);
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto* m = masks.data() + static_cast<std::size_t>(digits[e]) * q_;
        m[edges_[e].first] |= 1U << edges_[e].second;
        m[edges_[e].second] |= 1U << edges_[e].first;
      }
      if (!fn(digits, masks, index)) return;
      for (std::size_t e = edges_.size(); e-- > 0;) {
        if (++digits[e] < p_) break;
        digits[e] = 0;
      }
    }
  }

  /// Some color class contains a clique of `order` vertices.
  bool has_mono_clique(const std::vector<std::uint32_t>& masks, int order) const {
    const std::uint32_t all = q_ == 32 ? ~0U : ((1U << q_) - 1U);
    for (int c = 0; c < p_; ++c) {
      if (has_clique(masks.data() + static_cast<std::size_t>(c) * q_, all, order)) return true;
    }
    return false;
  }

  int max_mono_clique(const std::vector<std::uint32_t>& masks, int below) const {
    int k = 1;
    while (k + 1 < below && has_mono_clique(masks, k + 1)) ++k;
    return k;
  }

  EdgeColoring coloring(const std::vector<std::uint8_t>& digits) const {
    return {p_, q_, digits};
  }

 private:
  static bool has_clique(const std::uint32_t* adj, std::uint32_t candidates, int need) {
    if (need <= 0) return true;
    if (std::popcount(candidates) < need) return false;
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (has_clique(adj, candidates & adj[v], need - 1)) return true;
    }
    return false;
  }

  int p_;
  int q_;
  std::vector<std::pair<int, int>> edges_;
  std::uint64_t total_ = 0;
};

struct ChunkResult {
  int min = 0;
  std::uint64_t index = 0;
  std::vector<std::uint8_t> digits;
};

}  // namespace

OppositeRamseyResult opposite_ramsey_exact(int p, int q, std::uint64_t cap, int threads) {
  const ColoringSpace space(p, q, cap);
  // Any edge is a monochromatic K_2, so no coloring can go below this.
  const int floor_value = 2;
  const std::size_t chunks =
      static_cast<std::size_t>(std::max(1, std::min<int>(threads, static_cast<int>(space.total()))));
  std::vector<ChunkResult> results(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = space.total() / chunks * c + std::min<std::uint64_t>(c, space.total() % chunks);
    const std::uint64_t end =
        begin + space.total() / chunks + (c < space.total() % chunks ? 1 : 0);
    ChunkResult& r = results[c];
    r.min = q + 1;
    space.scan(begin, end, [&](const auto& digits, const auto& masks, std::uint64_t index) {
      if (space.has_mono_clique(masks, r.min)) return true;
      r.min = space.max_mono_clique(masks, r.min);
      r.index = index;
      r.digits = digits;
      return r.min > floor_value;
    });
  });

  const ChunkResult* best = nullptr;
  for (const auto& r : results) {
    if (r.digits.empty()) continue;
    if (best == nullptr || r.min < best->min) best = &r;
  }
  OppositeRamseyResult out;
  out.p = p;
  out.q = q;
  out.r = best->min;
  out.extremal = space.coloring(best->digits);
  out.extremal_index = best->index;
  return out;
}

bool ramsey_holds(int p, int k, int q, std::uint64_t cap) {
  const ColoringSpace space(p, q, cap);
  if (k <= 1) return true;
  if (k > q) return false;
  bool holds = true;
  space.scan(0, space.total(), [&](const auto&, const auto& masks, std::uint64_t) {
    holds = space.has_mono_clique(masks, k);
    return holds;
  });
  return holds;
}

BigInt gg_upper(std::uint64_t g, std::uint64_t k) {
  if (g < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "need g, k >= 1");
  return pow_big(g, g * k);
}

BigInt lr_lower(std::uint64_t g, std::uint64_t k, const Ratio& c) {
  if (g < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "need g, k >= 1");
  if (c.num == 0) throw Error(ErrorCode::InvalidArgument, "the constant c must be positive");
  const BigInt scaled = BigInt(c.num) * g * k;
  const BigInt exponent = (scaled + c.den - 1) / c.den;
  BigInt out = 1;
  out <<= exponent.convert_to<unsigned>();
  return out;
}

BoundsRecord bounds_record(std::uint64_t g, std::uint64_t k, const Ratio& c) {
  return {g, k, c, gg_upper(g, k), lr_lower(g, k, c)};
}

namespace {

std::string ramsey_symbol(std::uint64_t p, std::uint64_t k) {
  return "R_" + std::to_string(p) + "(" + std::to_string(k) + ")";
}

void fill_comparison(SandwichReport& report) {
  report.lr_lower_next = lr_lower(report.p, report.r + 1, report.c);
  report.gg_upper_next = gg_upper(report.p, report.r + 1);
  report.weaker_than_lr = BigInt(report.q) + 1 <= report.lr_lower_next;
  report.within_gg = BigInt(report.q) < report.gg_upper_next;
}

}  // namespace

SandwichReport sandwich_report(const RamseyCertificate& certificate, const ColoredGraph& graph,
                               const Ratio& c) {
  const auto checksum = hex64(decg_checksum(graph));
  if (!certificate.verified) {
    throw Error(ErrorCode::InconsistentCertificate, "certificate was not verified");
  }
  if (certificate.graph_checksum != checksum || certificate.q != graph.vertex_count() ||
      certificate.p != graph.color_count() || certificate.k < 2) {
    throw Error(ErrorCode::InconsistentCertificate,
                "certificate does not match graph " + checksum);
  }
  SandwichReport report;
  report.p = certificate.p;
  report.q = certificate.q;
  report.r = certificate.k - 1;
  report.c = c;
  report.statements.push_back(certificate.statement());
  fill_comparison(report);
  return report;
}

SandwichReport sandwich_report(const OppositeRamseyResult& exact, const Ratio& c) {
  SandwichReport report;
  report.p = static_cast<std::uint64_t>(exact.p);
  report.q = static_cast<std::uint64_t>(exact.q);
  report.r = static_cast<std::uint64_t>(exact.r);
  report.exact = true;
  report.c = c;
  report.statements.push_back(ramsey_symbol(report.p, report.r) + " <= " + std::to_string(report.q));
  report.statements.push_back(ramsey_symbol(report.p, report.r + 1) + " > " +
                              std::to_string(report.q));
  fill_comparison(report);
  return report;
}

int floor_log_shift(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "floor_log_shift needs n >= 1");
  return floor_ln(BigInt(n)) + 1;
}

}  // namespace dynramsey
