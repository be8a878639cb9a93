#pragma once

// Exact opposite-Ramsey numbers on tiny instances, classical bound formulas
// and the sandwich statements a verified coloring implies.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynramsey/cliques.hpp"
#include "dynramsey/numeric.hpp"

namespace dynramsey {

inline constexpr std::uint64_t kColoringCap = std::uint64_t{1} << 26;

/// Edge-coloring of K_q with colors {0..p-1}, edges in (i < j) row order.
struct EdgeColoring {
  int p = 1;
  int q = 0;
  std::vector<std::uint8_t> colors;

  std::uint8_t color(int i, int j) const;
  /// Largest monochromatic clique, via the cliques module.
  std::size_t max_mono_clique() const;
};

struct OppositeRamseyResult {
  int p = 0;
  int q = 0;
  int r = 0;
  EdgeColoring extremal;            // first coloring in enumeration order attaining r
  std::uint64_t extremal_index = 0; // its mixed-radix rank
};

/// r(p, q) = min over p-colorings of K_q of the largest monochromatic clique.
/// Colorings are enumerated as a mixed-radix counter over edges (last edge
/// least significant). Throws CapExceeded when p^(q(q-1)/2) > cap.
OppositeRamseyResult opposite_ramsey_exact(int p, int q, std::uint64_t cap = kColoringCap,
                                           int threads = 1);

/// True iff every p-coloring of K_q has a monochromatic K_k.
bool ramsey_holds(int p, int k, int q, std::uint64_t cap = kColoringCap);

/// g^(g k).
BigInt gg_upper(std::uint64_t g, std::uint64_t k);

/// 2^ceil(c g k); the constant c is illustrative, not a known value.
BigInt lr_lower(std::uint64_t g, std::uint64_t k, const Ratio& c = {1, 1});

struct BoundsRecord {
  std::uint64_t g = 0;
  std::uint64_t k = 0;
  Ratio c{1, 1};
  BigInt gg_upper;
  BigInt lr_lower;
};

BoundsRecord bounds_record(std::uint64_t g, std::uint64_t k, const Ratio& c = {1, 1});

struct SandwichReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;               // r_upper, or the exact r
  bool exact = false;
  std::vector<std::string> statements;
  Ratio c{1, 1};
  BigInt lr_lower_next;              // lr_lower(p, r + 1, c)
  BigInt gg_upper_next;              // gg_upper(p, r + 1)
  bool weaker_than_lr = false;       // q + 1 <= lr_lower_next
  bool within_gg = false;            // q < gg_upper_next
};

/// From a verified coloring certificate: "R_p(r+1) > q". Rechecks the
/// certificate against the graph; throws InconsistentCertificate on mismatch.
SandwichReport sandwich_report(const RamseyCertificate& certificate, const ColoredGraph& graph,
                               const Ratio& c = {1, 1});

/// From an exact result: "R_p(r) <= q" and "R_p(r+1) > q".
SandwichReport sandwich_report(const OppositeRamseyResult& exact, const Ratio& c = {1, 1});

/// floor(ln n) + 1 without floating point, exact for all n >= 1.
int floor_log_shift(std::uint64_t n);

}  // namespace dynramsey
