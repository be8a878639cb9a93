#pragma once

// Concrete Z^2-actions: the full shift on doubly periodic configurations
// (exact, log-domain metric) and commuting toral automorphisms (empirical).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynramsey/numeric.hpp"

namespace dynramsey {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 25;

struct LatticeVector {
  int x = 0;
  int y = 0;

  /// Sup-norm max(|x|, |y|).
  int norm() const noexcept { return std::max(x < 0 ? -x : x, y < 0 ? -y : y); }

  friend LatticeVector operator+(LatticeVector a, LatticeVector b) noexcept {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(LatticeVector a, LatticeVector b) noexcept {
    return {a.x - b.x, a.y - b.y};
  }
  friend bool operator==(LatticeVector, LatticeVector) = default;
};

/// All vectors with norm <= radius in the module-wide scan order: increasing
/// norm ring, then lexicographic (x, then y) inside a ring.
std::vector<LatticeVector> scan_order(int radius);

/// Vectors of norm exactly `ring`, lexicographic in (x, y).
std::vector<LatticeVector> ring_vectors(int ring);

/// A w-by-w pattern over {0..k-1} tiled over Z^2: x(v) = pattern[v mod w].
/// Cell (i, j) is the value at lattice point (i, j); storage is row-major in i.
class Pattern {
 public:
  Pattern(int period, int alphabet);
  Pattern(int period, int alphabet, std::vector<std::uint8_t> cells);

  int period() const noexcept { return period_; }
  int alphabet() const noexcept { return alphabet_; }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  std::uint8_t cell(int i, int j) const { return cells_[static_cast<std::size_t>(i * period_ + j)]; }
  void set_cell(int i, int j, std::uint8_t symbol);

  /// Value of the induced configuration at an arbitrary lattice point.
  std::uint8_t at(LatticeVector v) const noexcept {
    return cells_[static_cast<std::size_t>(wrap(v.x) * period_ + wrap(v.y))];
  }

  /// `k<k>:w<w>:<w^2 base-36 digits, row-major>`.
  std::string encode() const;
  static Pattern decode(std::string_view text);

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.period_ <=> b.period_; c != 0) return c;
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int wrap(int c) const noexcept {
    int r = c % period_;
    return r < 0 ? r + period_ : r;
  }

  int period_;
  int alphabet_;
  std::vector<std::uint8_t> cells_;
};

/// Distance on the shift, D = alpha^-m, stored as the integer exponent m.
/// Ordering follows the distance value: a smaller exponent is a larger distance,
/// and `equal` (D = 0) is the smallest of all.
class ShiftDistance {
 public:
  static constexpr ShiftDistance equal() noexcept { return ShiftDistance(-1); }
  static constexpr ShiftDistance from_exponent(int m) noexcept { return ShiftDistance(m); }

  bool is_equal() const noexcept { return exponent_ < 0; }
  /// Only meaningful when !is_equal().
  int exponent() const noexcept { return exponent_; }
  double value(const Ratio& alpha) const;

  friend bool operator==(ShiftDistance, ShiftDistance) = default;
  friend std::strong_ordering operator<=>(ShiftDistance a, ShiftDistance b) noexcept {
    if (a.is_equal() || b.is_equal()) return b.is_equal() <=> a.is_equal();
    return b.exponent_ <=> a.exponent_;
  }

 private:
  constexpr explicit ShiftDistance(int m) noexcept : exponent_(m) {}
  int exponent_;
};

/// Smallest integer t with alpha^t >= 4 alpha, i.e. alpha^-t <= 1/(4 alpha).
int threshold_exponent(const Ratio& alpha);

struct ShiftSystem {
  int alphabet = 2;
  Ratio alpha{2, 1};
  int threshold = 3;

  /// Validates k >= 2 (and <= 36 for the text encoding) and alpha > 1.
  static ShiftSystem make(int alphabet, Ratio alpha = {2, 1});

  /// D >= 1/(4 alpha), decided on exponents.
  bool separates(ShiftDistance d) const noexcept {
    return !d.is_equal() && d.exponent() <= threshold;
  }
};

/// T^v x: the returned pattern satisfies x'(u) = x(u + v).
Pattern apply(const Pattern& x, LatticeVector v);
inline Pattern apply(const ShiftSystem&, LatticeVector v, const Pattern& x) { return apply(x, v); }

/// First differing coordinate in scan order, nullopt when the patterns coincide.
std::optional<LatticeVector> min_diff_vector(const Pattern& x, const Pattern& y);

/// Exponent m = min{|v| : x(v) != y(v)}; `equal` iff the patterns coincide.
/// Throws MismatchedSystems when period or alphabet differ.
ShiftDistance shift_min_diff(const Pattern& x, const Pattern& y);

// --- toral automorphisms (empirical probe) ---

struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  std::int64_t det() const noexcept { return a * d - b * c; }
  std::int64_t trace() const noexcept { return a + d; }
  std::int64_t max_abs_entry() const noexcept;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Entry-magnitude cap for matrix powers; beyond it coordinates mod 1 lose
/// too many bits of a long double mantissa.
inline constexpr std::int64_t kMatrixEntryCap = std::int64_t{1} << 36;

/// Product with overflow/cap detection; throws PrecisionLoss.
Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 power(const Matrix2& m, int exponent);

struct TorusPoint {
  double u = 0.0;
  double v = 0.0;
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

/// Z^2-action (v1, v2) -> A^v1 B^v2 on the 2-torus with a truncated
/// adapted metric D(x,y) = max_{|v|<=N} alpha^-|v| rho(T^v x, T^v y).
/// Labeled empirical: no recovery guarantee is claimed for it.
class TorusSystem {
 public:
  static constexpr int kDefaultRadius = 8;

  /// Checks |det| = 1, hyperbolicity and A B = B A. Throws InvalidArgument or
  /// PrecisionLoss (when the power table overflows kMatrixEntryCap).
  TorusSystem(Matrix2 a, Matrix2 b, double alpha = 2.0, int radius = kDefaultRadius);

  const Matrix2& a() const noexcept { return a_; }
  const Matrix2& b() const noexcept { return b_; }
  double alpha() const noexcept { return alpha_; }
  int radius() const noexcept { return radius_; }

  /// A^v.x B^v.y as an integer matrix.
  Matrix2 matrix_for(LatticeVector v) const;
  TorusPoint apply(LatticeVector v, const TorusPoint& p) const;
  /// Truncated adapted metric; returns exactly 0 below 1e-12.
  double distance(const TorusPoint& p, const TorusPoint& q) const;

 private:
  Matrix2 a_;
  Matrix2 b_;
  double alpha_;
  int radius_;
  std::vector<Matrix2> table_;  // matrix_for over |v| <= radius, row-major in (x, y)
};

/// Sup-norm metric on R^2/Z^2, capped at 1.
double torus_rho(const TorusPoint& p, const TorusPoint& q);

inline TorusPoint apply(const TorusSystem& system, LatticeVector v, const TorusPoint& p) {
  return system.apply(v, p);
}
inline double torus_distance(const TorusSystem& system, const TorusPoint& p, const TorusPoint& q) {
  return system.distance(p, q);
}

// --- point generators ---

/// k^(w^2) when it does not exceed `cap`.
std::optional<std::uint64_t> pattern_count(int alphabet, int period,
                                           std::uint64_t cap = kEnumerationCap);

/// The pattern at position `index` of the lexicographic enumeration
/// (cell 0 is the most significant base-k digit).
Pattern pattern_from_index(int alphabet, int period, std::uint64_t index);

/// Single-consumer stream of all k^(w^2) patterns in lexicographic order.
class PatternEnumerator {
 public:
  /// Throws CapExceeded when k^(w^2) > cap.
  PatternEnumerator(int alphabet, int period, std::uint64_t cap = kEnumerationCap);

  std::uint64_t size() const noexcept { return total_; }
  std::optional<Pattern> next();

 private:
  Pattern current_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
};

/// SplitMix64 output for state `seed` after index+1 increments:
///   z = seed + 0x9e3779b97f4a7c15 * (index + 1)
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) noexcept;

/// M distinct patterns, deterministic in (k, w, M, seed). See docs/formats.md
/// for the two sampling regimes. Throws CapExceeded when M > k^(w^2).
std::vector<Pattern> sample_periodic_points(int alphabet, int period, std::uint64_t count,
                                            std::uint64_t seed);

/// Seeded uniform points of [0,1)^2 drawn through mix64.
std::vector<TorusPoint> sample_torus_points(std::uint64_t count, std::uint64_t seed);

}  // namespace dynramsey
