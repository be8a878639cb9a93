#pragma once

// Separated sets, separated counts S(eps), box-dimension terms and growth checks.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynramsey/action.hpp"
#include "dynramsey/numeric.hpp"

namespace dynramsey {

/// What a separated set is maximal against: the whole enumerated universe or
/// only the stream it was built from.
enum class Maximality { Exhaustive, Stream };

template <class Point, class Dist>
struct SeparatedSet {
  std::vector<Point> points;
  Dist epsilon;
  Maximality maximal_wrt = Maximality::Stream;
};

using ShiftSeparatedSet = SeparatedSet<Pattern, ShiftDistance>;
using TorusSeparatedSet = SeparatedSet<TorusPoint, double>;

/// First-fit greedy: keep a point iff it is at distance >= epsilon from every
/// kept point. Maximal with respect to the input order's universe.
ShiftSeparatedSet greedy_separated(std::span<const Pattern> stream, ShiftDistance epsilon,
                                   Maximality tag = Maximality::Stream);
/// Drains the enumerator; the result is tagged Exhaustive.
ShiftSeparatedSet greedy_separated(PatternEnumerator& universe, ShiftDistance epsilon);
TorusSeparatedSet greedy_separated(const TorusSystem& system, std::span<const TorusPoint> stream,
                                   double epsilon);

struct SeparationCheck {
  bool separated = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first (i < j) in row order
};

SeparationCheck separation_check(std::span<const Pattern> points, ShiftDistance epsilon);
SeparationCheck separation_check(const TorusSystem& system, std::span<const TorusPoint> points,
                                 double epsilon);

/// S(alpha^-n) on the full shift over k symbols: k^((2n+1)^2).
BigInt s_count_shift_exact(int alphabet, int n);

/// A positive count stored as base^exponent.
struct PowerCount {
  std::uint64_t base = 1;
  std::uint64_t exponent = 1;

  double ln() const;
  double log2() const;
};

struct GrowthTerm {
  int n = 0;
  PowerCount count;
};

/// Terms with strictly increasing n.
using GrowthSequence = std::vector<GrowthTerm>;

/// q(n) = S(alpha^-n) = k^((2n+1)^2) for n = n_min..n_max.
GrowthSequence shift_growth_sequence(int alphabet, int n_min, int n_max);

/// term(n) = ln S / (n ln alpha). Needs n >= 1 in every term.
std::vector<double> dimension_sequence(const GrowthSequence& counts, const Ratio& alpha);

/// CSV with header `n,count_log2,term`; numbers printed with %.10g.
std::string growth_csv(const GrowthSequence& counts, const Ratio& alpha);

enum class GrowthMode {
  ExponentialRatio,  // ln q(n) - n ln A positive and strictly increasing from n0
  LogComposition,    // ln q(floor(ln n) + 1) - d ln n diverging on a geometric grid
};

struct GrowthSample {
  std::uint64_t n = 0;
  double gap = 0.0;  // natural-log gap
  std::optional<std::int64_t> exact_gap_log2;
};

struct SuperpolyReport {
  GrowthMode mode = GrowthMode::ExponentialRatio;
  double parameter = 0.0;
  int n0 = 0;
  bool established = false;
  std::vector<GrowthSample> samples;
  std::optional<std::uint64_t> first_failure;  // the n where the check broke
};

/// Exponential-ratio mode evaluates every supplied n >= n0 (gaps are exact in
/// log2 when both q's base and A are powers of two). Log-composition mode
/// samples both ends of each step [ceil(e^j), ceil(e^(j+1)) - 1] of
/// floor(ln n) up to `grid_max` and requires both end sequences to increase
/// strictly. Throws RangeTooSmall with fewer than 3 samples, InvalidArgument
/// when q is not defined at a needed n.
SuperpolyReport superpoly_check(const GrowthSequence& q, GrowthMode mode, double parameter,
                                int n0, std::uint64_t grid_max = 1'000'000);

}  // namespace dynramsey
