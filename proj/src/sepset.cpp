#include "dynramsey/sepset.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "dynramsey/error.hpp"

namespace dynramsey {

ShiftSeparatedSet greedy_separated(std::span<const Pattern> stream, ShiftDistance epsilon,
                                   Maximality tag) {
  ShiftSeparatedSet out{{}, epsilon, tag};
  for (const auto& p : stream) {
    bool keep = true;
    for (const auto& kept : out.points) {
      if (shift_min_diff(p, kept) < epsilon) {
        keep = false;
        break;
      }
    }
    if (keep) out.points.push_back(p);
  }
  return out;
}

ShiftSeparatedSet greedy_separated(PatternEnumerator& universe, ShiftDistance epsilon) {
  std::vector<Pattern> all;
  all.reserve(universe.size());
  while (auto p = universe.next()) all.push_back(std::move(*p));
  return greedy_separated(all, epsilon, Maximality::Exhaustive);
}

TorusSeparatedSet greedy_separated(const TorusSystem& system, std::span<const TorusPoint> stream,
                                   double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  TorusSeparatedSet out{{}, epsilon, Maximality::Stream};
  for (const auto& p : stream) {
    bool keep = true;
    for (const auto& kept : out.points) {
      if (system.distance(p, kept) < epsilon) {
        keep = false;
        break;
      }
    }
    if (keep) out.points.push_back(p);
  }
  return out;
}

SeparationCheck separation_check(std::span<const Pattern> points, ShiftDistance epsilon) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (shift_min_diff(points[i], points[j]) < epsilon) return {false, std::pair{i, j}};
    }
  }
  return {};
}

SeparationCheck separation_check(const TorusSystem& system, std::span<const TorusPoint> points,
                                 double epsilon) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (system.distance(points[i], points[j]) < epsilon) return {false, std::pair{i, j}};
    }
  }
  return {};
}

BigInt s_count_shift_exact(int alphabet, int n) {
  if (alphabet < 2 || n < 0) throw Error(ErrorCode::InvalidArgument, "need k >= 2 and n >= 0");
  const auto side = static_cast<std::uint64_t>(2 * n + 1);
  return pow_big(static_cast<std::uint64_t>(alphabet), side * side);
}

double PowerCount::ln() const {
  return static_cast<double>(exponent) * std::log(static_cast<double>(base));
}

double PowerCount::log2() const {
  return static_cast<double>(exponent) * std::log2(static_cast<double>(base));
}

GrowthSequence shift_growth_sequence(int alphabet, int n_min, int n_max) {
  if (alphabet < 2) throw Error(ErrorCode::InvalidArgument, "alphabet must be >= 2");
  GrowthSequence seq;
  for (int n = n_min; n <= n_max; ++n) {
    const auto side = static_cast<std::uint64_t>(2 * n + 1);
    seq.push_back({n, {static_cast<std::uint64_t>(alphabet), side * side}});
  }
  return seq;
}

namespace {

void check_sequence(const GrowthSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].count.base == 0) throw Error(ErrorCode::InvalidArgument, "counts must be positive");
    if (i > 0 && seq[i].n <= seq[i - 1].n) {
      throw Error(ErrorCode::InvalidArgument, "growth sequence n must strictly increase");
    }
  }
}

std::optional<int> exact_log2(std::uint64_t value) {
  if (value == 0 || (value & (value - 1)) != 0) return std::nullopt;
  int bits = 0;
  while (value > 1) {
    value >>= 1U;
    ++bits;
  }
  return bits;
}

std::string format_g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace

std::vector<double> dimension_sequence(const GrowthSequence& counts, const Ratio& alpha) {
  check_sequence(counts);
  if (counts.empty()) throw Error(ErrorCode::InvalidArgument, "empty growth sequence");
  const double log_alpha = std::log(alpha.to_double());
  if (!(log_alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
  std::vector<double> terms;
  terms.reserve(counts.size());
  for (const auto& t : counts) {
    if (t.n < 1) throw Error(ErrorCode::InvalidArgument, "dimension terms need n >= 1");
    terms.push_back(t.count.ln() / (t.n * log_alpha));
  }
  return terms;
}

std::string growth_csv(const GrowthSequence& counts, const Ratio& alpha) {
  const auto terms = dimension_sequence(counts, alpha);
  std::string out = "n,count_log2,term\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out += std::to_string(counts[i].n) + "," + format_g(counts[i].count.log2()) + "," +
           format_g(terms[i]) + "\n";
  }
  return out;
}

SuperpolyReport superpoly_check(const GrowthSequence& q, GrowthMode mode, double parameter,
                                int n0, std::uint64_t grid_max) {
  check_sequence(q);
  SuperpolyReport report;
  report.mode = mode;
  report.parameter = parameter;
  report.n0 = n0;

  if (mode == GrowthMode::ExponentialRatio) {
    if (!(parameter > 0.0)) throw Error(ErrorCode::InvalidArgument, "A must be positive");
    const double ln_a = std::log(parameter);
    const auto a_bits = parameter == std::floor(parameter) && parameter < 1.8e19
                            ? exact_log2(static_cast<std::uint64_t>(parameter))
                            : std::nullopt;
    for (const auto& term : q) {
      if (term.n < n0) continue;
      GrowthSample s;
      s.n = static_cast<std::uint64_t>(term.n);
      s.gap = term.count.ln() - term.n * ln_a;
      if (auto base_bits = exact_log2(term.count.base); base_bits && a_bits) {
        s.exact_gap_log2 = static_cast<std::int64_t>(term.count.exponent) * *base_bits -
                           static_cast<std::int64_t>(term.n) * *a_bits;
      }
      report.samples.push_back(s);
    }
    if (report.samples.size() < 3) {
      throw Error(ErrorCode::RangeTooSmall, "need at least 3 sample points from n0");
    }
    auto positive = [](const GrowthSample& s) {
      return s.exact_gap_log2 ? *s.exact_gap_log2 > 0 : s.gap > 0.0;
    };
    auto increasing = [](const GrowthSample& a, const GrowthSample& b) {
      return a.exact_gap_log2 && b.exact_gap_log2 ? *b.exact_gap_log2 > *a.exact_gap_log2
                                                  : b.gap > a.gap;
    };
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
      const auto& s = report.samples[i];
      if (!positive(s) || (i > 0 && !increasing(report.samples[i - 1], s))) {
        report.first_failure = s.n;
        break;
      }
    }
    report.established = !report.first_failure.has_value();
    return report;
  }

  // Log-composition: q(floor(ln n) + 1) - d ln n.
  std::map<int, PowerCount> by_n;
  for (const auto& t : q) by_n.emplace(t.n, t.count);
  auto h = [&](std::uint64_t n, int step) {
    auto it = by_n.find(step + 1);
    if (it == by_n.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "q is not defined at n = " + std::to_string(step + 1));
    }
    return it->second.ln() - parameter * std::log(static_cast<double>(n));
  };
  std::vector<double> left_ends;
  std::vector<double> right_ends;
  std::vector<std::uint64_t> step_starts;
  for (int j = 0;; ++j) {
    const BigInt left = ceil_exp(j);
    if (left > grid_max) break;
    BigInt right = ceil_exp(j + 1) - 1;
    if (right > grid_max) right = grid_max;
    const auto l = left.convert_to<std::uint64_t>();
    const auto r = right.convert_to<std::uint64_t>();
    if (n0 > 0 && r < static_cast<std::uint64_t>(n0)) continue;
    step_starts.push_back(l);
    left_ends.push_back(h(l, j));
    report.samples.push_back({l, left_ends.back(), std::nullopt});
    if (r != l) {
      right_ends.push_back(h(r, j));
      report.samples.push_back({r, right_ends.back(), std::nullopt});
    } else {
      right_ends.push_back(left_ends.back());
    }
  }
  if (report.samples.size() < 3) {
    throw Error(ErrorCode::RangeTooSmall, "geometric grid has fewer than 3 points");
  }
  for (std::size_t j = 1; j < left_ends.size(); ++j) {
    if (!(left_ends[j] > left_ends[j - 1]) || !(right_ends[j] > right_ends[j - 1])) {
      report.first_failure = step_starts[j];
      break;
    }
  }
  report.established = !report.first_failure.has_value();
  return report;
}

}  // namespace dynramsey
