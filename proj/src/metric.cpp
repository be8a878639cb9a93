#include "dynramsey/metric.hpp"

#include <cmath>
#include <numbers>

namespace dynramsey {

ShiftWitness best_recovery(const Pattern& x, const Pattern& y, int n) {
  ShiftWitness best;
  bool first = true;
  for (const auto& v : scan_order(n)) {
    const auto d = shift_min_diff(apply(x, v), apply(y, v));
    if (first || d > best.achieved) {
      best = {v, d};
      first = false;
    }
  }
  return best;
}

TorusWitness best_recovery(const TorusSystem& system, const TorusPoint& x, const TorusPoint& y,
                           int n) {
  TorusWitness best;
  bool first = true;
  for (const auto& v : scan_order(n)) {
    const double d = system.distance(system.apply(v, x), system.apply(v, y));
    if (first || d > best.achieved) {
      best = {v, d};
      first = false;
    }
  }
  return best;
}

ShiftWitness find_witness(const ShiftSystem& system, const Pattern& x, const Pattern& y, int n) {
  if (x.alphabet() != system.alphabet) {
    throw Error(ErrorCode::MismatchedSystems, "pattern alphabet differs from the system");
  }
  const auto v0 = min_diff_vector(x, y);
  if (!v0) {
    throw NoWitnessError("identical points never separate", {0, 0}, 0.0, ShiftDistance::equal());
  }
  if (v0->norm() <= n) return {*v0, ShiftDistance::from_exponent(0)};

  const auto best = best_recovery(x, y, n);
  if (system.separates(best.achieved)) return best;
  throw NoWitnessError("no |v| <= " + std::to_string(n) + " reaches exponent " +
                           std::to_string(system.threshold) + "; best exponent " +
                           std::to_string(best.achieved.exponent()),
                       best.vector, best.achieved.value(system.alpha), best.achieved);
}

TorusWitness find_witness(const TorusSystem& system, const TorusPoint& x, const TorusPoint& y,
                          int n) {
  const auto best = best_recovery(system, x, y, n);
  const double threshold = 1.0 / (4.0 * system.alpha());
  if (best.achieved >= threshold) return best;
  throw NoWitnessError("no |v| <= " + std::to_string(n) + " reaches 1/(4 alpha)", best.vector,
                       best.achieved, std::nullopt);
}

void ShiftRecoveryVerifier::check(const Pattern& x, const Pattern& y) {
  const auto d = shift_min_diff(x, y);
  if (d.is_equal() || d.exponent() > n_) {
    ++report_.pairs_skipped;
    return;
  }
  ++report_.pairs_checked;
  for (const auto& v : scan_order(n_)) {
    if (system_.separates(shift_min_diff(apply(x, v), apply(y, v)))) return;
  }
  report_.failures.push_back({x, y, best_recovery(x, y, n_).achieved});
}

ShiftRecoveryReport verify_recovery(const ShiftSystem& system,
                                    std::span<const std::pair<Pattern, Pattern>> pairs, int n) {
  ShiftRecoveryVerifier verifier(system, n);
  for (const auto& [x, y] : pairs) verifier.check(x, y);
  return verifier.report();
}

TorusRecoveryReport verify_recovery(const TorusSystem& system,
                                    std::span<const std::pair<TorusPoint, TorusPoint>> pairs,
                                    int n) {
  TorusRecoveryReport report;
  const double floor = std::pow(system.alpha(), -n);
  const double threshold = 1.0 / (4.0 * system.alpha());
  for (const auto& [x, y] : pairs) {
    if (system.distance(x, y) < floor) {
      ++report.pairs_skipped;
      continue;
    }
    ++report.pairs_checked;
    const auto best = best_recovery(system, x, y, n);
    if (best.achieved < threshold) report.failures.push_back({x, y, best.achieved});
  }
  return report;
}

std::optional<ShiftCounterexample> probe_question(const ShiftSystem& system, int n,
                                                  std::uint64_t budget) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "probe needs n >= 1");
  const int required = n * n;
  std::uint64_t evaluations = 0;
  auto spend = [&](std::uint64_t cost) {
    if (evaluations + cost > budget) {
      throw Error(ErrorCode::CapExceeded, "probe budget of " + std::to_string(budget) +
                                              " distance evaluations exhausted");
    }
    evaluations += cost;
  };
  const auto per_scan = static_cast<std::uint64_t>((2 * n + 1) * (2 * n + 1));
  for (int s = n + system.threshold + 1; s <= required; ++s) {
    const int w = 2 * s + 1;
    Pattern x(w, system.alphabet);
    Pattern y(w, system.alphabet);
    y.set_cell(s, 0, 1);

    spend(1);
    const auto d = shift_min_diff(x, y);
    if (d.is_equal() || d.exponent() > required) continue;
    spend(per_scan);
    const auto best = best_recovery(x, y, n);
    if (system.separates(best.achieved)) continue;
    return ShiftCounterexample{std::move(x), std::move(y), {s, 0}, d, required, best, evaluations};
  }
  return std::nullopt;
}

TorusCounterexample probe_question(const TorusSystem& system, int n, std::uint64_t budget,
                                   std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "probe needs n >= 1");
  const double required = std::pow(system.alpha(), -static_cast<double>(n) * n);
  const double threshold = 1.0 / (4.0 * system.alpha());
  const auto per_scan = static_cast<std::uint64_t>((2 * n + 1) * (2 * n + 1));
  constexpr double kUnit = 1.0 / 9007199254740992.0;
  constexpr int kBisectionSteps = 40;

  std::uint64_t evaluations = 0;
  auto distance = [&](const TorusPoint& p, const TorusPoint& q) {
    ++evaluations;
    return system.distance(p, q);
  };
  auto wrap = [](double c) { return c - std::floor(c); };

  for (std::uint64_t trial = 0;; ++trial) {
    if (evaluations + kBisectionSteps + 1 + per_scan > budget) {
      throw Error(ErrorCode::CapExceeded, "torus probe spent " + std::to_string(evaluations) +
                                              " of " + std::to_string(budget) +
                                              " evaluations without a counterexample");
    }
    const TorusPoint x{static_cast<double>(mix64(seed, 3 * trial) >> 11) * kUnit,
                       static_cast<double>(mix64(seed, 3 * trial + 1) >> 11) * kUnit};
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(mix64(seed, 3 * trial + 2) >> 11) * kUnit;
    auto displaced = [&](double delta) {
      return TorusPoint{wrap(x.u + delta * std::cos(angle)), wrap(x.v + delta * std::sin(angle))};
    };

    double lo = 0.0;
    double hi = 0.5;
    if (distance(x, displaced(hi)) < required) continue;
    for (int step = 0; step < kBisectionSteps; ++step) {
      const double mid = 0.5 * (lo + hi);
      (distance(x, displaced(mid)) >= required ? hi : lo) = mid;
    }
    const TorusPoint y = displaced(hi);
    evaluations += per_scan;
    const auto best = best_recovery(system, x, y, n);
    if (best.achieved >= threshold) continue;
    const double d = distance(x, y);
    if (d >= required) return {x, y, d, required, best, evaluations};
  }
}

}  // namespace dynramsey
