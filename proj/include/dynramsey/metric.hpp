#pragma once

// Witness vectors for the recovery property
//   D(x, y) >= alpha^-n  ==>  max_{|v| <= n} D(T^v x, T^v y) >= 1/(4 alpha)
// and a probe for its strengthened form with alpha^-(n^2).

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dynramsey/action.hpp"
#include "dynramsey/error.hpp"

namespace dynramsey {

struct ShiftWitness {
  LatticeVector vector;
  ShiftDistance achieved = ShiftDistance::equal();
};

struct TorusWitness {
  LatticeVector vector;
  double achieved = 0.0;
};

/// Raised when no |v| <= n pushes the pair to 1/(4 alpha); carries the best
/// attempt (first in scan order among the maxima).
class NoWitnessError : public Error {
 public:
  NoWitnessError(const std::string& what, LatticeVector best_vector, double best_value,
                 std::optional<ShiftDistance> best_shift)
      : Error(ErrorCode::NoWitness, what),
        best_vector(best_vector),
        best_value(best_value),
        best_shift(best_shift) {}

  LatticeVector best_vector;
  double best_value;
  std::optional<ShiftDistance> best_shift;
};

/// The vector of C_n maximizing D(T^v x, T^v y), ties by scan order. On the
/// shift this is the min-norm differing coordinate whenever its norm is <= n.
/// Throws NoWitnessError when the maximum misses the 1/(4 alpha) threshold.
ShiftWitness find_witness(const ShiftSystem& system, const Pattern& x, const Pattern& y, int n);
TorusWitness find_witness(const TorusSystem& system, const TorusPoint& x, const TorusPoint& y,
                          int n);

/// max over |v| <= n of D(T^v x, T^v y) by direct evaluation of every shift.
ShiftWitness best_recovery(const Pattern& x, const Pattern& y, int n);
TorusWitness best_recovery(const TorusSystem& system, const TorusPoint& x, const TorusPoint& y,
                           int n);

template <class Point, class Dist>
struct RecoveryFailure {
  Point x;
  Point y;
  Dist best;
};

/// Counts merge commutatively; failures are kept in check order per shard.
template <class Point, class Dist>
struct RecoveryReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_skipped = 0;
  std::vector<RecoveryFailure<Point, Dist>> failures;

  bool held() const noexcept { return failures.empty(); }
  void merge(const RecoveryReport& other) {
    pairs_checked += other.pairs_checked;
    pairs_skipped += other.pairs_skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

using ShiftRecoveryReport = RecoveryReport<Pattern, ShiftDistance>;
using TorusRecoveryReport = RecoveryReport<TorusPoint, double>;

/// Streaming form of verify_recovery: feed pairs one at a time.
class ShiftRecoveryVerifier {
 public:
  ShiftRecoveryVerifier(const ShiftSystem& system, int n) : system_(system), n_(n) {}
  void check(const Pattern& x, const Pattern& y);
  const ShiftRecoveryReport& report() const noexcept { return report_; }

 private:
  ShiftSystem system_;
  int n_;
  ShiftRecoveryReport report_;
};

ShiftRecoveryReport verify_recovery(const ShiftSystem& system,
                                    std::span<const std::pair<Pattern, Pattern>> pairs, int n);
TorusRecoveryReport verify_recovery(const TorusSystem& system,
                                    std::span<const std::pair<TorusPoint, TorusPoint>> pairs,
                                    int n);

inline constexpr std::uint64_t kDefaultProbeBudget = 1'000'000;

struct ShiftCounterexample {
  Pattern x;
  Pattern y;
  LatticeVector coset;           // the single differing coordinate class
  ShiftDistance distance;        // D(x, y)
  int required_exponent;         // n^2
  ShiftWitness best;             // best over |v| <= n
  std::uint64_t evaluations = 0;
};

struct TorusCounterexample {
  TorusPoint x;
  TorusPoint y;
  double distance = 0.0;
  double required = 0.0;         // alpha^-(n^2)
  TorusWitness best;
  std::uint64_t evaluations = 0;
};

/// Looks for D(x,y) >= alpha^-(n^2) with max_{|v|<=n} D(T^v x, T^v y) < 1/(4 alpha).
/// The shift search walks s over [n + t* + 1, n^2] with a pair differing
/// exactly on the coset of (s, 0) in period 2s + 1. Every returned pair has
/// been rechecked by a full scan. Throws CapExceeded if `budget` distance
/// evaluations run out before the search space does.
std::optional<ShiftCounterexample> probe_question(const ShiftSystem& system, int n,
                                                  std::uint64_t budget = kDefaultProbeBudget);

/// Seeded random pairs with bisection toward the alpha^-(n^2) boundary.
/// There is no finite search space here, so a spent budget always throws
/// CapExceeded.
TorusCounterexample probe_question(const TorusSystem& system, int n, std::uint64_t budget,
                                   std::uint64_t seed);

}  // namespace dynramsey
