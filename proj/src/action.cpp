#include "dynramsey/action.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "dynramsey/error.hpp"

namespace dynramsey {

std::vector<LatticeVector> ring_vectors(int ring) {
  std::vector<LatticeVector> out;
  if (ring == 0) {
    out.push_back({0, 0});
    return out;
  }
  for (int x = -ring; x <= ring; ++x) {
    if (x == -ring || x == ring) {
      for (int y = -ring; y <= ring; ++y) out.push_back({x, y});
    } else {
      out.push_back({x, -ring});
      out.push_back({x, ring});
    }
  }
  return out;
}

std::vector<LatticeVector> scan_order(int radius) {
  std::vector<LatticeVector> out;
  for (int r = 0; r <= radius; ++r) {
    auto ring = ring_vectors(r);
    out.insert(out.end(), ring.begin(), ring.end());
  }
  return out;
}

// ---------------------------------------------------------------- Pattern

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void check_shape(int period, int alphabet) {
  if (period < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  if (alphabet < 2 || alphabet > 36) {
    throw Error(ErrorCode::InvalidArgument, "alphabet size must lie in [2, 36]");
  }
}

int parse_int(std::string_view text, std::string_view what) {
  if (text.empty()) throw Error(ErrorCode::BadFormat, "empty " + std::string(what));
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || value > 100000) {
      throw Error(ErrorCode::BadFormat, "bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Pattern::Pattern(int period, int alphabet) : period_(period), alphabet_(alphabet) {
  check_shape(period, alphabet);
  cells_.assign(static_cast<std::size_t>(period) * static_cast<std::size_t>(period), 0);
}

Pattern::Pattern(int period, int alphabet, std::vector<std::uint8_t> cells)
    : period_(period), alphabet_(alphabet), cells_(std::move(cells)) {
  check_shape(period, alphabet);
  if (cells_.size() != static_cast<std::size_t>(period) * static_cast<std::size_t>(period)) {
    throw Error(ErrorCode::InvalidArgument, "pattern needs w^2 cells");
  }
  for (auto s : cells_) {
    if (s >= alphabet_) throw Error(ErrorCode::InvalidArgument, "symbol outside alphabet");
  }
}

void Pattern::set_cell(int i, int j, std::uint8_t symbol) {
  if (symbol >= alphabet_) throw Error(ErrorCode::InvalidArgument, "symbol outside alphabet");
  cells_[static_cast<std::size_t>(wrap(i) * period_ + wrap(j))] = symbol;
}

std::string Pattern::encode() const {
  std::string out = "k" + std::to_string(alphabet_) + ":w" + std::to_string(period_) + ":";
  out.reserve(out.size() + cells_.size());
  for (auto s : cells_) out.push_back(kDigits[s]);
  return out;
}

Pattern Pattern::decode(std::string_view text) {
  auto first = text.find(':');
  auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.empty() || text[0] != 'k' ||
      text[first + 1] != 'w') {
    throw Error(ErrorCode::BadFormat, "pattern must look like k<k>:w<w>:<digits>");
  }
  int k = parse_int(text.substr(1, first - 1), "alphabet size");
  int w = parse_int(text.substr(first + 2, second - first - 2), "period");
  if (k < 2 || k > 36 || w < 1) throw Error(ErrorCode::BadFormat, "pattern shape out of range");
  auto digits = text.substr(second + 1);
  if (digits.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(w)) {
    throw Error(ErrorCode::BadFormat, "pattern has " + std::to_string(digits.size()) +
                                          " symbols, expected " + std::to_string(w * w));
  }
  std::vector<std::uint8_t> cells;
  cells.reserve(digits.size());
  for (char c : digits) {
    auto pos = kDigits.find(c);
    if (pos == std::string_view::npos || static_cast<int>(pos) >= k) {
      throw Error(ErrorCode::BadFormat, std::string("symbol '") + c + "' outside alphabet");
    }
    cells.push_back(static_cast<std::uint8_t>(pos));
  }
  return Pattern(w, k, std::move(cells));
}

// ---------------------------------------------------------------- metric

double ShiftDistance::value(const Ratio& alpha) const {
  if (is_equal()) return 0.0;
  return std::pow(alpha.to_double(), -exponent_);
}

int threshold_exponent(const Ratio& alpha) {
  if (alpha.num <= alpha.den) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
  // alpha^t >= 4 alpha  <=>  num^(t-1) >= 4 den^(t-1)
  BigInt lhs = 1;
  BigInt rhs = 4;
  int t = 1;
  while (lhs < rhs) {
    lhs *= alpha.num;
    rhs *= alpha.den;
    ++t;
  }
  return t;
}

ShiftSystem ShiftSystem::make(int alphabet, Ratio alpha) {
  check_shape(1, alphabet);
  ShiftSystem s;
  s.alphabet = alphabet;
  s.alpha = alpha;
  s.threshold = threshold_exponent(alpha);
  return s;
}

Pattern apply(const Pattern& x, LatticeVector v) {
  const int w = x.period();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < w; ++j) {
      cells[static_cast<std::size_t>(i * w + j)] = x.at({i + v.x, j + v.y});
    }
  }
  return Pattern(w, x.alphabet(), std::move(cells));
}

std::optional<LatticeVector> min_diff_vector(const Pattern& x, const Pattern& y) {
  if (x.period() != y.period() || x.alphabet() != y.alphabet()) {
    throw Error(ErrorCode::MismatchedSystems, "patterns differ in period or alphabet");
  }
  const int w = x.period();
  // The differing set is w-periodic, so a nonempty one meets every window of radius w.
  for (int r = 0; r <= w; ++r) {
    for (int vx = -r; vx <= r; ++vx) {
      // inner columns of a ring only touch its top and bottom rows
      const int step = (vx == -r || vx == r) ? 1 : 2 * r;
      for (int vy = -r; vy <= r; vy += step) {
        if (x.at({vx, vy}) != y.at({vx, vy})) return LatticeVector{vx, vy};
      }
    }
  }
  return std::nullopt;
}

ShiftDistance shift_min_diff(const Pattern& x, const Pattern& y) {
  auto v = min_diff_vector(x, y);
  return v ? ShiftDistance::from_exponent(v->norm()) : ShiftDistance::equal();
}

// ---------------------------------------------------------------- torus

std::int64_t Matrix2::max_abs_entry() const noexcept {
  auto mag = [](std::int64_t e) { return e < 0 ? -e : e; };
  return std::max({mag(a), mag(b), mag(c), mag(d)});
}

Matrix2 multiply(const Matrix2& l, const Matrix2& r) {
  auto entry = [](std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t t) {
    __int128 v = static_cast<__int128>(p) * q + static_cast<__int128>(s) * t;
    if (v > kMatrixEntryCap || v < -static_cast<__int128>(kMatrixEntryCap)) {
      throw Error(ErrorCode::PrecisionLoss, "matrix power exceeds entry cap 2^36");
    }
    return static_cast<std::int64_t>(v);
  };
  return {entry(l.a, r.a, l.b, r.c), entry(l.a, r.b, l.b, r.d), entry(l.c, r.a, l.d, r.c),
          entry(l.c, r.b, l.d, r.d)};
}

Matrix2 power(const Matrix2& m, int exponent) {
  Matrix2 base = m;
  if (exponent < 0) {
    const std::int64_t det = m.det();
    if (det != 1 && det != -1) throw Error(ErrorCode::InvalidArgument, "matrix not unimodular");
    base = {det * m.d, -det * m.b, -det * m.c, det * m.a};
    exponent = -exponent;
  }
  Matrix2 result;
  for (int i = 0; i < exponent; ++i) result = multiply(result, base);
  return result;
}

namespace {

void check_hyperbolic_unimodular(const Matrix2& m, const char* name) {
  const auto det = m.det();
  const auto tr = m.trace();
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must have |det| = 1");
  }
  const bool hyperbolic = det == 1 ? (tr > 2 || tr < -2) : tr != 0;
  if (!hyperbolic) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " has an eigenvalue of modulus 1");
  }
}

double wrap_unit(long double value) {
  long double f = value - std::floor(value);
  if (f >= 1.0L) f -= 1.0L;
  return static_cast<double>(f);
}

}  // namespace

TorusSystem::TorusSystem(Matrix2 a, Matrix2 b, double alpha, int radius)
    : a_(a), b_(b), alpha_(alpha), radius_(radius) {
  check_hyperbolic_unimodular(a_, "A");
  check_hyperbolic_unimodular(b_, "B");
  if (!(multiply(a_, b_) == multiply(b_, a_))) {
    throw Error(ErrorCode::InvalidArgument, "A and B do not commute");
  }
  if (!(alpha_ > 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
  if (radius_ < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  const int side = 2 * radius_ + 1;
  table_.reserve(static_cast<std::size_t>(side) * side);
  for (int x = -radius_; x <= radius_; ++x) {
    for (int y = -radius_; y <= radius_; ++y) table_.push_back(multiply(power(a_, x), power(b_, y)));
  }
}

Matrix2 TorusSystem::matrix_for(LatticeVector v) const {
  if (v.norm() <= radius_) {
    const int side = 2 * radius_ + 1;
    return table_[static_cast<std::size_t>((v.x + radius_) * side + (v.y + radius_))];
  }
  return multiply(power(a_, v.x), power(b_, v.y));
}

TorusPoint TorusSystem::apply(LatticeVector v, const TorusPoint& p) const {
  const Matrix2 m = matrix_for(v);
  const long double u = p.u;
  const long double w = p.v;
  return {wrap_unit(m.a * u + m.b * w), wrap_unit(m.c * u + m.d * w)};
}

double torus_rho(const TorusPoint& p, const TorusPoint& q) {
  auto coord = [](double s, double t) {
    double d = std::fabs(s - t);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
  };
  return std::min(1.0, std::max(coord(p.u, q.u), coord(p.v, q.v)));
}

double TorusSystem::distance(const TorusPoint& p, const TorusPoint& q) const {
  double best = 0.0;
  for (int x = -radius_; x <= radius_; ++x) {
    for (int y = -radius_; y <= radius_; ++y) {
      const LatticeVector v{x, y};
      const double weight = std::pow(alpha_, -v.norm());
      best = std::max(best, weight * torus_rho(apply(v, p), apply(v, q)));
    }
  }
  return best < 1e-12 ? 0.0 : best;
}

// ---------------------------------------------------------------- generators

std::optional<std::uint64_t> pattern_count(int alphabet, int period, std::uint64_t cap) {
  return pow_capped(static_cast<std::uint64_t>(alphabet),
                    static_cast<std::uint64_t>(period) * static_cast<std::uint64_t>(period), cap);
}

Pattern pattern_from_index(int alphabet, int period, std::uint64_t index) {
  Pattern p(period, alphabet);
  for (int c = period * period - 1; c >= 0; --c) {
    p.set_cell(c / period, c % period, static_cast<std::uint8_t>(index % alphabet));
    index /= static_cast<std::uint64_t>(alphabet);
  }
  return p;
}

PatternEnumerator::PatternEnumerator(int alphabet, int period, std::uint64_t cap)
    : current_(period, alphabet), total_(0) {
  auto total = pattern_count(alphabet, period, cap);
  if (!total) {
    throw Error(ErrorCode::CapExceeded, std::to_string(alphabet) + "^" +
                                            std::to_string(period * period) +
                                            " patterns exceed enumeration cap " +
                                            std::to_string(cap));
  }
  total_ = *total;
}

std::optional<Pattern> PatternEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  if (emitted_ > 0) {
    // odometer increment, last cell least significant
    const int w = current_.period();
    for (int c = w * w - 1; c >= 0; --c) {
      const int i = c / w;
      const int j = c % w;
      const auto s = current_.cell(i, j);
      if (s + 1 < current_.alphabet()) {
        current_.set_cell(i, j, static_cast<std::uint8_t>(s + 1));
        break;
      }
      current_.set_cell(i, j, 0);
    }
  }
  ++emitted_;
  return current_;
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Pattern> sample_periodic_points(int alphabet, int period, std::uint64_t count,
                                            std::uint64_t seed) {
  check_shape(period, alphabet);
  const auto total = pattern_count(alphabet, period, ~std::uint64_t{0});
  if (total && count > *total) {
    throw Error(ErrorCode::CapExceeded, "requested " + std::to_string(count) +
                                            " distinct patterns but only " +
                                            std::to_string(*total) + " exist");
  }
  std::vector<Pattern> out;
  out.reserve(count);
  if (total && *total <= kEnumerationCap && count * 2 > *total) {
    // Dense regime: partial Fisher-Yates over enumeration indices.
    std::vector<std::uint64_t> index(*total);
    std::iota(index.begin(), index.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t j = i + mix64(seed, i) % (*total - i);
      std::swap(index[i], index[j]);
      out.push_back(pattern_from_index(alphabet, period, index[i]));
    }
    return out;
  }
  // Sparse regime: attempt a draws symbol c as mix64(mix64(seed, a), c) % k,
  // duplicates are skipped.
  std::unordered_set<std::string> seen;
  const int cells = period * period;
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    const std::uint64_t item_seed = mix64(seed, attempt);
    std::vector<std::uint8_t> symbols(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) {
      symbols[static_cast<std::size_t>(c)] =
          static_cast<std::uint8_t>(mix64(item_seed, static_cast<std::uint64_t>(c)) %
                                    static_cast<std::uint64_t>(alphabet));
    }
    Pattern p(period, alphabet, std::move(symbols));
    if (seen.insert(p.encode()).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<TorusPoint> sample_torus_points(std::uint64_t count, std::uint64_t seed) {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<TorusPoint> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back({static_cast<double>(mix64(seed, 2 * i) >> 11) * kScale,
                   static_cast<double>(mix64(seed, 2 * i + 1) >> 11) * kScale});
  }
  return out;
}

}  // namespace dynramsey
