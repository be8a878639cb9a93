#include "dynramsey/report_json.hpp"

namespace dynramsey {

using nlohmann::ordered_json;

namespace {

std::string big(const BigInt& value) { return value.str(); }

ordered_json shift_distance(const ShiftDistance& d) {
  if (d.is_equal()) return "equal";
  return d.exponent();
}

}  // namespace

ordered_json to_json(const LatticeVector& v) { return ordered_json::array({v.x, v.y}); }

ordered_json to_json(const RamseyCertificate& c) {
  return {{"kind", "ramsey_lower_bound"}, {"statement", c.statement()},
          {"p", c.p},
          {"k", c.k},
          {"q", c.q},
          {"graph_checksum", c.graph_checksum},
          {"verified", c.verified}};
}

ordered_json to_json(const CliqueReport& report, const OppositeUpperBound& bound) {
  ordered_json colors = ordered_json::array();
  for (const auto& c : report.colors) {
    colors.push_back({{"index", c.index},
                      {"v", to_json(c.vector)},
                      {"order", c.order},
                      {"witness", c.witness}});
  }
  ordered_json out;
  out["colors"] = std::move(colors);
  out["overall_max"] = report.overall_max;
  out["certificate"] = bound.certificate ? to_json(*bound.certificate) : ordered_json(nullptr);
  out["separation"] = {{"color", report.separation.color},
                       {"v", to_json(report.separation.vector)},
                       {"threshold_exponent", report.separation.threshold_exponent},
                       {"points", report.separation.points},
                       {"verified", report.separation.verified}};
  return out;
}

ordered_json to_json(const OppositeRamseyResult& r) {
  ordered_json edges = ordered_json::array();
  for (int i = 0; i < r.q; ++i) {
    for (int j = i + 1; j < r.q; ++j) edges.push_back({i, j, r.extremal.color(i, j)});
  }
  return {{"p", r.p},
          {"q", r.q},
          {"r", r.r},
          {"extremal_index", r.extremal_index},
          {"extremal_coloring", std::move(edges)},
          {"extremal_max_mono_clique", r.extremal.max_mono_clique()}};
}

ordered_json to_json(const BoundsRecord& b) {
  return {{"g", b.g},
          {"k", b.k},
          {"c", b.c.to_string()},
          {"c_is_illustrative", true},
          {"gg_upper", big(b.gg_upper)},
          {"lr_lower", big(b.lr_lower)},
          {"lr_lower_le_gg_upper", b.lr_lower <= b.gg_upper}};
}

ordered_json to_json(const SandwichReport& s) {
  return {{"p", s.p},
          {"q", s.q},
          {"r", s.r},
          {"exact", s.exact},
          {"statements", s.statements},
          {"c", s.c.to_string()},
          {"c_is_illustrative", true},
          {"lr_lower_next", big(s.lr_lower_next)},
          {"gg_upper_next", big(s.gg_upper_next)},
          {"weaker_than_lr_lower", s.weaker_than_lr},
          {"within_gg_upper", s.within_gg}};
}

ordered_json to_json(const SuperpolyReport& r) {
  ordered_json samples = ordered_json::array();
  for (const auto& s : r.samples) {
    ordered_json row = {{"n", s.n}, {"gap", s.gap}};
    if (s.exact_gap_log2) row["exact_gap_log2"] = *s.exact_gap_log2;
    samples.push_back(std::move(row));
  }
  return {{"mode", r.mode == GrowthMode::ExponentialRatio ? "exponential_ratio" : "log_composition"},
          {"parameter", r.parameter},
          {"n0", r.n0},
          {"log_base", "e"},
          {"established", r.established},
          {"first_failure", r.first_failure ? ordered_json(*r.first_failure) : ordered_json(nullptr)},
          {"samples", std::move(samples)}};
}

ordered_json to_json(const ShiftCounterexample& f, const ShiftSystem& system, int n) {
  return {{"system", "shift"},
          {"alphabet", system.alphabet},
          {"alpha", system.alpha.to_string()},
          {"n", n},
          {"found", true},
          {"x", f.x.encode()},
          {"y", f.y.encode()},
          {"coset", to_json(f.coset)},
          {"distance_exponent", shift_distance(f.distance)},
          {"required_exponent_at_most", f.required_exponent},
          {"distance_at_least_alpha_pow_minus_n2", !f.distance.is_equal() &&
                                                       f.distance.exponent() <= f.required_exponent},
          {"best_vector", to_json(f.best.vector)},
          {"best_exponent", shift_distance(f.best.achieved)},
          {"threshold_exponent", system.threshold},
          {"recovery_below_threshold", !system.separates(f.best.achieved)},
          {"evaluations", f.evaluations}};
}

ordered_json to_json(const TorusCounterexample& f, const TorusSystem& system, int n) {
  return {{"system", "torus"},
          {"empirical", true},
          {"alpha", system.alpha()},
          {"radius", system.radius()},
          {"n", n},
          {"found", true},
          {"x", {f.x.u, f.x.v}},
          {"y", {f.y.u, f.y.v}},
          {"distance", f.distance},
          {"required", f.required},
          {"best_vector", to_json(f.best.vector)},
          {"best", f.best.achieved},
          {"threshold", 1.0 / (4.0 * system.alpha())},
          {"evaluations", f.evaluations}};
}

ordered_json to_json(const ShiftRecoveryReport& r) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"x", f.x.encode()}, {"y", f.y.encode()}, {"best", shift_distance(f.best)}});
  }
  return {{"pairs_checked", r.pairs_checked},
          {"pairs_skipped", r.pairs_skipped},
          {"held", r.held()},
          {"failures", std::move(failures)}};
}

}  // namespace dynramsey
