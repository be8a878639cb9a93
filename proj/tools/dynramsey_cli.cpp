// dynramsey: command-line front end.
//
// Exit codes: 0 ok, 2 usage, 3 cap exceeded, 4 I/O or malformed input,
// 5 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dynramsey/cliques.hpp"
#include "dynramsey/colorer.hpp"
#include "dynramsey/error.hpp"
#include "dynramsey/metric.hpp"
#include "dynramsey/ramsey.hpp"
#include "dynramsey/report_json.hpp"
#include "dynramsey/sepset.hpp"
#include "dynramsey/version.hpp"

using namespace dynramsey;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kCap = 3, kIo = 4, kVerify = 5 };

/// Failure with a fixed exit code, raised by the command bodies.
struct ExitError {
  int code;
  std::string message;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::PrecisionLoss:
      return kCap;
    case ErrorCode::BadFormat:
      return kIo;
    case ErrorCode::ChecksumMismatch:
    case ErrorCode::NoWitness:
    case ErrorCode::InconsistentCertificate:
      return kVerify;
    case ErrorCode::InvalidArgument:
    case ErrorCode::MismatchedSystems:
    case ErrorCode::RangeTooSmall:
    case ErrorCode::UnknownColor:
      return kUsage;
  }
  return kUsage;
}

struct Options {
  int threads = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;

  // color
  std::string system = "shift";
  int k = 2;
  int n = 1;
  std::string alpha = "2/1";
  std::uint64_t max_vertices = 0;
  std::uint64_t vertex_cap = kCliqueVertexCap;

  std::string graph;  // DECG input

  // opposite / sandwich
  int p = 2;
  int q = 6;
  std::uint64_t coloring_cap = kColoringCap;
  std::string c = "1/1";

  // bounds
  std::uint64_t g = 9;
  std::uint64_t bound_k = 2;

  // dimension / superpoly
  int n_min = 1;
  int n_max = 4;
  std::string mode = "exponential";
  double parameter = 1024;
  int n0 = 2;
  std::uint64_t grid_max = 1'000'000;

  // probe
  std::uint64_t budget = kDefaultProbeBudget;
  int radius = TorusSystem::kDefaultRadius;
};

struct Input {
  std::string path;
  std::uint64_t checksum = 0;
};

/// What a command hands back: the primary output bytes and the inputs it read.
struct Result {
  std::string output;
  std::vector<Input> inputs;
  ordered_json parameters = ordered_json::object();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kIo, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ExitError{kIo, "cannot read '" + path + "'"};
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ExitError{kIo, "cannot open '" + path + "' for writing"};
  out << bytes;
  out.flush();
  if (!out) throw ExitError{kIo, "cannot write '" + path + "'"};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ColoredGraph load_graph(const Options& o, Result& r) {
  if (o.graph.empty()) throw ExitError{kUsage, "a DECG input path is required"};
  const auto text = read_file(o.graph);
  r.inputs.push_back({o.graph, fnv1a64(text)});
  return parse_decg(text);
}

void require_valid(const ColoredGraph& g, int threads) {
  if (auto bad = revalidate(g, threads)) {
    throw ExitError{kVerify, "edge (" + std::to_string(bad->i) + ", " + std::to_string(bad->j) +
                                 ") fails revalidation: " + bad->reason};
  }
}

// ---------------------------------------------------------------- commands

Result cmd_color(const Options& o) {
  Result r;
  r.parameters = {{"system", o.system},     {"k", o.k},
                  {"n", o.n},               {"alpha", o.alpha},
                  {"max_vertices", o.max_vertices}, {"vertex_cap", o.vertex_cap}};
  if (o.system != "shift") {
    throw ExitError{kUsage, "color supports --system shift only (torus points have no finite encoding)"};
  }
  if (o.n < 0) throw ExitError{kUsage, "--n must be >= 0"};
  const auto system = ShiftSystem::make(o.k, parse_ratio(o.alpha));
  const int w = 2 * o.n + 1;
  const auto cells = static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(w);
  const auto total = pow_capped(static_cast<std::uint64_t>(o.k), cells, kEnumerationCap);
  const std::string size_text = std::to_string(o.k) + "^" + std::to_string(cells);

  Sampling sampling;
  const auto eps = ShiftDistance::from_exponent(o.n);
  const bool exhaustive = o.max_vertices == 0 || (total && *total <= o.max_vertices);
  if (exhaustive && (!total || *total > o.vertex_cap)) {
    throw ExitError{kCap, "S(alpha^-" + std::to_string(o.n) + ") = " + size_text +
                              (total ? " = " + std::to_string(*total) : std::string()) +
                              " vertices exceeds the vertex cap " + std::to_string(o.vertex_cap) +
                              "; pass --max-vertices"};
  }
  if (!exhaustive && o.max_vertices > o.vertex_cap) {
    throw ExitError{kCap, "--max-vertices " + std::to_string(o.max_vertices) +
                              " exceeds the vertex cap " + std::to_string(o.vertex_cap)};
  }
  const auto vertices = [&] {
    if (exhaustive) {
      PatternEnumerator universe(o.k, w);
      return greedy_separated(universe, eps);
    }
    sampling = {true, o.seed};
    const auto sample = sample_periodic_points(o.k, w, o.max_vertices, o.seed);
    return greedy_separated(sample, eps);
  }();
  // the greedy set is separated by construction
  const auto graph = color_graph(system, vertices, o.n, sampling, {o.threads, true});
  r.output = to_decg(graph);
  return r;
}

Result cmd_verify(const Options& o) {
  Result r;
  const auto graph = load_graph(o, r);
  require_valid(graph, o.threads);
  r.output = dump({{"valid", true},
                   {"vertices", graph.vertex_count()},
                   {"edges", graph.edge_count()},
                   {"colors", graph.color_count()},
                   {"threshold_exponent", graph.system.threshold},
                   {"graph_checksum", hex64(decg_checksum(graph))}});
  return r;
}

struct CliqueRun {
  ColoredGraph graph;
  CliqueReport report;
  OppositeUpperBound bound;
};

CliqueRun run_cliques(const Options& o, Result& r) {
  CliqueRun run;
  run.graph = load_graph(o, r);
  require_valid(run.graph, o.threads);
  run.report = mono_clique_report(run.graph, o.threads);
  run.bound = opposite_upper_bound(run.report, run.graph, o.threads);
  if (run.bound.certificate && !run.bound.certificate->verified) {
    throw ExitError{kVerify, "clique certificate failed re-verification"};
  }
  return run;
}

Result cmd_cliques(const Options& o) {
  Result r;
  const auto run = run_cliques(o, r);
  r.output = dump(to_json(run.report, run.bound));
  return r;
}

Result cmd_sandwich(const Options& o) {
  Result r;
  const auto c = parse_ratio(o.c);
  r.parameters["c"] = o.c;
  if (!o.graph.empty()) {
    const auto run = run_cliques(o, r);
    if (!run.bound.certificate) {
      throw ExitError{kVerify, "graph has fewer than 2 vertices; no certificate to compare"};
    }
    r.output = dump(to_json(sandwich_report(*run.bound.certificate, run.graph, c)));
  } else {
    r.parameters["p"] = o.p;
    r.parameters["q"] = o.q;
    r.output = dump(to_json(sandwich_report(opposite_ramsey_exact(o.p, o.q, o.coloring_cap, o.threads), c)));
  }
  return r;
}

Result cmd_opposite(const Options& o) {
  Result r;
  r.parameters = {{"p", o.p}, {"q", o.q}, {"cap", o.coloring_cap}};
  r.output = dump(to_json(opposite_ramsey_exact(o.p, o.q, o.coloring_cap, o.threads)));
  return r;
}

Result cmd_bounds(const Options& o) {
  Result r;
  r.parameters = {{"g", o.g}, {"k", o.bound_k}, {"c", o.c}};
  r.output = dump(to_json(bounds_record(o.g, o.bound_k, parse_ratio(o.c))));
  return r;
}

Result cmd_dimension(const Options& o) {
  Result r;
  r.parameters = {{"k", o.k}, {"n_min", o.n_min}, {"n_max", o.n_max}, {"alpha", o.alpha}};
  r.output = growth_csv(shift_growth_sequence(o.k, o.n_min, o.n_max), parse_ratio(o.alpha));
  return r;
}

Result cmd_superpoly(const Options& o) {
  Result r;
  r.parameters = {{"k", o.k},         {"n_max", o.n_max},         {"mode", o.mode},
                  {"parameter", o.parameter}, {"n0", o.n0}, {"grid_max", o.grid_max}};
  GrowthMode mode;
  if (o.mode == "exponential") {
    mode = GrowthMode::ExponentialRatio;
  } else if (o.mode == "log") {
    mode = GrowthMode::LogComposition;
  } else {
    throw ExitError{kUsage, "--mode must be 'exponential' or 'log'"};
  }
  const auto q = shift_growth_sequence(o.k, 1, o.n_max);
  r.output = dump(to_json(superpoly_check(q, mode, o.parameter, o.n0, o.grid_max)));
  return r;
}

Result cmd_probe(const Options& o) {
  Result r;
  r.parameters = {{"system", o.system}, {"n", o.n}, {"budget", o.budget}};
  if (o.system == "shift") {
    r.parameters["k"] = o.k;
    r.parameters["alpha"] = o.alpha;
    const auto system = ShiftSystem::make(o.k, parse_ratio(o.alpha));
    if (auto found = probe_question(system, o.n, o.budget)) {
      r.output = dump(to_json(*found, system, o.n));
    } else {
      r.output = dump({{"system", "shift"},
                       {"alphabet", system.alphabet},
                       {"alpha", system.alpha.to_string()},
                       {"n", o.n},
                       {"found", false}});
    }
  } else if (o.system == "torus") {
    r.parameters["radius"] = o.radius;
    const Matrix2 cat{2, 1, 1, 1};
    const TorusSystem system(cat, multiply(cat, cat), parse_ratio(o.alpha).to_double(), o.radius);
    r.output = dump(to_json(probe_question(system, o.n, o.budget, o.seed), system, o.n));
  } else {
    throw ExitError{kUsage, "--system must be 'shift' or 'torus'"};
  }
  return r;
}

// ---------------------------------------------------------------- driver

struct Outcome {
  int code = kOk;
  std::string output;
  ordered_json manifest;
};

Outcome run(const std::vector<std::string>& args, bool emit);

Result cmd_replay(const Options& o) {
  Result r;
  const auto text = read_file(o.graph);
  r.inputs.push_back({o.graph, fnv1a64(text)});
  ordered_json m;
  try {
    m = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ExitError{kIo, "manifest is not JSON: " + std::string(e.what())};
  }
  if (!m.contains("argv") || !m["argv"].is_array() || !m.contains("output")) {
    throw ExitError{kIo, "manifest lacks 'argv' or 'output'"};
  }
  auto argv = m["argv"].get<std::vector<std::string>>();
  if (!argv.empty() && argv[0] == "replay") throw ExitError{kUsage, "cannot replay a replay"};
  const auto again = run(argv, false);
  if (again.code != kOk) throw ExitError{again.code, "replayed command failed"};
  const auto expected = m["output"]["fnv1a64"].get<std::string>();
  const auto got = hex64(fnv1a64(again.output));
  if (got != expected) {
    throw ExitError{kVerify, "replayed output hashes to " + got + ", manifest says " + expected};
  }
  r.output = dump({{"replayed", m.value("subcommand", "")}, {"fnv1a64", got}, {"identical", true}});
  return r;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--seed", o.seed, "seed for all sampling (default 0)");
  sub->add_option("--out", o.out, "output path (default stdout)");
  sub->add_option("--manifest", o.manifest, "manifest path (default stderr)");
}

Outcome run(const std::vector<std::string>& args, bool emit) {
  Options o;
  CLI::App app{"dynramsey: expansive actions, separated sets and opposite-Ramsey bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* color = app.add_subcommand("color", "build V_n and write its witness-colored complete graph");
  color->add_option("--system", o.system, "shift");
  color->add_option("--k", o.k, "alphabet size");
  color->add_option("--n", o.n, "scale n; colors are C_n");
  color->add_option("--alpha", o.alpha, "metric base p/q");
  color->add_option("--max-vertices", o.max_vertices, "sample this many periodic points");
  color->add_option("--vertex-cap", o.vertex_cap, "largest graph to build");
  add_common(color, o);

  auto* verify = app.add_subcommand("verify", "revalidate every edge witness of a DECG file");
  verify->add_option("graph", o.graph, "DECG file")->required();
  add_common(verify, o);

  auto* cliques = app.add_subcommand("cliques", "monochromatic clique report and certificate");
  cliques->add_option("graph", o.graph, "DECG file")->required();
  add_common(cliques, o);

  auto* sandwich = app.add_subcommand("sandwich", "classical Ramsey statements implied by a coloring");
  sandwich->add_option("graph", o.graph, "DECG file (omit to use an exact --p/--q value)");
  sandwich->add_option("--p", o.p, "colors (exact mode)");
  sandwich->add_option("--q", o.q, "order (exact mode)");
  sandwich->add_option("--c", o.c, "illustrative lower-bound constant p/q");
  sandwich->add_option("--cap", o.coloring_cap, "coloring enumeration cap (exact mode)");
  add_common(sandwich, o);

  auto* opposite = app.add_subcommand("opposite", "exact opposite-Ramsey number r(p, q)");
  opposite->add_option("--p", o.p, "colors")->required();
  opposite->add_option("--q", o.q, "order")->required();
  opposite->add_option("--cap", o.coloring_cap, "coloring enumeration cap");
  add_common(opposite, o);

  auto* bounds = app.add_subcommand("bounds", "classical upper and lower bound formulas");
  bounds->add_option("--g", o.g, "colors")->required();
  bounds->add_option("--k", o.bound_k, "clique order")->required();
  bounds->add_option("--c", o.c, "illustrative lower-bound constant p/q");
  add_common(bounds, o);

  auto* dimension = app.add_subcommand("dimension", "separated counts and dimension terms (CSV)");
  dimension->add_option("--k", o.k, "alphabet size");
  dimension->add_option("--n-min", o.n_min, "first n");
  dimension->add_option("--n-max", o.n_max, "last n")->required();
  dimension->add_option("--alpha", o.alpha, "metric base p/q");
  add_common(dimension, o);

  auto* superpoly = app.add_subcommand("superpoly", "super-polynomial growth check of S(alpha^-n)");
  superpoly->add_option("--k", o.k, "alphabet size");
  superpoly->add_option("--n-max", o.n_max, "last n of the sequence");
  superpoly->add_option("--mode", o.mode, "exponential | log");
  superpoly->add_option("--param", o.parameter, "A (exponential) or degree d (log)");
  superpoly->add_option("--n0", o.n0, "first n to evaluate");
  superpoly->add_option("--grid-max", o.grid_max, "last grid point (log mode)");
  add_common(superpoly, o);

  auto* probe = app.add_subcommand("probe", "search for a counterexample to the recovery question");
  probe->add_option("--system", o.system, "shift | torus");
  probe->add_option("--n", o.n, "scale n")->required();
  probe->add_option("--k", o.k, "alphabet size (shift)");
  probe->add_option("--alpha", o.alpha, "metric base p/q");
  probe->add_option("--budget", o.budget, "distance evaluations allowed");
  probe->add_option("--radius", o.radius, "metric truncation radius (torus)");
  add_common(probe, o);

  auto* replay = app.add_subcommand("replay", "rerun a manifest and compare its output checksum");
  replay->add_option("manifest_in", o.graph, "manifest JSON")->required();
  add_common(replay, o);

  Outcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    outcome.code = app.exit(e);
    return outcome;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    outcome.code = kUsage;
    return outcome;
  }

  const auto started = std::chrono::steady_clock::now();
  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Result result;
  try {
    if (name == "color") result = cmd_color(o);
    else if (name == "verify") result = cmd_verify(o);
    else if (name == "cliques") result = cmd_cliques(o);
    else if (name == "sandwich") result = cmd_sandwich(o);
    else if (name == "opposite") result = cmd_opposite(o);
    else if (name == "bounds") result = cmd_bounds(o);
    else if (name == "dimension") result = cmd_dimension(o);
    else if (name == "superpoly") result = cmd_superpoly(o);
    else if (name == "probe") result = cmd_probe(o);
    else result = cmd_replay(o);
    if (emit) {
      if (o.out.empty()) {
        std::fwrite(result.output.data(), 1, result.output.size(), stdout);
        std::fflush(stdout);
      } else {
        write_file(o.out, result.output);
      }
    }
  } catch (const ExitError& e) {
    std::fprintf(stderr, "dynramsey %s: %s\n", name.c_str(), e.message.c_str());
    outcome.code = e.code;
    return outcome;
  } catch (const Error& e) {
    std::fprintf(stderr, "dynramsey %s: %s\n", name.c_str(), e.what());
    outcome.code = exit_code_for(e.code());
    return outcome;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dynramsey %s: %s\n", name.c_str(), e.what());
    outcome.code = kIo;
    return outcome;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  ordered_json inputs = ordered_json::array();
  for (const auto& in : result.inputs) {
    inputs.push_back({{"path", in.path}, {"fnv1a64", hex64(in.checksum)}});
  }
  auto& m = outcome.manifest;
  m["subcommand"] = name;
  m["argv"] = args;
  m["parameters"] = result.parameters;
  m["parameters"]["threads"] = o.threads;
  m["seed"] = o.seed;
  m["version"] = kVersion;
  m["inputs"] = std::move(inputs);
  m["output"] = {{"path", o.out.empty() ? "-" : o.out},
                 {"bytes", result.output.size()},
                 {"fnv1a64", hex64(fnv1a64(result.output))}};
  m["wall_seconds"] = wall;
  outcome.output = std::move(result.output);
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = run(args, true);
  if (outcome.code != kOk || outcome.manifest.is_null()) return outcome.code;

  std::string manifest_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--manifest") manifest_path = args[i + 1];
    else if (args[i].rfind("--manifest=", 0) == 0) manifest_path = args[i].substr(11);
  }
  if (!args.empty() && args.back().rfind("--manifest=", 0) == 0) manifest_path = args.back().substr(11);
  const auto text = dump(outcome.manifest);
  if (manifest_path.empty()) {
    std::fputs(text.c_str(), stderr);
  } else {
    try {
      write_file(manifest_path, text);
    } catch (const ExitError& e) {
      std::fprintf(stderr, "dynramsey: %s\n", e.message.c_str());
      return e.code;
    }
  }
  return kOk;
}
