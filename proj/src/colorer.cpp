#include "dynramsey/colorer.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dynramsey/error.hpp"
#include "dynramsey/metric.hpp"
#include "dynramsey/parallel.hpp"

namespace dynramsey {

ColorSet build_color_set(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "color set radius must be >= 0");
  ColorSet set;
  set.n = n;
  set.vectors.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
  for (int x = -n; x <= n; ++x) {
    for (int y = -n; y <= n; ++y) set.vectors.push_back({x, y});
  }
  return set;
}

ColoredGraph color_graph(const ShiftSystem& system, const ShiftSeparatedSet& vertices, int n,
                         Sampling sampling, ColorOptions options) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const auto& points = vertices.points;
  for (const auto& p : points) {
    if (p.alphabet() != system.alphabet || p.period() != points.front().period()) {
      throw Error(ErrorCode::MismatchedSystems, "vertices must share period and alphabet");
    }
  }
  if (!options.precertified) {
    const auto check = separation_check(points, ShiftDistance::from_exponent(n));
    if (!check.separated) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertices " + std::to_string(check.violation->first) + " and " +
                      std::to_string(check.violation->second) + " are closer than alpha^-" +
                      std::to_string(n));
    }
  }

  ColoredGraph graph;
  graph.system = system;
  graph.n = n;
  graph.sampling = sampling;
  graph.vertices = points;
  const std::size_t q = points.size();
  graph.edges.resize(q < 2 ? 0 : q * (q - 1) / 2);
  const auto colors = build_color_set(n);

  parallel_for(q, options.threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      ShiftWitness w;
      try {
        w = find_witness(system, points[i], points[j], n);
      } catch (const NoWitnessError& e) {
        throw NoWitnessError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                 "): " + e.what(),
                             e.best_vector, e.best_value, e.best_shift);
      }
      graph.edges[ColoredGraph::edge_index(i, j, q)] = {colors.index_of(w.vector),
                                                        w.achieved.exponent()};
    }
  });
  return graph;
}

std::optional<EdgeViolation> revalidate(const ColoredGraph& graph, int threads) {
  const std::size_t q = graph.vertex_count();
  const auto colors = build_color_set(graph.n);
  std::vector<std::optional<EdgeViolation>> first(q);
  parallel_for(q, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      const auto& e = graph.edges[ColoredGraph::edge_index(i, j, q)];
      if (e.color >= colors.size()) {
        first[i] = EdgeViolation{i, j, "color index " + std::to_string(e.color) + " outside C_n"};
        return;
      }
      const auto v = colors.vectors[e.color];
      const auto d = shift_min_diff(apply(graph.vertices[i], v), apply(graph.vertices[j], v));
      if (!graph.system.separates(d)) {
        first[i] = EdgeViolation{i, j, "color (" + std::to_string(v.x) + "," +
                                           std::to_string(v.y) +
                                           ") does not reach 1/(4 alpha)"};
        return;
      }
      if (d.exponent() != e.achieved) {
        first[i] = EdgeViolation{i, j, "recorded exponent " + std::to_string(e.achieved) +
                                           " but recomputed " + std::to_string(d.exponent())};
        return;
      }
    }
  });
  for (auto& f : first) {
    if (f) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- DECG

namespace {

std::string header_sampling(const Sampling& s) {
  return s.subsampled ? "subsampled seed=" + std::to_string(s.seed) : "full";
}

/// Emits lines while folding them into the checksum.
class LineSink {
 public:
  explicit LineSink(std::string& out) : out_(out) {}
  void line(const std::string& text) {
    const auto start = out_.size();
    out_ += text;
    out_ += '\n';
    hash_ = fnv1a64(std::string_view(out_).substr(start), hash_);
  }
  std::uint64_t hash() const noexcept { return hash_; }

 private:
  std::string& out_;
  std::uint64_t hash_ = fnv1a64("");
};

std::string body(const ColoredGraph& g, std::uint64_t* checksum) {
  std::string out;
  const std::size_t q = g.vertex_count();
  out.reserve(64 + q * 40 + g.edges.size() * 24);
  LineSink sink(out);
  const auto colors = build_color_set(g.n);
  sink.line("decg 1");
  sink.line("system shift k=" + std::to_string(g.system.alphabet) +
            " alpha=" + g.system.alpha.to_string());
  sink.line("n " + std::to_string(g.n));
  sink.line("vertices " + std::to_string(q) + "  colors " + std::to_string(colors.size()) +
            "  sampled " + header_sampling(g.sampling));
  for (std::size_t i = 0; i < q; ++i) {
    sink.line("v " + std::to_string(i) + " " + g.vertices[i].encode());
  }
  std::string line;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      const auto& e = g.edges[ColoredGraph::edge_index(i, j, q)];
      const auto v = colors.vectors.at(e.color);
      line = "e ";
      line += std::to_string(i);
      line += ' ';
      line += std::to_string(j);
      line += ' ';
      line += std::to_string(e.color);
      line += ' ';
      line += std::to_string(v.x);
      line += ' ';
      line += std::to_string(v.y);
      line += ' ';
      line += std::to_string(e.achieved);
      sink.line(line);
    }
  }
  *checksum = sink.hash();
  return out;
}

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  /// Next line with its checksum contribution; BadFormat at EOF.
  std::string next(const char* expecting) {
    std::string text;
    if (!std::getline(in_, text)) {
      throw Error(ErrorCode::BadFormat, "line " + std::to_string(line_no_ + 1) +
                                            ": unexpected end of input, expected " + expecting);
    }
    ++line_no_;
    if (in_.eof()) {
      throw Error(ErrorCode::BadFormat,
                  "line " + std::to_string(line_no_) + ": missing newline (truncated input)");
    }
    last_hash_ = hash_;
    hash_ = fnv1a64(text + "\n", hash_);
    return text;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::BadFormat, "line " + std::to_string(line_no_) + ": " + what);
  }

  std::uint64_t hash_before_last() const noexcept { return last_hash_; }
  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::uint64_t hash_ = fnv1a64("");
  std::uint64_t last_hash_ = hash_;
};

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    const auto start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int number(const Parser& p, std::string_view token, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    p.fail(std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view after_prefix(const Parser& p, std::string_view token, std::string_view prefix) {
  if (token.substr(0, prefix.size()) != prefix) {
    p.fail("expected '" + std::string(prefix) + "...', got '" + std::string(token) + "'");
  }
  return token.substr(prefix.size());
}

}  // namespace

std::uint64_t decg_checksum(const ColoredGraph& graph) {
  std::uint64_t checksum = 0;
  body(graph, &checksum);
  return checksum;
}

std::string to_decg(const ColoredGraph& graph) {
  std::uint64_t checksum = 0;
  std::string out = body(graph, &checksum);
  out += "end " + hex64(checksum) + "\n";
  return out;
}

void write_decg(const ColoredGraph& graph, std::ostream& out) { out << to_decg(graph); }

ColoredGraph parse_decg(const std::string& text) {
  std::istringstream in(text);
  return read_decg(in);
}

ColoredGraph read_decg(std::istream& in) {
  Parser p(in);
  ColoredGraph g;

  if (p.next("header") != "decg 1") p.fail("expected 'decg 1'");

  {
    const auto line = p.next("system line");
    const auto tok = split(line);
    if (tok.size() < 2 || tok[0] != "system") p.fail("expected 'system ...'");
    if (tok[1] != "shift") p.fail("unsupported system '" + std::string(tok[1]) + "'");
    if (tok.size() != 4) p.fail("expected 'system shift k=<k> alpha=<p>/<q>'");
    const int k = number<int>(p, after_prefix(p, tok[2], "k="), "alphabet size");
    try {
      g.system = ShiftSystem::make(k, parse_ratio(after_prefix(p, tok[3], "alpha=")));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadFormat) throw;
      p.fail(e.what());
    }
  }
  {
    const auto line = p.next("n line");
    const auto tok = split(line);
    if (tok.size() != 2 || tok[0] != "n") p.fail("expected 'n <n>'");
    g.n = number<int>(p, tok[1], "n");
    if (g.n < 0) p.fail("n must be >= 0");
  }
  std::size_t q = 0;
  {
    const auto line = p.next("vertices line");
    const auto tok = split(line);
    if (tok.size() < 6 || tok[0] != "vertices" || tok[2] != "colors" || tok[4] != "sampled") {
      p.fail("expected 'vertices <q>  colors <c>  sampled <...>'");
    }
    q = number<std::size_t>(p, tok[1], "vertex count");
    const auto c = number<std::size_t>(p, tok[3], "color count");
    if (c != g.color_count()) {
      p.fail("color count " + std::to_string(c) + " != (2n+1)^2 = " +
             std::to_string(g.color_count()));
    }
    if (tok[5] == "full" && tok.size() == 6) {
      g.sampling = {};
    } else if (tok[5] == "subsampled" && tok.size() == 7) {
      g.sampling = {true, number<std::uint64_t>(p, after_prefix(p, tok[6], "seed="), "seed")};
    } else {
      p.fail("bad sampling tag");
    }
  }

  g.vertices.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    const auto line = p.next("vertex line");
    const auto tok = split(line);
    if (tok.size() != 3 || tok[0] != "v") p.fail("expected 'v <index> <pattern>'");
    if (number<std::size_t>(p, tok[1], "vertex index") != i) p.fail("vertex out of order");
    try {
      g.vertices.push_back(Pattern::decode(tok[2]));
    } catch (const Error& e) {
      p.fail(e.what());
    }
    const auto& v = g.vertices.back();
    if (v.alphabet() != g.system.alphabet || v.period() != g.vertices.front().period()) {
      p.fail("vertex pattern does not match the system");
    }
  }

  const auto colors = build_color_set(g.n);
  const std::uint64_t expected_edges = q < 2 ? 0 : static_cast<std::uint64_t>(q) * (q - 1) / 2;
  g.edges.resize(expected_edges);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      const auto line = p.next("edge line");
      const auto tok = split(line);
      if (tok.size() != 7 || tok[0] != "e") p.fail("expected 'e <i> <j> <c> <vx> <vy> <m>'");
      if (number<std::size_t>(p, tok[1], "edge endpoint") != i ||
          number<std::size_t>(p, tok[2], "edge endpoint") != j) {
        p.fail("edge out of order, expected (" + std::to_string(i) + ", " + std::to_string(j) +
               ")");
      }
      const auto c = number<std::uint32_t>(p, tok[3], "color index");
      if (c >= colors.size()) p.fail("color index outside C_n");
      const LatticeVector v{number<int>(p, tok[4], "vx"), number<int>(p, tok[5], "vy")};
      if (!(colors.vectors[c] == v)) p.fail("color vector does not match its index");
      g.edges[ColoredGraph::edge_index(i, j, q)] = {c, number<std::int32_t>(p, tok[6], "exponent")};
    }
  }

  const auto end_line = p.next("end line");
  const auto tok = split(end_line);
  if (tok.size() != 2 || tok[0] != "end") {
    p.fail(tok.size() >= 1 && tok[0] == "e" ? "more edges than vertices(vertices-1)/2"
                                            : "expected 'end <checksum>'");
  }
  if (!p.at_end()) p.fail("trailing content after end line");
  const auto expected = hex64(p.hash_before_last());
  if (tok[1] != expected) {
    throw Error(ErrorCode::ChecksumMismatch,
                "file says " + std::string(tok[1]) + ", content hashes to " + expected);
  }
  return g;
}

}  // namespace dynramsey
