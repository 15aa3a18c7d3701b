#include "perm4/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "perm4/generators.hpp"
#include "perm4/profile.hpp"
#include "perm4/reductions.hpp"
#include "perm4/shape_counting.hpp"
#include "perm4/small_patterns.hpp"

namespace perm4 {
namespace {

Count pattern_counter(const PointSet& ps, const PlaneDivision& div) {
  static const Pattern k1324 = Pattern::from_digits("1324");
  return count_4partite(ps, div, k1324);
}

Count nonnegative(SignedCount c) {
  if (c < 0) throw std::logic_error("negative 4-cycle count");
  return static_cast<Count>(c);
}

Count layered_via_undirected(const LayeredMultigraph& g) {
  return layered_count_from_undirected(layered_to_undirected(g), count_c4_undirected);
}

Count layered_via_patterns(const LayeredMultigraph& g) { return nonnegative(count_c4_via_patterns(g, pattern_counter)); }

Count directed_from_layered(const LayeredReduction& r, Count layered) {
  if (layered < r.correction || (layered - r.correction) % 4 != 0) {
    throw std::logic_error("layered count inconsistent with its correction");
  }
  return (layered - r.correction) / 4;
}

}  // namespace

Count count_c4(const LayeredMultigraph& g, C4Route route) {
  switch (route) {
    case C4Route::kBrute: return brute_count_c4(g);
    case C4Route::kCodegree: return count_c4_layered(g);
    case C4Route::kViaPattern: return count_c4_by_splitting(g, layered_via_patterns);
    case C4Route::kViaReductions: return count_c4_by_splitting(g, layered_via_undirected);
  }
  throw std::invalid_argument("unknown route");
}

Count count_c4(const DirectedGraph& g, C4Route route) {
  if (route == C4Route::kBrute) return brute_count_c4(g);
  const auto r = directed_to_layered(g);
  return directed_from_layered(r, count_c4(r.graph, route));
}

Count count_c4(const UndirectedGraph& g, C4Route route) {
  switch (route) {
    case C4Route::kBrute: return brute_count_c4(g);
    case C4Route::kCodegree: return count_c4_undirected(g);
    case C4Route::kViaReductions: return count_c4_via_reductions(g);
    case C4Route::kViaPattern: {
      const Count directed = count_c4(undirected_to_directed(g), route);
      if (directed % 2 != 0) throw std::logic_error("odd directed 4-cycle count");
      return directed / 2;
    }
  }
  throw std::invalid_argument("unknown route");
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::size_t used = 0;
  try {
    const long long v = std::stoll(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ParseError malformed(std::size_t line, const std::string& what) {
  return ParseError(ParseError::Kind::kMalformed, line, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Permutation read_permutation(std::istream& in) {
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    for (auto& w : split_words(line)) tokens.push_back({w, line_no});
  }
  const auto n = static_cast<std::int64_t>(tokens.size());
  std::vector<std::int32_t> values;
  std::vector<bool> seen(tokens.size() + 1, false);
  for (const auto& t : tokens) {
    const auto v = parse_int(t.text);
    if (!v) {
      throw ParseError(ParseError::Kind::kNotAnInteger, t.line,
                       "line " + std::to_string(t.line) + ": '" + t.text + "' is not an integer");
    }
    if (*v < 1 || *v > n || seen[*v]) {
      throw ParseError(ParseError::Kind::kNotABijection, t.line,
                       "line " + std::to_string(t.line) + ": value " + t.text + " breaks the bijection on 1.." +
                           std::to_string(n));
    }
    seen[*v] = true;
    values.push_back(static_cast<std::int32_t>(*v));
  }
  return Permutation(std::move(values));
}

GraphFile read_graph(std::istream& in, bool directed) {
  GraphFile out;
  bool header = false;
  std::array<NodeId, 4> sizes{};
  std::vector<LayeredMultigraph::Edge> layered_edges;
  std::set<std::tuple<int, NodeId, NodeId>> seen;
  std::size_t line_no = 0;
  auto node = [&](const std::string& w, NodeId limit) {
    const auto v = parse_int(w);
    if (!v || *v < 0 || *v >= static_cast<std::int64_t>(limit)) throw malformed(line_no, "bad node id '" + w + "'");
    return static_cast<NodeId>(*v);
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (!header) {
      if (words[0] == "nodes" && words.size() == 2) {
        const auto n = parse_int(words[1]);
        if (!n || *n < 0 || *n > 0xffffffffll) throw malformed(line_no, "bad node count");
        out.nodes = static_cast<NodeId>(*n);
      } else if (words[0] == "layers" && words.size() == 5) {
        out.layered = true;
        for (int i = 0; i < 4; ++i) {
          const auto n = parse_int(words[i + 1]);
          if (!n || *n < 0 || *n > 0xffffffffll) throw malformed(line_no, "bad layer size");
          sizes[i] = static_cast<NodeId>(*n);
        }
      } else {
        throw malformed(line_no, "expected 'nodes N' or 'layers a b c d'");
      }
      header = true;
      continue;
    }
    if (out.layered) {
      if (words.size() != 3 && words.size() != 4) throw malformed(line_no, "expected 'i u v [mult]'");
      const auto layer = parse_int(words[0]);
      if (!layer || *layer < 0 || *layer > 3) throw malformed(line_no, "layer must be 0..3");
      const int i = static_cast<int>(*layer);
      const NodeId u = node(words[1], sizes[i]);
      const NodeId v = node(words[2], sizes[(i + 1) % 4]);
      std::uint64_t mult = 1;
      if (words.size() == 4) {
        const auto m = parse_int(words[3]);
        if (!m || *m < 1) throw malformed(line_no, "multiplicity must be a positive integer");
        mult = static_cast<std::uint64_t>(*m);
      }
      if (!seen.insert({i, u, v}).second) throw malformed(line_no, "repeated edge");
      layered_edges.push_back({i, u, v, mult});
    } else {
      if (words.size() != 2) throw malformed(line_no, "expected 'u v'");
      const NodeId u = node(words[0], out.nodes);
      const NodeId v = node(words[1], out.nodes);
      if (u == v) throw malformed(line_no, "self-loop");
      const auto key = directed ? std::make_tuple(0, u, v) : std::make_tuple(0, std::min(u, v), std::max(u, v));
      if (!seen.insert(key).second) throw malformed(line_no, "repeated edge");
      out.edges.emplace_back(u, v);
    }
  }
  if (!header) throw malformed(line_no, "missing header");
  if (out.layered) out.graph = LayeredMultigraph(sizes, std::move(layered_edges));
  return out;
}

void write_graph(std::ostream& out, const UndirectedGraph& g) {
  out << "nodes " << g.node_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const DirectedGraph& g) {
  out << "nodes " << g.node_count() << '\n';
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const LayeredMultigraph& g) {
  const auto& s = g.layer_sizes();
  out << "layers " << s[0] << ' ' << s[1] << ' ' << s[2] << ' ' << s[3] << '\n';
  for (const auto& e : g.edges()) out << e.layer << ' ' << e.from << ' ' << e.to << ' ' << e.mult << '\n';
}

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Reporter {
 public:
  Reporter(std::ostream& out, bool records) : out_(out), records_(records) {}

  void value(const std::string& key, const std::string& v) {
    if (records_) {
      out_ << key << ": " << v << '\n';
    } else {
      out_ << key << " = " << v << '\n';
    }
  }
  void count(const std::string& key, Count c) { value(key, to_string(c)); }
  void pattern(const std::string& digits, Count c) { count(records_ ? digits : "#" + digits, c); }
  void note(const std::string& line) {
    if (!records_) out_ << line << '\n';
  }

 private:
  std::ostream& out_;
  bool records_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Permutation load_permutation(const std::string& path) {
  auto in = open_input(path);
  return read_permutation(in);
}

GraphFile load_graph(const std::string& path, bool directed) {
  auto in = open_input(path);
  return read_graph(in, directed);
}

Pattern parse_pattern_flag(const std::string& digits, int min_len, int max_len) {
  Pattern p;
  try {
    p = Pattern::from_digits(digits);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--pattern", e.what());
  }
  if (p.size() < min_len || p.size() > max_len) {
    throw CLI::ValidationError("--pattern", "pattern length must be " + std::to_string(min_len) + ".." +
                                                std::to_string(max_len));
  }
  return p;
}

Probability parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  const auto num = parse_int(text.substr(0, slash));
  const auto den = slash == std::string::npos ? std::optional<std::int64_t>(1) : parse_int(text.substr(slash + 1));
  if (!num || !den || *den <= 0 || *num < 0 || *num > *den) throw CLI::ValidationError("--p", "expected a/b in [0, 1]");
  return {static_cast<std::uint64_t>(*num), static_cast<std::uint64_t>(*den)};
}

std::string pattern_key(int index) { return Pattern::from_index4(index).digits(); }

void report_profile(Reporter& r, const Permutation& perm, const Profile4& profile) {
  r.count("n", perm.size());
  for (int i = 0; i < 24; ++i) r.pattern(pattern_key(i), profile.counts[i]);
  r.count("sum", profile.total());
  r.count("binomial", binomial(perm.size(), 4));
  r.note(profile.total() == binomial(perm.size(), 4) ? "sum check: ok" : "sum check: MISMATCH");
}

// Greedy deletion: drop parts while `fails` still holds.
template <typename T, typename Remove>
T shrink(T item, std::size_t parts(const T&), Remove remove, const std::function<bool(const T&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < parts(item); ++i) {
      T smaller = remove(item, i);
      if (fails(smaller)) {
        item = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return item;
}

std::size_t perm_parts(const Permutation& p) { return p.size(); }

Permutation drop_position(const Permutation& p, std::size_t i) {
  std::vector<std::int32_t> v;
  const std::int32_t removed = p.values()[i];
  for (std::size_t k = 0; k < p.size(); ++k)
    if (k != i) v.push_back(p.values()[k] - (p.values()[k] > removed ? 1 : 0));
  return Permutation(std::move(v));
}

std::size_t instance_parts(const DividedInstance& inst) { return inst.size(); }

DividedInstance drop_point(const DividedInstance& inst, std::size_t i) {
  DividedInstance out;
  const std::uint32_t removed = inst.y[i];
  for (std::size_t k = 0; k < inst.size(); ++k)
    if (k != i) out.y.push_back(inst.y[k] - (inst.y[k] > removed ? 1 : 0));
  out.cx = inst.cx - (i < inst.cx ? 1 : 0);
  out.cy = inst.cy - (removed < inst.cy ? 1 : 0);
  return out;
}

std::size_t graph_parts(const UndirectedGraph& g) { return g.edges().size(); }

UndirectedGraph drop_edge(const UndirectedGraph& g, std::size_t i) {
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  return UndirectedGraph(g.node_count(), std::move(edges));
}

std::size_t layered_parts(const LayeredMultigraph& g) { return g.edges().size(); }

LayeredMultigraph drop_layered_edge(const LayeredMultigraph& g, std::size_t i) {
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  return LayeredMultigraph(g.layer_sizes(), std::move(edges));
}

std::string perm_text(const Permutation& p) {
  std::string s;
  for (auto v : p.values()) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string instance_text(const DividedInstance& inst) {
  std::string s = "cx " + std::to_string(inst.cx) + " cy " + std::to_string(inst.cy) + " y";
  for (auto v : inst.y) s += " " + std::to_string(v);
  return s;
}

struct VerifyOptions {
  std::string mode;
  std::uint64_t n = 6;
  bool exhaustive = false;
  std::uint64_t seeds = 20;
  std::uint64_t seed = 1;
};

// Returns a failure description, empty on success.
std::string profile_mismatch(const Permutation& perm) {
  const auto oracle = brute_profile4(perm);
  Profile4 got;
  try {
    got = full_profile4(perm);
  } catch (const std::logic_error& e) {
    return e.what();
  }
  for (int i = 0; i < 24; ++i)
    if (got.counts[i] != oracle[i]) {
      return "#" + pattern_key(i) + " got " + to_string(got.counts[i]) + " expected " + to_string(oracle[i]);
    }
  return {};
}

std::string shapes_mismatch(const DividedInstance& inst) {
  const auto oracle = brute_shape_counts(inst);
  const auto shapes = all_shapes();
  PatternCounts easy_total{};
  for (const auto& shape : easy_shapes()) {
    const auto k = static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), shape) - shapes.begin());
    const auto got = count_shape(inst, shape);
    for (int i = 0; i < 24; ++i) {
      easy_total[i] += oracle[k][i];
      if (got[i] != oracle[k][i]) {
        return "shape " + shape.to_string() + " #" + pattern_key(i) + " got " + to_string(got[i]) + " expected " +
               to_string(oracle[k][i]);
      }
    }
  }
  const auto all = count_easy_shapes(inst);
  for (int i = 0; i < 24; ++i)
    if (all[i] != easy_total[i]) return "easy-shape total #" + pattern_key(i) + " differs";
  return {};
}

std::string route_name(C4Route route) {
  switch (route) {
    case C4Route::kBrute: return "brute";
    case C4Route::kCodegree: return "codegree";
    case C4Route::kViaPattern: return "via-pattern";
    case C4Route::kViaReductions: return "via-reductions";
  }
  return "?";
}

std::string graph_mismatch(const UndirectedGraph& g, const std::vector<C4Route>& routes) {
  const Count want = brute_count_c4(g);
  for (auto route : routes) {
    const Count got = count_c4(g, route);
    if (got != want) return route_name(route) + " got " + to_string(got) + " expected " + to_string(want);
  }
  return {};
}

std::string layered_mismatch(const LayeredMultigraph& g, const std::vector<C4Route>& routes) {
  const Count want = brute_count_c4(g);
  for (auto route : routes) {
    const Count got = count_c4(g, route);
    if (got != want) return route_name(route) + " got " + to_string(got) + " expected " + to_string(want);
  }
  return {};
}

int verify(const VerifyOptions& o, std::ostream& out) {
  std::uint64_t checked = 0;
  auto fail = [&](const std::string& what, const std::string& minimal) {
    out << "FAIL " << o.mode << ": " << what << '\n' << "minimal failing instance: " << minimal << '\n';
    return kExitVerifyFailed;
  };

  if (o.mode == "profile") {
    std::function<bool(const Permutation&)> fails = [](const Permutation& p) { return !profile_mismatch(p).empty(); };
    auto check = [&](const Permutation& p) -> std::optional<int> {
      ++checked;
      const auto why = profile_mismatch(p);
      if (why.empty()) return std::nullopt;
      const auto small = shrink<Permutation>(p, perm_parts, drop_position, fails);
      return fail(why + " on " + perm_text(p), perm_text(small));
    };
    if (o.exhaustive) {
      std::vector<std::int32_t> v(o.n);
      std::iota(v.begin(), v.end(), 1);
      do {
        if (auto r = check(Permutation(v))) return *r;
      } while (std::next_permutation(v.begin(), v.end()));
    } else {
      for (std::uint64_t k = 0; k < o.seeds; ++k)
        if (auto r = check(random_permutation(o.n, o.seed + k))) return *r;
    }
    out << "PASS profile n=" << o.n << ": " << checked << " permutations\n";
    return kExitOk;
  }

  if (o.mode == "shapes") {
    std::function<bool(const DividedInstance&)> fails = [](const DividedInstance& i) {
      return !shapes_mismatch(i).empty();
    };
    auto check = [&](const DividedInstance& inst) -> std::optional<int> {
      ++checked;
      const auto why = shapes_mismatch(inst);
      if (why.empty()) return std::nullopt;
      const auto small = shrink<DividedInstance>(inst, instance_parts, drop_point, fails);
      return fail(why + " on " + instance_text(inst), instance_text(small));
    };
    if (o.exhaustive) {
      DividedInstance inst;
      inst.y.resize(o.n);
      std::iota(inst.y.begin(), inst.y.end(), 0u);
      do {
        for (inst.cx = 0; inst.cx <= o.n; ++inst.cx)
          for (inst.cy = 0; inst.cy <= o.n; ++inst.cy)
            if (auto r = check(inst)) return *r;
      } while (std::next_permutation(inst.y.begin(), inst.y.end()));
    } else {
      for (std::uint64_t k = 0; k < o.seeds; ++k)
        if (auto r = check(random_instance(static_cast<std::uint32_t>(o.n), o.seed + k))) return *r;
    }
    out << "PASS shapes s=" << o.n << ": " << checked << " instances\n";
    return kExitOk;
  }

  if (o.mode == "reductions" || o.mode == "cycles") {
    const bool reductions = o.mode == "reductions";
    const std::vector<C4Route> graph_routes =
        reductions ? std::vector<C4Route>{C4Route::kViaReductions, C4Route::kViaPattern}
                   : std::vector<C4Route>{C4Route::kCodegree};
    const std::vector<C4Route> layered_routes =
        reductions ? std::vector<C4Route>{C4Route::kViaReductions, C4Route::kViaPattern}
                   : std::vector<C4Route>{C4Route::kCodegree};
    std::function<bool(const UndirectedGraph&)> graph_fails = [&](const UndirectedGraph& g) {
      return !graph_mismatch(g, graph_routes).empty();
    };
    std::function<bool(const LayeredMultigraph&)> layered_fails = [&](const LayeredMultigraph& g) {
      return !layered_mismatch(g, layered_routes).empty();
    };
    const auto n = static_cast<NodeId>(o.n);
    const std::uint64_t rounds = o.exhaustive ? 1 : o.seeds;
    for (std::uint64_t k = 0; k < rounds; ++k) {
      const std::uint64_t seed = o.seed + k;
      const auto g = random_graph(n, {1, 2}, seed);
      ++checked;
      if (auto why = graph_mismatch(g, graph_routes); !why.empty()) {
        std::ostringstream text;
        write_graph(text, shrink<UndirectedGraph>(g, graph_parts, drop_edge, graph_fails));
        return fail(why + " on graph seed " + std::to_string(seed), "\n" + text.str());
      }
      const NodeId per_layer = std::max<NodeId>(1, std::min<NodeId>(n, reductions ? 5 : 8));
      const auto lg = random_layered({per_layer, per_layer, per_layer, per_layer}, {1, 2}, 7, seed);
      ++checked;
      if (auto why = layered_mismatch(lg, layered_routes); !why.empty()) {
        std::ostringstream text;
        write_graph(text, shrink<LayeredMultigraph>(lg, layered_parts, drop_layered_edge, layered_fails));
        return fail(why + " on layered seed " + std::to_string(seed), "\n" + text.str());
      }
    }
    out << "PASS " << o.mode << " n=" << o.n << ": " << checked << " graphs\n";
    return kExitOk;
  }
  throw CLI::ValidationError("--mode", "unknown mode " + o.mode);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int bench(const std::string& algo, std::uint64_t max_n, std::uint64_t seed, Reporter& r, std::ostream& out,
          bool records) {
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t n = 1000; n <= max_n; n *= 10) sizes.push_back(n);
  if (sizes.empty())
    for (std::uint64_t n = std::max<std::uint64_t>(max_n / 100, 4); n <= max_n; n *= 10) sizes.push_back(n);
  if (sizes.size() < 2) throw CLI::ValidationError("--max-n", "needs at least two sizes");

  std::vector<double> xs, ys;
  if (!records) out << "n seconds\n";
  for (auto n : sizes) {
    const auto perm = random_permutation(n, seed);
    const auto t0 = std::chrono::steady_clock::now();
    Count check = 0;
    if (algo == "trivial") {
      check = trivial_profile4(perm).total();
    } else if (algo == "nontrivial") {
      check = count_pattern4(perm, Pattern::from_digits("1324"));
    } else if (algo == "profile") {
      check = full_profile4(perm).total();
    } else {
      throw CLI::ValidationError("--algo", "expected trivial, nontrivial or profile");
    }
    const double t = seconds_since(t0);
    if (records) {
      r.value("n", std::to_string(n));
      r.value("seconds", std::to_string(t));
      r.count("result", check);
    } else {
      out << n << ' ' << t << '\n';
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(t, 1e-9)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  std::ostringstream slope;
  slope.precision(3);
  slope << std::fixed << sxy / sxx;
  r.value("slope", slope.str());
  return kExitOk;
}

C4Route parse_route(const std::string& s) {
  static const std::map<std::string, C4Route> kRoutes = {{"brute", C4Route::kBrute},
                                                         {"codegree", C4Route::kCodegree},
                                                         {"via-pattern", C4Route::kViaPattern},
                                                         {"via-reductions", C4Route::kViaReductions}};
  const auto it = kRoutes.find(s);
  if (it == kRoutes.end()) throw CLI::ValidationError("--algo", "unknown route " + s);
  return it->second;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length-4 permutation pattern profiles and 4-cycle counting", "perm4"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  std::string input;
  std::string pattern;
  std::string algo;
  bool directed = false;
  VerifyOptions vo;
  std::uint64_t n = 10, seed = 1, max_mult = 3, max_n = 100000;
  std::string p_text = "1/2";

  auto* profile = app.add_subcommand("profile", "all 24 length-4 counts");
  profile->add_option("--input", input)->required();

  auto* count_pattern = app.add_subcommand("count-pattern", "one pattern of length 1..4");
  count_pattern->add_option("--input", input)->required();
  count_pattern->add_option("--pattern", pattern)->required();

  auto* count_small = app.add_subcommand("count-small", "one pattern of length 1..3");
  count_small->add_option("--input", input)->required();
  count_small->add_option("--pattern", pattern)->required();

  auto* count_c4_cmd = app.add_subcommand("count-c4", "4-cycles of an edge-list or layered file");
  count_c4_cmd->add_option("--input", input)->required();
  count_c4_cmd->add_option("--algo", algo, "brute, codegree, via-pattern or via-reductions")->required();
  count_c4_cmd->add_flag("--directed", directed, "edge list holds arcs");

  auto* tau = app.add_subcommand("tau-star", "the tau* rank statistic as an exact fraction");
  tau->add_option("--input", input)->required();

  auto* verify_cmd = app.add_subcommand("verify", "cross-check against the brute-force oracles");
  verify_cmd->add_option("--mode", vo.mode)->required()->check(
      CLI::IsMember({"profile", "shapes", "reductions", "cycles"}));
  verify_cmd->add_option("--n", vo.n, "permutation length, instance size or node count");
  auto* exhaustive = verify_cmd->add_flag("--exhaustive", vo.exhaustive);
  auto* seeds = verify_cmd->add_option("--seeds", vo.seeds, "number of seeded random inputs");
  exhaustive->excludes(seeds);
  verify_cmd->add_option("--seed", vo.seed, "first seed");

  auto* gen = app.add_subcommand("gen", "seeded random inputs");
  std::string gen_kind;
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"perm", "graph", "layered"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--p", p_text, "edge probability a/b");
  gen->add_option("--max-mult", max_mult, "largest layered multiplicity");
  gen->add_flag("--directed", directed);

  auto* bench_cmd = app.add_subcommand("bench", "timings and log-log slope over n = 10^3, 10^4, ...");
  bench_cmd->add_option("--max-n", max_n);
  bench_cmd->add_option("--algo", algo, "trivial, nontrivial or profile")->required();
  bench_cmd->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Reporter r(out, format == "records");
  try {
    if (profile->parsed()) {
      const auto perm = load_permutation(input);
      report_profile(r, perm, full_profile4(perm));
    } else if (count_pattern->parsed() || count_small->parsed()) {
      const Pattern p = parse_pattern_flag(pattern, 1, count_small->parsed() ? 3 : 4);
      const auto perm = load_permutation(input);
      r.pattern(p.digits(), p.size() == 4 ? count_pattern4(perm, p) : count_small_pattern(perm, p));
    } else if (count_c4_cmd->parsed()) {
      const C4Route route = parse_route(algo);
      const auto file = load_graph(input, directed);
      Count c = 0;
      if (file.layered) {
        c = count_c4(file.graph, route);
      } else if (directed) {
        c = count_c4(DirectedGraph(file.nodes, file.edges), route);
      } else {
        c = count_c4(UndirectedGraph(file.nodes, file.edges), route);
      }
      r.count("c4", c);
    } else if (tau->parsed()) {
      const auto perm = load_permutation(input);
      const auto t = tau_star(trivial_profile4(perm), perm.size());
      r.value("tau_star", to_string_signed(t.num) + "/" + to_string(t.den));
    } else if (verify_cmd->parsed()) {
      return verify(vo, out);
    } else if (gen->parsed()) {
      const Probability p = parse_probability(p_text);
      if (gen_kind == "perm") {
        out << perm_text(random_permutation(n, seed)) << '\n';
      } else if (gen_kind == "graph") {
        if (directed) {
          write_graph(out, random_digraph(static_cast<NodeId>(n), p, seed));
        } else {
          write_graph(out, random_graph(static_cast<NodeId>(n), p, seed));
        }
      } else {
        const auto s = static_cast<NodeId>(n);
        write_graph(out, random_layered({s, s, s, s}, p, max_mult, seed));
      }
    } else if (bench_cmd->parsed()) {
      return bench(algo, max_n, seed, r, out, format == "records");
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace perm4
