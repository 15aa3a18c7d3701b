// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "perm4/cli.hpp"
#include "perm4/generators.hpp"
#include "perm4/graph.hpp"
#include "perm4/profile.hpp"
#include "perm4/reductions.hpp"
#include "perm4/shape_counting.hpp"
#include "perm4/small_patterns.hpp"

namespace perm4 {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

std::string fmt(double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  return buf;
}

Count binomial4(std::uint64_t n) {
  if (n < 4) return 0;
  const Count m = n;
  return m * (m - 1) * (m - 2) * (m - 3) / 24;
}

std::vector<Pattern> non_trivial_patterns() {
  std::vector<Pattern> out;
  for (int i = 0; i < 24; ++i)
    if (!is_trivial(Pattern::from_index4(i))) out.push_back(Pattern::from_index4(i));
  return out;
}

std::vector<Pattern> short_patterns() {
  std::vector<Pattern> out;
  for (std::string d : {"1", "12", "21"}) out.push_back(Pattern::from_digits(d));
  std::string d = "123";
  do out.push_back(Pattern::from_digits(d));
  while (std::next_permutation(d.begin(), d.end()));
  return out;
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<std::int32_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  do fn(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

// Per (shape, pattern) tallies straight from the definition.
struct ShapeOracle {
  std::vector<std::array<Count, 24>> by_shape;

  explicit ShapeOracle(const DividedInstance& inst) : by_shape(all_shapes().size()) {
    const auto ps = inst.point_set();
    const auto div = inst.division();
    const auto pts = ps.points();  // sorted by x
    const auto shapes = all_shapes();
    const std::size_t s = pts.size();
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = a + 1; b < s; ++b)
        for (std::size_t c = b + 1; c < s; ++c)
          for (std::size_t d = c + 1; d < s; ++d) {
            const Point q[4] = {pts[a], pts[b], pts[c], pts[d]};
            int vals[4];
            for (int i = 0; i < 4; ++i) {
              vals[i] = 1;
              for (int j = 0; j < 4; ++j) vals[i] += q[j].y < q[i].y;
            }
            const auto shape = shape_of(q, div);
            const auto k = std::find(shapes.begin(), shapes.end(), shape) - shapes.begin();
            ++by_shape[static_cast<std::size_t>(k)][Pattern(std::span<const int>(vals, 4)).index()];
          }
  }

  Count at(const Shape& shape, const Pattern& p) const {
    const auto shapes = all_shapes();
    return by_shape[static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), shape) - shapes.begin())][p.index()];
  }
};

void exhaustive_profiles() {
  const auto start = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& perm) {
      ++checked;
      if (full_profile4(perm).counts != brute_profile4(perm)) ++bad;
    });
  report(bad == 0 && seconds_since(start) < 300, "exhaustive profiles n<=8",
         std::to_string(checked) + " permutations, " + std::to_string(bad) + " mismatches, " + fmt(seconds_since(start)));
}

void random_profiles() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto perm = random_permutation(100, seed);
    if (full_profile4(perm).counts != brute_profile4(perm)) ++bad;
  }
  report(bad == 0 && seconds_since(start) < 600, "random profiles n=100",
         "50 permutations, " + std::to_string(bad) + " mismatches, " + fmt(seconds_since(start)));
}

void sum_identity(const Profile4& big) {
  std::string detail;
  bool ok = true;
  for (std::uint64_t n : {4u, 100u, 10000u}) {
    const bool hit = full_profile4(random_permutation(n, 7)).total() == binomial4(n);
    ok = ok && hit;
    detail += "n=" + std::to_string(n) + (hit ? " ok, " : " wrong, ");
  }
  const bool hit = big.total() == binomial4(100000);
  ok = ok && hit;
  detail += std::string("n=100000 ") + (hit ? "ok" : "wrong");
  report(ok, "profile sum identity", detail);
}

void short_pattern_checks() {
  const auto patterns = short_patterns();
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& perm) {
      for (const auto& p : patterns) {
        ++checked;
        if (count_small_pattern(perm, p) != brute_count_pattern(perm, p)) ++bad;
      }
    });
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto perm = random_permutation(200, 100 + seed);
    for (const auto& p : patterns) {
      ++checked;
      if (count_small_pattern(perm, p) != brute_count_pattern(perm, p)) ++bad;
    }
  }
  report(bad == 0, "short patterns vs oracle",
         std::to_string(checked) + " counts, " + std::to_string(bad) + " mismatches");

  const auto identity = Permutation::identity(1000000);
  const auto random = random_permutation(1000000, 1);
  double worst = 0;
  bool values_ok = true;
  for (const auto& p : patterns) {
    for (const auto* perm : {&identity, &random}) {
      const auto start = Clock::now();
      const Count c = count_small_pattern(*perm, p);
      worst = std::max(worst, seconds_since(start));
      if (perm == &identity) {
        const bool increasing = std::is_sorted(p.values().begin(), p.values().end());
        Count want = 1;
        for (int i = 0; i < p.size(); ++i) want = want * (1000000 - i) / (i + 1);
        values_ok = values_ok && c == (increasing ? want : Count{0});
      }
    }
  }
  report(worst < 10 && values_ok, "short patterns n=10^6",
         "9 patterns x 2 inputs, slowest " + fmt(worst) + (values_ok ? "" : ", identity counts wrong"));
}

void shape_checks() {
  const auto start = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto base = random_instance(static_cast<std::uint32_t>(1 + seed % 40), 5000 + seed);
    for (const auto& g : dihedral_group()) {
      const auto inst = g.apply(base);
      const ShapeOracle oracle(inst);
      for (const auto& shape : all_shapes()) {
        if (!shape.proper()) continue;
        if (shape.four_partite()) {
          for (int i = 0; i < 24; ++i) {
            const Pattern p = Pattern::from_index4(i);
            const Count got = is_trivial(p) ? Count{0} : count_4partite(inst, p);
            ++checked;
            if (got != oracle.at(shape, p)) ++bad;
          }
          continue;
        }
        const auto counts = count_shape(inst, shape);
        for (int i = 0; i < 24; ++i) {
          ++checked;
          if (counts[i] != oracle.at(shape, Pattern::from_index4(i))) ++bad;
        }
      }
    }
  }
  report(bad == 0, "shape counting",
         "200 instances x 8 symmetries, " + std::to_string(checked) + " counts, " + std::to_string(bad) +
             " mismatches, " + fmt(seconds_since(start)));
}

void inclusion_exclusion_checks() {
  const PointSetCounter brute = [](const PointSet& ps, const Pattern& p) { return brute_count_pattern(ps, p); };
  std::size_t checked = 0, bad = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(static_cast<std::uint32_t>(seed % 17), 9000 + seed);
    const auto ps = inst.point_set();
    const auto div = inst.division();
    for (const auto& p : non_trivial_patterns()) {
      ++checked;
      if (four_partite_by_inclusion_exclusion(ps, div, p, brute) != count_4partite(inst, p)) ++bad;
    }
  }
  report(bad == 0, "inclusion-exclusion vs 4-partite counting",
         "200 instances, " + std::to_string(checked) + " counts, " + std::to_string(bad) + " mismatches");
}

void pattern_equivalence() {
  const Pattern target = Pattern::from_digits("1324");
  const Shape center{1, 1, 1, 1};
  std::size_t checked = 0, bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = random_instance(static_cast<std::uint32_t>(4 + seed % 30), 13000 + seed);
    const ShapeOracle oracle(inst);
    for (const auto& p : non_trivial_patterns()) {
      const auto normal = normalize_to_1324(inst, p);
      const ShapeOracle normal_oracle(normal);
      ++checked;
      if (oracle.at(center, p) != normal_oracle.at(center, target) ||
          count_4partite(normal, target) != oracle.at(center, p))
        ++bad;
    }
  }
  report(bad == 0, "pattern equivalence under normalization",
         "100 instances x 16 patterns, " + std::to_string(bad) + " mismatches");
}

void c4_counters() {
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(static_cast<NodeId>(seed % 31), {1 + seed % 9, 10}, seed);
    if (count_c4_undirected(g) != brute_count_c4(g)) ++bad;
  }
  std::size_t layered_bad = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(20000 + seed);
    std::array<NodeId, 4> sizes{};
    for (auto& s : sizes) s = static_cast<NodeId>(rng.below(9));
    const auto g = random_layered(sizes, {1 + seed % 4, 4}, 7, seed);
    if (count_c4_layered(g) != brute_count_c4(g)) ++layered_bad;
  }
  const UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const bool fixed = count_c4_undirected(c4) == 1 && count_c4_undirected(k4) == 3 && brute_count_c4(c4) == 1 &&
                     brute_count_c4(k4) == 3;
  report(bad == 0 && layered_bad == 0 && fixed, "4-cycle counters",
         "200 graphs " + std::to_string(bad) + " mismatches, 200 layered " + std::to_string(layered_bad) +
             " mismatches, C4=1 K4=3 " + (fixed ? "ok" : "wrong"));
}

void reduction_chain() {
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_graph(static_cast<NodeId>(seed % 26), {1 + seed % 5, 6}, 30000 + seed);
    const Count want = brute_count_c4(g);
    const auto directed = undirected_to_directed(g);
    const auto layered = directed_to_layered(directed);
    const auto undirected = layered_to_undirected(layered.graph);
    const Count layered_count = layered_count_from_undirected(
        undirected, [](const UndirectedGraph& h) { return brute_count_c4(h); });
    const Count composed = (layered_count - layered.correction) / 4 / 2;
    if (composed != want || count_c4_via_reductions(g) != want) ++bad;
  }
  const DirectedGraph pair(2, {{0, 1}, {1, 0}});
  const auto r = directed_to_layered(pair);
  const Count intermediate = count_c4_layered(r.graph);
  const bool pair_ok = intermediate == 2 && r.correction == 2 && (intermediate - r.correction) / 4 == 0 &&
                       brute_count_c4(pair) == 0;
  report(bad == 0 && pair_ok, "reduction chain",
         "100 graphs " + std::to_string(bad) + " mismatches, bidirectional pair layered=" +
             std::to_string(static_cast<std::uint64_t>(intermediate)) +
             " correction=" + std::to_string(static_cast<std::uint64_t>(r.correction)));
}

void splitting() {
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(40000 + seed);
    std::array<NodeId, 4> sizes{};
    for (auto& s : sizes) s = static_cast<NodeId>(1 + rng.below(5));
    const auto g = random_layered(sizes, {1, 2}, 1 + seed % 12, seed);
    const auto split = split_multigraph(g);
    Count total = 0;
    for (std::size_t i = 0; i < split.size(); ++i) {
      const auto inst = split.instance(i);
      total += inst.weight * brute_count_c4(inst.graph);
    }
    if (total != brute_count_c4(g)) ++bad;
  }
  report(bad == 0, "multigraph splitting", "100 multigraphs, " + std::to_string(bad) + " mismatches");
}

void pattern_embedding() {
  const auto counter = [](const PointSet& ps, const PlaneDivision& div) {
    return count_4partite(ps, div, Pattern::from_digits("1324"));
  };
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(50000 + seed);
    std::array<NodeId, 4> sizes{};
    for (auto& s : sizes) s = static_cast<NodeId>(rng.below(7));
    const auto g = random_layered(sizes, {1 + seed % 3, 4}, 1, seed);
    if (count_c4_via_patterns(g, counter) != static_cast<SignedCount>(brute_count_c4(g))) ++bad;
  }
  report(bad == 0, "layered graph to pattern counts", "100 graphs, " + std::to_string(bad) + " mismatches");
}

void performance(double big_secs) {
  report(big_secs < 1800, "full profile n=100000", fmt(big_secs));

  std::ostringstream out, err;
  const int code = run_cli({"bench", "--max-n", "100000", "--algo", "nontrivial", "--format", "records"}, out, err);
  double slope = 1e9;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("slope: ", 0) == 0) slope = std::stod(line.substr(7));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", slope);
  report(code == 0 && slope <= 1.75, "non-trivial route log-log slope", std::string("slope ") + buf);
}

void trivial_fast_path() {
  const auto perm = random_permutation(1000000, 2);
  const auto start = Clock::now();
  const auto p = trivial_profile4(perm);
  const double secs = seconds_since(start);
  int nonzero = 0;
  for (int i = 0; i < 24; ++i)
    if (is_trivial(Pattern::from_index4(i)) && p.counts[i] != 0) ++nonzero;
  report(secs < 120 && nonzero == 8, "trivial counts n=10^6", "8 patterns in " + fmt(secs));
}

}  // namespace
}  // namespace perm4

int main() {
  using namespace perm4;
  exhaustive_profiles();
  random_profiles();
  short_pattern_checks();
  shape_checks();
  inclusion_exclusion_checks();
  pattern_equivalence();
  c4_counters();
  reduction_chain();
  splitting();
  pattern_embedding();
  trivial_fast_path();

  const auto big_perm = random_permutation(100000, 3);
  const auto start = Clock::now();
  const auto big = full_profile4(big_perm);
  const double big_secs = seconds_since(start);
  sum_identity(big);
  performance(big_secs);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
