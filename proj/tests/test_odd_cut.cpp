// Tests for marked graphs and minimum odd marked cuts: collapse semantics,
// the canonical-cut scan against exhaustive enumeration, the structural
// compatibility facts it relies on, and the witness-pair procedure.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "foldlp/flow.hpp"
#include "foldlp/graph.hpp"
#include "foldlp/odd_cut.hpp"
#include "foldlp/rational.hpp"

using foldlp::CapacitatedGraph;
using foldlp::Cut;
using foldlp::FlowBackend;
using foldlp::MarkedGraph;
using foldlp::Rational;
using foldlp::cut_value;
using foldlp::is_marked_cut;
using foldlp::is_odd_marked_cut;

namespace {

using G = CapacitatedGraph<std::string>;
using MG = MarkedGraph<std::string>;
using EdgeMap = std::map<std::pair<std::string, std::string>, Rational>;
using Side = std::set<std::string>;

Rational Q(long n, long d = 1) { return Rational(n, d); }

G symmetric(std::vector<std::string> vs,
            std::vector<std::tuple<std::string, std::string, Rational>> edges) {
  EdgeMap cap;
  for (auto& [u, v, c] : edges) {
    cap[{u, v}] = c;
    cap[{v, u}] = c;
  }
  return G(std::move(vs), std::move(cap));
}

std::vector<Side> all_sides(const MG& g) {
  const std::vector<std::string>& vs = g.base.vertices();
  std::vector<Side> out;
  for (unsigned long mask = 0; mask < (1ul << vs.size()); ++mask) {
    Side side;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask & (1ul << i)) side.insert(vs[i]);
    out.push_back(std::move(side));
  }
  return out;
}

std::size_t marks_inside(const MG& g, const Side& side) {
  std::size_t n = 0;
  for (const auto& v : side) n += g.marked.count(v);
  return n;
}

// Minimum value over all sides passing the filter, with the attaining sides.
template <typename Filter>
std::pair<Rational, std::vector<Side>> brute_min(const MG& g, Filter keep) {
  std::optional<Rational> best;
  std::vector<Side> family;
  for (const Side& side : all_sides(g)) {
    if (!keep(side)) continue;
    Rational v = cut_value(g.base, Cut<std::string>{side});
    if (!best || v < *best) best = v;
  }
  REQUIRE(best.has_value());
  for (const Side& side : all_sides(g)) {
    if (!keep(side)) continue;
    if (cut_value(g.base, Cut<std::string>{side}) == *best) family.push_back(side);
  }
  return {*best, family};
}

std::vector<Side> subset_minimal(const std::vector<Side>& family) {
  std::vector<Side> out;
  for (const Side& side : family) {
    bool minimal = true;
    for (const Side& other : family)
      if (other != side &&
          std::includes(side.begin(), side.end(), other.begin(), other.end()))
        minimal = false;
    if (minimal) out.push_back(side);
  }
  return out;
}

bool contains_or_disjoint(const Side& big, const Side& small) {
  if (std::includes(big.begin(), big.end(), small.begin(), small.end())) return true;
  for (const auto& v : small)
    if (big.count(v)) return false;
  return true;
}

MG random_marked(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(2, 7);
  int n = nd(rng);
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(std::string(1, char('a' + i)));
  std::uniform_int_distribution<int> capd(0, 3);
  std::uniform_int_distribution<int> halves(0, 2);
  EdgeMap cap;
  bool fractional = halves(rng) == 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational c(capd(rng), fractional ? 2 : 1);
      if (c.is_zero()) continue;
      cap[{vs[i], vs[j]}] = c;
      cap[{vs[j], vs[i]}] = c;
    }
  std::vector<std::string> pool = vs;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<int> kd(1, n / 2);
  int marks = 2 * kd(rng);
  std::set<std::string> m(pool.begin(), pool.begin() + marks);
  return MG(G(vs, cap), m);
}

}  // namespace

TEST_CASE("marked graph validation") {
  EdgeMap oneway;
  oneway[{"a", "b"}] = Q(1);
  CHECK_THROWS_AS(MG(G({"a", "b"}, oneway), {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(MG(symmetric({"a", "b"}, {{"a", "b", Q(1)}}), {"c"}),
                  std::invalid_argument);
  MG g(symmetric({"a", "b", "c"}, {{"a", "b", Q(1)}}), {"a", "c"});
  CHECK(is_marked_cut(g, Cut<std::string>{{"a"}}));
  CHECK(is_marked_cut(g, Cut<std::string>{{"a", "b"}}));
  CHECK_FALSE(is_marked_cut(g, Cut<std::string>{{"b"}}));
  CHECK_FALSE(is_marked_cut(g, Cut<std::string>{{"a", "c"}}));
  CHECK(is_odd_marked_cut(g, Cut<std::string>{{"a", "b"}}));
  CHECK_FALSE(is_odd_marked_cut(g, Cut<std::string>{{"a", "c"}}));
}

TEST_CASE("collapse merges capacities and drops marks") {
  MG g(symmetric({"a", "b", "c", "d"},
                 {{"a", "b", Q(1)},
                  {"a", "c", Q(2)},
                  {"b", "c", Q(4)},
                  {"c", "d", Q(8)}}),
       {"a", "b", "c", "d"});

  MG h = foldlp::collapse(g, {"b", "c"}, std::string("z"));
  CHECK(h.base.vertices() == std::vector<std::string>{"a", "d", "z"});
  CHECK(h.base.capacity("a", "z") == Q(3));
  CHECK(h.base.capacity("z", "a") == Q(3));
  CHECK(h.base.capacity("d", "z") == Q(8));
  CHECK(h.base.capacity("a", "d") == Q(0));
  CHECK(h.base.is_symmetric());
  CHECK(h.marked == Side{"a", "d"});

  CHECK_THROWS_AS(foldlp::collapse(g, {}, std::string("z")), std::invalid_argument);
  CHECK_THROWS_AS(foldlp::collapse(g, {"b"}, std::string("a")), std::invalid_argument);
  CHECK_THROWS_AS(foldlp::collapse(g, {"q"}, std::string("z")), std::invalid_argument);
}

TEST_CASE("collapse preserves values of cuts that do not split the merged set") {
  std::mt19937 rng(4408213);
  for (int trial = 0; trial < 60; ++trial) {
    MG g = random_marked(rng);
    const std::vector<std::string>& vs = g.base.vertices();
    std::uniform_int_distribution<int> pick(0, 1);
    Side d;
    for (const auto& v : vs)
      if (pick(rng)) d.insert(v);
    if (d.empty() || d.size() == vs.size()) continue;
    MG h = foldlp::collapse(g, d, std::string("Z"));
    for (const Side& side : all_sides(g)) {
      if (!contains_or_disjoint(side, d)) continue;
      bool swallows = std::includes(side.begin(), side.end(), d.begin(), d.end());
      Side renamed;
      for (const auto& v : side)
        if (!d.count(v)) renamed.insert(v);
      if (swallows) renamed.insert("Z");
      CHECK(cut_value(g.base, Cut<std::string>{side}) ==
            cut_value(h.base, Cut<std::string>{renamed}));
    }
  }
}

TEST_CASE("minimum odd marked cut on fixed graphs") {
  SECTION("single edge with rational capacity") {
    MG g(symmetric({"u", "v"}, {{"u", "v", Q(5, 2)}}), {"u", "v"});
    auto [cut, value] = foldlp::min_odd_marked_cut(g);
    CHECK(value == Q(5, 2));
    CHECK(cut.side == Side{"u"});
  }

  SECTION("four cycle with every vertex marked") {
    MG g(symmetric({"a", "b", "c", "d"},
                   {{"a", "b", Q(1)},
                    {"b", "c", Q(1)},
                    {"c", "d", Q(1)},
                    {"d", "a", Q(1)}}),
         {"a", "b", "c", "d"});
    auto [cut, value] = foldlp::min_odd_marked_cut(g);
    CHECK(value == Q(2));
    CHECK(is_odd_marked_cut(g, cut));
    CHECK(cut_value(g.base, cut) == Q(2));
  }

  SECTION("two triangles joined by a cheap bridge") {
    MG g(symmetric({"a", "b", "c", "d", "e", "f"},
                   {{"a", "b", Q(1)},
                    {"b", "c", Q(1)},
                    {"a", "c", Q(1)},
                    {"c", "d", Q(1)},
                    {"d", "e", Q(1)},
                    {"e", "f", Q(1)},
                    {"d", "f", Q(1)}}),
         {"a", "e"});
    auto [cut, value] = foldlp::min_odd_marked_cut(g);
    CHECK(value == Q(1));
    CHECK(cut.side == Side{"a", "b", "c"});
  }

  SECTION("marking parity is rejected") {
    G base = symmetric({"a", "b", "c"}, {{"a", "b", Q(1)}, {"b", "c", Q(1)}});
    CHECK_THROWS_WITH(foldlp::min_odd_marked_cut(MG(base, {})), "marking parity");
    CHECK_THROWS_WITH(foldlp::min_odd_marked_cut(MG(base, {"a"})), "marking parity");
    CHECK_THROWS_WITH(foldlp::min_odd_marked_cut(MG(base, {"a", "b", "c"})),
                      "marking parity");
  }
}

TEST_CASE("minimum odd marked cut equals exhaustive minimum on random graphs") {
  std::mt19937 rng(52709441);
  for (int trial = 0; trial < 140; ++trial) {
    MG g = random_marked(rng);
    auto odd = [&](const Side& side) { return marks_inside(g, side) % 2 == 1; };
    auto [best, family] = brute_min(g, odd);
    auto [cut, value] = foldlp::min_odd_marked_cut(g);
    CHECK(value == best);
    CHECK(is_odd_marked_cut(g, cut));
    CHECK(cut_value(g.base, cut) == best);
    if (trial % 5 == 0) {
      auto [cut_lp, value_lp] = foldlp::min_odd_marked_cut(g, FlowBackend::Lp);
      CHECK(value_lp == best);
      CHECK(cut_lp.side == cut.side);
    }
  }
}

TEST_CASE("canonical cuts are compatible with basic minimum marked cuts") {
  std::mt19937 rng(90218837);
  for (int trial = 0; trial < 120; ++trial) {
    MG g = random_marked(rng);
    auto marked_filter = [&](const Side& side) {
      return is_marked_cut(g, Cut<std::string>{side});
    };
    std::vector<Side> basics = subset_minimal(brute_min(g, marked_filter).second);
    for (const auto& s : g.marked)
      for (const auto& t : g.marked) {
        if (s == t) continue;
        Cut<std::string> c = foldlp::canonical_min_cut(g.base, s, t, FlowBackend::Aug);
        for (const Side& other : basics) {
          bool trichotomy = contains_or_disjoint(c.side, other) || other.count(s) ||
                            other.count(t);
          CHECK(trichotomy);
        }
      }
  }
}

TEST_CASE("basic minimum odd cuts admit compatible minimum marked cuts") {
  std::mt19937 rng(66184409);
  for (int trial = 0; trial < 120; ++trial) {
    MG g = random_marked(rng);
    auto odd = [&](const Side& side) { return marks_inside(g, side) % 2 == 1; };
    auto marked_filter = [&](const Side& side) {
      return is_marked_cut(g, Cut<std::string>{side});
    };
    std::vector<Side> odd_basics = subset_minimal(brute_min(g, odd).second);
    std::vector<Side> min_marked = brute_min(g, marked_filter).second;
    for (const Side& c : odd_basics) {
      bool found = false;
      for (const Side& other : min_marked)
        if (contains_or_disjoint(c, other)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("basic minimum marked cut honors the compatibility filter") {
  MG g(symmetric({"u", "v", "w"}, {{"u", "v", Q(2)}, {"v", "w", Q(1)}}), {"u", "w"});
  CHECK(foldlp::basic_min_marked_cut(g, Cut<std::string>{{"u"}}).side == Side{"w"});
  CHECK(foldlp::basic_min_marked_cut(g, Cut<std::string>{{"u", "v"}}).side ==
        Side{"u", "v"});
  CHECK(foldlp::basic_min_marked_cut(g, Cut<std::string>{{"w"}}).side ==
        Side{"u", "v"});

  MG k2(symmetric({"u", "v"}, {{"u", "v", Q(3)}}), {"u", "v"});
  CHECK(foldlp::basic_min_marked_cut(k2, Cut<std::string>{{"v"}}).side == Side{"u"});

  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
  EdgeMap cap;
  cap[{"v0", "v1"}] = Q(1);
  cap[{"v1", "v0"}] = Q(1);
  MG big(G(many, cap), {"v0", "v1"});
  CHECK_THROWS_AS(foldlp::basic_min_marked_cut(big, Cut<std::string>{{"v0"}}),
                  std::invalid_argument);
}

TEST_CASE("witness pairs on fixed graphs") {
  SECTION("single edge") {
    MG g(symmetric({"u", "v"}, {{"u", "v", Q(2)}}), {"u", "v"});
    auto [s, t] = foldlp::wit_min_odd_cut(g, Cut<std::string>{{"u"}});
    CHECK(s == "u");
    CHECK(t == "v");
  }

  SECTION("rejects a cut that is not a minimum odd marked cut") {
    MG g(symmetric({"a", "b", "c", "d"},
                   {{"a", "b", Q(1)},
                    {"b", "c", Q(1)},
                    {"c", "d", Q(1)},
                    {"d", "a", Q(1)}}),
         {"a", "b", "c", "d"});
    CHECK_THROWS_AS(foldlp::wit_min_odd_cut(g, Cut<std::string>{{"a", "b"}}),
                    std::invalid_argument);
    auto [s, t] = foldlp::wit_min_odd_cut(g, Cut<std::string>{{"a"}});
    Cut<std::string> c = foldlp::canonical_min_cut(g.base, s, t, FlowBackend::Aug);
    CHECK(is_odd_marked_cut(g, c));
    CHECK(cut_value(g.base, c) == Q(2));
  }

  SECTION("bridge-spanning start cut") {
    MG g(symmetric({"a", "b", "c", "d", "e", "f"},
                   {{"a", "b", Q(1)},
                    {"b", "c", Q(1)},
                    {"a", "c", Q(1)},
                    {"c", "d", Q(1)},
                    {"d", "e", Q(1)},
                    {"e", "f", Q(1)},
                    {"d", "f", Q(1)}}),
         {"a", "e"});
    auto [s, t] = foldlp::wit_min_odd_cut(g, Cut<std::string>{{"a", "b", "c"}});
    CHECK(g.marked.count(s) == 1);
    CHECK(g.marked.count(t) == 1);
    Cut<std::string> c = foldlp::canonical_min_cut(g.base, s, t, FlowBackend::Aug);
    CHECK(is_odd_marked_cut(g, c));
    CHECK(cut_value(g.base, c) == Q(1));
  }
}

TEST_CASE("witness pairs on random graphs") {
  std::mt19937 rng(31558601);
  for (int trial = 0; trial < 120; ++trial) {
    MG g = random_marked(rng);
    auto [cut, value] = foldlp::min_odd_marked_cut(g);
    auto [s, t] = foldlp::wit_min_odd_cut(g, cut);
    REQUIRE(g.marked.count(s) == 1);
    REQUIRE(g.marked.count(t) == 1);
    REQUIRE(s != t);
    Cut<std::string> c = foldlp::canonical_min_cut(g.base, s, t, FlowBackend::Aug);
    CHECK(is_odd_marked_cut(g, c));
    CHECK(cut_value(g.base, c) == value);
  }
}
