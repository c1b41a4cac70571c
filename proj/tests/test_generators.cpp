#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "zfdom/generators.hpp"
#include "zfdom/graph.hpp"

using namespace zfdom;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(std::min(perm[u], perm[v]),
                       std::max(perm[u], perm[v]));
  return from_edge_list(g.n, edges);
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

int count_cubic(int n, bool connected, bool claw_free, bool diamond_free) {
  CubicEnumerationConfig c;
  c.n = n;
  c.require_connected = connected;
  c.require_claw_free = claw_free;
  c.require_diamond_free = diamond_free;
  int count = 0;
  enumerate_cubic(c, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace

TEST_CASE("diamond necklace structure") {
  CHECK_THROWS_AS(diamond_necklace(1), std::invalid_argument);
  CHECK_THROWS_AS(diamond_necklace(17), std::invalid_argument);

  for (int k = 2; k <= 6; ++k) {
    Graph g = diamond_necklace(k);
    CHECK(g.n == 4 * k);
    CHECK(is_cubic(g));
    CHECK(is_connected(g));
    CHECK(is_claw_free(g));
    std::vector<VertexSet> diamonds = find_diamonds(g);
    REQUIRE(static_cast<int>(diamonds.size()) == k);
    for (int i = 0; i < k; ++i) {
      VertexSet expected = 0;
      for (int j = 0; j < 4; ++j) expected |= vs_bit(4 * i + j);
      CHECK(diamonds[i] == expected);
    }
    // Ring links join consecutive diamonds.
    for (int i = 0; i < k; ++i)
      CHECK(g.has_edge(4 * i, 4 * ((i + 1) % k) + 1));
  }
}

TEST_CASE("named graphs") {
  Graph k4 = named_graph("K4");
  CHECK(k4.n == 4);
  CHECK(k4.edge_count() == 6);

  Graph prism = named_graph("prism");
  CHECK(prism.n == 6);
  CHECK(is_cubic(prism));
  CHECK(is_connected(prism));
  CHECK(is_claw_free(prism));
  CHECK(find_diamonds(prism).empty());

  Graph f7 = named_graph("fig7_order10");
  CHECK(f7.n == 10);
  CHECK(is_cubic(f7));
  CHECK(is_connected(f7));
  CHECK(is_claw_free(f7));
  CHECK(find_diamonds(f7).size() == 1);

  Graph f9 = named_graph("fig9_order14");
  CHECK(f9.n == 14);
  CHECK(is_cubic(f9));
  CHECK(is_connected(f9));
  CHECK(is_claw_free(f9));
  CHECK(find_diamonds(f9).size() == 2);

  CHECK_THROWS_AS(named_graph("petersen"), std::invalid_argument);
}

TEST_CASE("connected cubic class counts at small orders") {
  CHECK(count_cubic(4, true, false, false) == 1);
  CHECK(count_cubic(6, true, false, false) == 2);
  CHECK(count_cubic(8, true, false, false) == 5);
  CHECK(count_cubic(10, true, false, false) == 19);
  CHECK(count_cubic(12, true, false, false) == 85);
}

TEST_CASE("cubic enumeration matches the naive labeled search") {
  for (int n : {4, 6, 8}) {
    for (bool connected : {true, false}) {
      oracle::NaiveCubicFilter f;
      f.require_connected = connected;
      std::vector<Graph> reference = oracle::naive_cubic_classes(n, f);

      CubicEnumerationConfig c;
      c.n = n;
      c.require_connected = connected;
      std::vector<Graph> mine = enumerate_cubic_collect(c);
      REQUIRE(mine.size() == reference.size());

      // Same classes, not just the same count.
      for (const Graph& g : mine) {
        bool matched = false;
        for (const Graph& r : reference)
          if (oracle::naive_isomorphic(g, r)) matched = true;
        CHECK(matched);
      }
    }
  }

  // Filtered variants against the oracle.
  for (int n : {6, 8}) {
    oracle::NaiveCubicFilter f;
    f.require_claw_free = true;
    CHECK(count_cubic(n, true, true, false) ==
          static_cast<int>(oracle::naive_cubic_classes(n, f).size()));
    f.require_diamond_free = true;
    CHECK(count_cubic(n, true, true, true) ==
          static_cast<int>(oracle::naive_cubic_classes(n, f).size()));
  }
}

TEST_CASE("enumeration emits no duplicate classes") {
  for (int n : {8, 10}) {
    CubicEnumerationConfig c;
    c.n = n;
    std::set<std::string> forms;
    int count = 0;
    enumerate_cubic(c, [&](const Graph& g) {
      CHECK(is_cubic(g));
      CHECK(is_connected(g));
      forms.insert(canonical_form(g));
      ++count;
    });
    CHECK(static_cast<int>(forms.size()) == count);
  }
}

TEST_CASE("claw-free cubic graphs at small orders") {
  // Order 6: the prism is the only connected claw-free cubic graph.
  CubicEnumerationConfig c;
  c.n = 6;
  c.require_claw_free = true;
  std::vector<Graph> six = enumerate_cubic_collect(c);
  REQUIRE(six.size() == 1);
  CHECK(canonical_form(six[0]) == canonical_form(named_graph("prism")));

  // Order 8: only the 2-diamond necklace.
  c.n = 8;
  std::vector<Graph> eight = enumerate_cubic_collect(c);
  REQUIRE(eight.size() == 1);
  CHECK(canonical_form(eight[0]) == canonical_form(diamond_necklace(2)));
}

TEST_CASE("in-filter pruning agrees with post-filtering") {
  for (int n : {8, 10}) {
    CubicEnumerationConfig plain;
    plain.n = n;
    int filtered_after = 0;
    enumerate_cubic(plain, [&](const Graph& g) {
      if (is_claw_free(g) && find_diamonds(g).empty()) ++filtered_after;
    });
    CHECK(count_cubic(n, true, true, true) == filtered_after);
  }
}

TEST_CASE("canonical form is a complete isomorphism invariant here") {
  std::mt19937 rng(20260817);
  std::vector<Graph> fixtures = {
      named_graph("K4"), named_graph("prism"), diamond_necklace(2),
      named_graph("fig7_order10"),
      from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                         {2, 3}, {2, 4}, {2, 5}})};  // K_{3,3}
  for (const Graph& g : fixtures) {
    std::string form = canonical_form(g);
    Graph canon = canonical_graph(g);
    CHECK(write_graph6(canon) == form);
    CHECK(oracle::naive_isomorphic(g, canon));
    for (int trial = 0; trial < 30; ++trial) {
      Graph h = relabel(g, random_permutation(g.n, rng));
      CHECK(canonical_form(h) == form);
    }
  }
  // Distinct classes get distinct forms.
  CHECK(canonical_form(named_graph("prism")) != canonical_form(fixtures[4]));

  // Random pairs: equality of forms exactly matches isomorphism.
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    std::bernoulli_distribution coin(0.4);
    auto random_graph = [&] {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      return from_edge_list(n, edges);
    };
    Graph a = random_graph(), b = random_graph();
    CHECK((canonical_form(a) == canonical_form(b)) ==
          oracle::naive_isomorphic(a, b));
  }
}

TEST_CASE("general graph enumeration counts per order") {
  const std::map<int, long long> expected = {
      {1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}, {7, 1044}};
  for (auto [n, want] : expected) {
    long long count = 0;
    enumerate_graphs(n, n - 1 > 0 ? n - 1 : 0,
                     [&](const Graph&) { ++count; });
    CHECK(count == want);
  }
}

TEST_CASE("general graph enumeration matches a labeled census at order 4") {
  // All 2^6 labeled graphs on 4 vertices, deduplicated by canonical form.
  std::set<std::string> labeled;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < 4; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(u, v);
    labeled.insert(canonical_form(from_edge_list(4, edges)));
  }
  std::set<std::string> enumerated;
  enumerate_graphs(4, 3, [&](const Graph& g) {
    CHECK(enumerated.insert(canonical_form(g)).second);  // no duplicates
  });
  CHECK(enumerated == labeled);
}

TEST_CASE("enumeration argument guards") {
  CubicEnumerationConfig c;
  c.n = 5;
  CHECK_THROWS_AS(enumerate_cubic(c, [](const Graph&) {}),
                  std::invalid_argument);
  c.n = 18;
  CHECK_THROWS_AS(enumerate_cubic(c, [](const Graph&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(0, 3, [](const Graph&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(17, 3, [](const Graph&) {}),
                  std::invalid_argument);

  Graph big = from_edge_list(17, {{0, 1}});
  CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
}
