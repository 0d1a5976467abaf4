#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "helly/gadgets.hpp"
#include "helly/graph.hpp"
#include "helly/verdict.hpp"

using namespace helly;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Graph k4() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
// central triangle 0,1,2; vertex 3+i adjacent to the triangle minus i
Graph hajos() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2},
                   {5, 0}, {5, 1}});
}

}  // namespace

TEST_CASE("graph basics and complete-to") {
  auto g = path3();
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.maxDegree() == 2);
  CHECK(completeTo(g, {0}) == VertexSet{0, 1});
  CHECK(completeTo(g, {}) == VertexSet{0, 1, 2});
  CHECK(completeTo(k4(), {1, 2}) == VertexSet{0, 1, 2, 3});
  CHECK(isClique(g, {0, 1}));
  CHECK_FALSE(isClique(g, {0, 2}));
  CHECK(isBicliqueSet(g, {0, 1, 2}));       // K_{1,2}
  CHECK_FALSE(isBicliqueSet(k4(), {0, 1, 2}));  // K_3
}

TEST_CASE("q-clique enumeration") {
  CHECK(enumerateQCliques(c5(), 3).empty());
  CHECK(enumerateQCliques(k4(), 3).size() == 4);
  CHECK(enumerateQCliques(hajos(), 3).size() == 4);
  CHECK(enumerateQCliques(k4(), 1).size() == 4);
  // matches brute subset filtering on randoms
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = randomGraph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    for (int q = 1; q <= 4; ++q) {
      auto fast = enumerateQCliques(g, q);
      std::vector<VertexSet> slow;
      forEachSubset(g.n(), q, [&](const std::vector<int>& s) {
        VertexSet v(s.begin(), s.end());
        if (isClique(g, v)) slow.push_back(v);
      });
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("q-biclique enumeration") {
  auto g = c5();
  CHECK(enumerateQBicliques(g, 1).size() == 5);
  CHECK(enumerateQBicliques(g, 2).size() == 10);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = randomGraph(4 + static_cast<int>(rng() % 4), 0.5, rng());
    auto fast = enumerateQBicliques(h, 3);
    std::vector<VertexSet> slow;  // 3-sets spanning 0 or 2 edges
    forEachSubset(h.n(), 3, [&](const std::vector<int>& s) {
      int e = h.adjacent(s[0], s[1]) + h.adjacent(s[0], s[2]) +
              h.adjacent(s[1], s[2]);
      if (e == 0 || e == 2) slow.push_back(VertexSet(s.begin(), s.end()));
    });
    CHECK(fast == slow);
    for (int q = 1; q <= 4; ++q) {
      std::vector<VertexSet> def;
      forEachSubset(h.n(), q, [&](const std::vector<int>& s) {
        VertexSet v(s.begin(), s.end());
        if (isBicliqueSet(h, v)) def.push_back(v);
      });
      CHECK(enumerateQBicliques(h, q) == def);
    }
  }
}

TEST_CASE("complete bipartite recognition") {
  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto bp = isCompleteBipartite(k23);
  REQUIRE(bp);
  CHECK(bp->first == VertexSet{0, 1});
  CHECK(bp->second == VertexSet{2, 3, 4});
  CHECK_FALSE(isCompleteBipartite(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));
  auto edgeless = isCompleteBipartite(Graph(3, {}));
  REQUIRE(edgeless);
  CHECK(edgeless->first == VertexSet{0, 1, 2});
  CHECK(edgeless->second.empty());
  // matches the forbidden-triple characterization on randoms
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = randomGraph(3 + static_cast<int>(rng() % 5), 0.4, rng());
    bool bad = false;
    forEachSubset(g.n(), 3, [&](const std::vector<int>& s) {
      int e = g.adjacent(s[0], s[1]) + g.adjacent(s[0], s[2]) +
              g.adjacent(s[1], s[2]);
      if (e == 1 || e == 3) bad = true;
    });
    CHECK(isCompleteBipartite(g).has_value() == !bad);
  }
}

TEST_CASE("maximal clique hypergraph") {
  auto p3 = cliqueHypergraph(path3());
  CHECK(p3.edges() == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(cliqueHypergraph(k4()).m() == 1);
  CHECK(cliqueHypergraph(c5()).m() == 5);
  CHECK(cliqueNumber(hajos()) == 3);
}

TEST_CASE("maximal biclique hypergraph") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(bicliqueHypergraph(k3).m() == 3);
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto bc4 = bicliqueHypergraph(c4);
  REQUIRE(bc4.m() == 1);
  CHECK(bc4.edge(0) == VertexSet{0, 1, 2, 3});
  auto bp3 = bicliqueHypergraph(path3());
  REQUIRE(bp3.m() == 1);
  CHECK(bp3.edge(0) == VertexSet{0, 1, 2});
  CHECK(bicliqueNumber(c4) == 4);
  CHECK_THROWS_AS(bicliqueHypergraph(Graph(19, {})), ResourceError);
}

TEST_CASE("phi graph") {
  auto k3 = Graph(3, {{0, 1}, {0, 2}, {1, 2}});
  auto phi2 = phiGraph(k3, 2);
  CHECK(phi2.graph.n() == 3);
  CHECK(phi2.graph.m() == 3);  // the three edges pairwise share the triangle
  auto g = c5();
  auto phi1 = phiGraph(g, 1);
  CHECK(phi1.graph.n() == g.n());
  CHECK(phi1.graph.m() == g.m());

  // maximal cliques commute with the q-subset lift
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    auto h = randomGraph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    for (int q = 1; q <= 3; ++q) {
      auto pg = phiGraph(h, q);
      if (pg.graph.n() == 0) {
        CHECK(cliqueNumber(h) < q);
        continue;
      }
      auto lhs = cliqueHypergraph(pg.graph).edges();
      std::vector<VertexSet> rhs;
      auto maximal = cliqueHypergraph(h);
      for (const auto& mc : maximal.edges()) {
        if (static_cast<int>(mc.size()) < q) continue;
        VertexSet img;
        for (std::size_t i = 0; i < pg.vertexLabels.size(); ++i)
          if (isSubset(pg.vertexLabels[i], mc)) img.push_back(static_cast<int>(i));
        rhs.push_back(img);
      }
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("biclique parity over four vertices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = randomGraph(4 + static_cast<int>(rng() % 5), 0.5, rng());
    forEachSubset(g.n(), 4, [&](const std::vector<int>& s) {
      int bicliques = 0;
      for (int omit = 0; omit < 4; ++omit) {
        VertexSet t;
        for (int i = 0; i < 4; ++i)
          if (i != omit) t.push_back(s[i]);
        bicliques += isBicliqueSet(g, t);
      }
      CHECK(bicliques % 2 == 0);
    });
  }
}

TEST_CASE("join and induced subgraph") {
  auto j = joinGraphs(Graph(1, {}), path3());
  CHECK(j.n() == 4);
  CHECK(j.m() == 5);
  auto sub = inducedSubgraph(hajos(), {0, 1, 2});
  CHECK(sub.graph.m() == 3);
  CHECK(sub.oldVertex == std::vector<int>{0, 1, 2});
}

TEST_CASE("graph text format round trip") {
  std::istringstream in("# graph\n4 3\n0 1\n1 2\n2 3\n");
  auto g = parseGraph(in);
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  std::ostringstream out;
  writeGraph(out, g);
  std::istringstream back(out.str());
  auto g2 = parseGraph(back);
  CHECK(g2.edgeList() == g.edgeList());
  std::istringstream bad("2 1\n1 0\n");
  CHECK_THROWS(parseGraph(bad));
}
