#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helly/clique_helly.hpp"
#include "helly/gadgets.hpp"
#include "helly/oracle.hpp"

using namespace helly;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
// central triangle 0,1,2; vertex 3+i adjacent to the triangle minus i
Graph hajos() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2},
                   {5, 0}, {5, 1}});
}

}  // namespace

TEST_CASE("clique family core") {
  auto g = path3();
  CHECK(cliqueFamilyCore(g, {1}) == VertexSet{1});
  CHECK(cliqueFamilyCore(g, {0, 1}) == VertexSet{0, 1});
  CHECK_FALSE(cliqueFamilyCore(g, {0, 2}));  // not a clique
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(cliqueFamilyCore(k4, {0}) == VertexSet{0, 1, 2, 3});

  // always the intersection of the maximal cliques containing P
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto h = randomGraph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    auto mc = cliqueHypergraph(h);
    for (int q = 1; q <= 3; ++q)
      for (const auto& p : enumerateQCliques(h, q)) {
        std::vector<VertexSet> containing;
        for (const auto& e : mc.edges())
          if (isSubset(p, e)) containing.push_back(e);
        REQUIRE_FALSE(containing.empty());
        auto fc = cliqueFamilyCore(h, p);
        REQUIRE(fc);
        CHECK(*fc == core(containing));
        CHECK(isSubset(p, *fc));
      }
  }
}

TEST_CASE("plain clique recognizer") {
  CHECK(isPQCliqueHelly(path3(), 1, 1).holds);
  CHECK(isPQCliqueHelly(c5(), 2, 1).holds);
  // singleton maximal cliques with no common vertex
  CHECK_FALSE(isPQCliqueHelly(Graph(4, {}), 1, 1).holds);
  auto v = isPQCliqueHelly(hajos(), 2, 1);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(validateCliqueWitness(hajos(), 2, 1, false, *v.witness));
  CHECK_FALSE(isPQCliqueHelly(hajos(), 1, 1).holds);
  // the four triangles are (1,2)-intersecting yet share nothing
  auto v12 = isPQCliqueHelly(hajos(), 1, 2);
  REQUIRE_FALSE(v12.holds);
  REQUIRE(v12.witness);
  CHECK(validateCliqueWitness(hajos(), 1, 2, false, *v12.witness));
}

TEST_CASE("hereditary clique recognizer") {
  Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
               {2, 4}, {3, 4}});
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      CHECK(isHereditaryPQCliqueHelly(k5, p, q).holds);
  CHECK(isHereditaryPQCliqueHelly(c5(), 2, 1).holds);
  auto v = isHereditaryPQCliqueHelly(hajos(), 2, 1);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(validateCliqueWitness(hajos(), 2, 1, true, *v.witness));
  auto v11 = isHereditaryPQCliqueHelly(path3(), 1, 1);
  CHECK_FALSE(v11.holds);  // the endpoints induce 2K_1
  REQUIRE(v11.witness);
  CHECK(validateCliqueWitness(path3(), 1, 1, true, *v11.witness));
}

TEST_CASE("expansion construction") {
  // singleton members of the central triangle expand to the whole graph
  auto h = hajos();
  auto e = buildExpansion(h, {{0}, {1}, {2}});
  CHECK(e.vertices == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(e.universal.empty());

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto ek = buildExpansion(k4, {{0}, {1}, {2}});
  CHECK(ek.vertices == VertexSet{0, 1, 2, 3});
  CHECK(ek.universal == VertexSet{0, 1, 2, 3});

  // a union of p members that is not a clique is rejected
  CHECK_THROWS(buildExpansion(path3(), {{0}, {1}, {2}}));
  CHECK_THROWS(buildExpansion(k4, {{0}, {0}, {1}}));  // duplicates

  // expansion-based characterization: (p,q)-clique-Helly iff every
  // expansion of p+1 distinct q-cliques with pairwise-clique unions has at
  // least q universal vertices
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = randomGraph(4 + static_cast<int>(rng() % 3), 0.6, rng());
    for (int p = 2; p <= 3; ++p)
      for (int q = 1; q <= 2; ++q) {
        auto cliques = enumerateQCliques(g, q);
        if (static_cast<int>(cliques.size()) < p + 1) continue;
        bool allGood = true;
        std::vector<int> idx(cliques.size());
        forEachSubset(static_cast<int>(cliques.size()), p + 1,
                      [&](const std::vector<int>& pick) {
                        if (!allGood) return;
                        std::vector<VertexSet> mem;
                        for (int i : pick) mem.push_back(cliques[i]);
                        // unions of every p members must all be cliques
                        for (std::size_t skip = 0; skip < mem.size(); ++skip) {
                          VertexSet u;
                          for (std::size_t j = 0; j < mem.size(); ++j)
                            if (j != skip) u = setUnion(u, mem[j]);
                          if (!isClique(g, u)) return;
                        }
                        auto universal = buildExpansion(g, mem).universal;
                        if (static_cast<int>(universal.size()) < q)
                          allGood = false;
                      });
        CHECK(allGood == isPQCliqueHelly(g, p, q).holds);
      }
  }
}

TEST_CASE("canonical forbidden graphs fail the recognizers") {
  auto o110 = buildOcular(1, 1, 0);
  CHECK(o110.graph.n() == 2);
  CHECK(o110.graph.m() == 0);  // 2K_1
  CHECK(buildOcular(2, 1, 0).graph.m() == hajos().m());
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int s = 0; s < q; ++s) {
        auto spec = buildOcular(p, q, s);
        CHECK_FALSE(isHereditaryPQCliqueHelly(spec.graph, p, q).holds);
        auto found = findInducedOcular(spec.graph, p, q);
        REQUIRE_FALSE(found.indeterminate);
        CHECK(found.embedding.has_value());
      }
  // a denser W never rescues the property
  Graph wClique(3, {{0, 1}, {0, 2}, {1, 2}});
  auto dense = buildOcular(2, 2, 1, wClique);
  CHECK_FALSE(isHereditaryPQCliqueHelly(dense.graph, 2, 2).holds);
}

TEST_CASE("induced ocular search matches the hereditary recognizer") {
  CHECK_FALSE(findInducedOcular(c5(), 2, 1).embedding);
  auto r = findInducedOcular(hajos(), 2, 1);
  REQUIRE(r.embedding);
  CHECK(r.embedding->s == 0);

  // joining one vertex bumps every clique size by one
  auto lifted = joinGraphs(Graph(1, {}), hajos());
  auto r2 = findInducedOcular(lifted, 2, 2);
  REQUIRE(r2.embedding);
  CHECK(r2.embedding->s == 1);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = randomGraph(4 + static_cast<int>(rng() % 3), 0.55, rng());
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; q <= 2; ++q) {
        auto sr = findInducedOcular(g, p, q);
        REQUIRE_FALSE(sr.indeterminate);
        CHECK(sr.embedding.has_value() !=
              isHereditaryPQCliqueHelly(g, p, q).holds);
      }
  }
}

TEST_CASE("recognizers agree with the brute-force oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = randomGraph(3 + static_cast<int>(rng() % 4), 0.5, rng());
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) {
        auto plain = bruteGraphPQHelly(g, p, q, BaseFamily::Clique);
        REQUIRE(plain);
        auto pv = isPQCliqueHelly(g, p, q);
        CHECK(pv.holds == *plain);
        if (!pv.holds) {
          REQUIRE(pv.witness);
          CHECK(validateCliqueWitness(g, p, q, false, *pv.witness));
        }
        auto her = bruteHereditaryGraphPQHelly(g, p, q, BaseFamily::Clique);
        REQUIRE(her);
        auto hv = isHereditaryPQCliqueHelly(g, p, q);
        CHECK(hv.holds == *her);
        if (!hv.holds) {
          REQUIRE(hv.witness);
          CHECK(validateCliqueWitness(g, p, q, true, *hv.witness));
        }
      }
  }
}
