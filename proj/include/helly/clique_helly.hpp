#pragma once

#include <cstdint>
#include <optional>

#include "helly/basis_engine.hpp"
#include "helly/graph.hpp"
#include "helly/verdict.hpp"

namespace helly {

// Core of the maximal cliques containing a clique P: vertices complete to
// the set of vertices complete to P. Empty family exactly when P is not a
// clique.
std::optional<VertexSet> cliqueFamilyCore(const Graph& g, const VertexSet& p);

CoreProvider cliqueProvider(const Graph& g);

// (p,q)-Helly property of the maximal-clique hypergraph. p=1,q=1: universal
// vertex; p=1,q>=2: common core of all q-cliques; p>=2: basis backtracking
// over the q-cliques.
Verdict isPQCliqueHelly(const Graph& g, int p, int q,
                        const EngineOptions& options = {});

// Every induced subgraph is (p,q)-clique-Helly. p=1: the union of all
// q-cliques must be a clique; p>=2: starlike-basis backtracking.
Verdict isHereditaryPQCliqueHelly(const Graph& g, int p, int q,
                                  const EngineOptions& options = {});

struct Expansion {
  std::vector<VertexSet> members;  // the inducing p+1 q-cliques
  VertexSet vertices;              // complete to at least p members
  Graph graph;                     // induced on those vertices
  VertexSet universal;             // adjacent to every other expansion vertex
};

// Requires every union of p members to be a clique.
Expansion buildExpansion(const Graph& g, const std::vector<VertexSet>& members);

struct OcularSpec {
  int p = 0, q = 0, s = 0;
  std::vector<VertexSet> tSets;
  VertexSet zSet;
  VertexSet wSet;
  Graph graph;
};

// Canonical forbidden graph for the hereditary clique property. p=1: two
// mutually anticomplete (q-s)-cliques joined to an s-clique (2K_1 when
// q=1). p>=2: a clique U plus one outside vertex per part, complete to the
// rest of U and anticomplete to its part; wGraph (optional, p>=2 only)
// fixes the edges inside W.
OcularSpec buildOcular(int p, int q, int s,
                       const std::optional<Graph>& wGraph = std::nullopt);

struct OcularEmbedding {
  int s = 0;
  std::vector<VertexSet> tSets;
  VertexSet zSet;
  VertexSet wSet;
};

struct OcularSearchResult {
  std::optional<OcularEmbedding> embedding;
  bool indeterminate = false;
};

// Exhaustive search for an induced ocular with parameters (p+1,q,s) for any
// s in 0..q-1, straight from the defining clauses.
OcularSearchResult findInducedOcular(const Graph& g, int p, int q,
                                     std::uint64_t budget = 50'000'000ULL);

}  // namespace helly
