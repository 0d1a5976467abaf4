#pragma once

#include <cstdint>
#include <optional>

#include "helly/basis_engine.hpp"
#include "helly/graph.hpp"
#include "helly/verdict.hpp"

namespace helly {

/// Vertices with a 2-labeling. labelY[i] is the label of vertices[i];
/// bicompatible = adjacent with different labels or nonadjacent with the
/// same label; biuniversal = bicompatible with every other listed vertex.
struct LabeledSubgraph {
  VertexSet vertices;
  std::vector<char> labelY;
  VertexSet biuniversal;
};

// All v with P + v a biclique, labeled to extend P's unique bipartition.
LabeledSubgraph bicompletion(const Graph& g, const VertexSet& p);

// Core of the maximal bicliques containing the nonempty biclique P: the
// biuniversal vertices of its bicompletion.
VertexSet bicliqueFamilyCore(const Graph& g, const VertexSet& p);

// Engine provider: the family of maximal bicliques containing P is empty
// exactly when P is not a biclique.
CoreProvider bicliqueProvider(const Graph& g);

// (p,q)-Helly property of the maximal-biclique hypergraph. (1,1),(1,2),
// (2,1): complete bipartite; p=1,q>=3: common core of all q-bicliques;
// p>=2 otherwise: basis backtracking over the q-bicliques.
Verdict isPQBicliqueHelly(const Graph& g, int p, int q,
                          const EngineOptions& options = {});

// Every induced subgraph is (p,q)-biclique-Helly.
Verdict isHereditaryPQBicliqueHelly(const Graph& g, int p, int q,
                                    const EngineOptions& options = {});

// Labeled subgraph on the vertices v such that P + v is a biclique for some
// union P of p members. Requires p >= 2, distinct q-biclique members, and
// the union of all members to be a biclique. A vertex receiving both labels
// would contradict the well-definedness of the construction and raises
// logic_error.
LabeledSubgraph buildBiexpansion(const Graph& g,
                                 const std::vector<VertexSet>& members);

struct BiocularSpec {
  int p = 0, q = 0, s = 0;
  std::vector<VertexSet> tSets;
  VertexSet zSet;
  VertexSet wSet;
  Graph graph;
};

enum class BiocularVariant { Auto, MatchingOrTripartite, Outside, CoP3, K3 };

// Canonical forbidden graph for the hereditary biclique property.
// (1,1): co-P3 or K3 (pick with the variant). p=1,s>=1: stable parts with
// T1 complete to T2 and Z isolated. p=1,s=0: a perfect matching between two
// stable q-sets. p=2,s=0: complete tripartite. Otherwise (p>=2, (p,q) not
// (2,1)): stable U plus one outside vertex per part, complete to the rest
// of U.
BiocularSpec buildBiocular(int p, int q, int s,
                           BiocularVariant variant = BiocularVariant::Auto);

struct BiocularEmbedding {
  int s = 0;
  std::vector<VertexSet> tSets;
  VertexSet zSet;
  VertexSet wSet;
};

struct BiocularSearchResult {
  std::optional<BiocularEmbedding> embedding;
  bool indeterminate = false;
};

// Exhaustive search for an induced biocular with parameters (p+1,q,s) for
// any s in 0..q-1, straight from the defining clauses.
BiocularSearchResult findInducedBiocular(const Graph& g, int p, int q,
                                         std::uint64_t budget = 50'000'000ULL);

// A certificate D of p+1 distinct q-bicliques refutes the (p,q)-biclique-
// Helly property when every union of p members is a biclique yet the cores
// of those unions share fewer than q vertices.
bool validateNonHellyCertificate(const Graph& g, int p, int q,
                                 const std::vector<VertexSet>& d);

}  // namespace helly
