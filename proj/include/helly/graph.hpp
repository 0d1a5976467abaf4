#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "helly/hypergraph.hpp"
#include "helly/sets.hpp"

namespace helly {

/// Simple undirected loopless graph on vertices 0..n-1. Adjacency kept as
/// sorted neighbor lists plus bit rows for O(1) edge tests.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  long long m() const { return m_; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return (rows_[u][v / 64] >> (v % 64)) & 1;
  }
  int maxDegree() const;
  std::vector<std::pair<int, int>> edgeList() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> oldVertex;
};

struct PhiGraph {
  Graph graph;
  std::vector<VertexSet> vertexLabels;  // the q-clique behind each new vertex
};

// Does S induce a complete subgraph?
bool isClique(const Graph& g, const VertexSet& s);
// Does S induce a complete bipartite (possibly edgeless) subgraph?
bool isBicliqueSet(const Graph& g, const VertexSet& s);

// comp_G(W): vertices adjacent to every vertex of W minus themselves.
VertexSet completeTo(const Graph& g, const VertexSet& w);

// All q-sets inducing complete graphs, lexicographic.
std::vector<VertexSet> enumerateQCliques(const Graph& g, int q);
// All q-sets inducing complete bipartite graphs (edgeless included),
// lexicographic; grown subset-by-subset with a 3-subset biclique check.
std::vector<VertexSet> enumerateQBicliques(const Graph& g, int q);

// Unique bipartition when complete bipartite: edgeless graphs canonicalize
// to (V, empty); otherwise the side holding the smallest vertex comes first.
std::optional<std::pair<VertexSet, VertexSet>> isCompleteBipartite(
    const Graph& g);

InducedSubgraph inducedSubgraph(const Graph& g, const VertexSet& x);

// Disjoint union of a and b plus all edges between them; b's vertices are
// shifted up by a.n().
Graph joinGraphs(const Graph& a, const Graph& b);

// Maximal cliques as a hypergraph (pivoted branch and bound); refuses past
// the clique-count budget.
Hypergraph cliqueHypergraph(const Graph& g, std::uint64_t cliqueBudget = 1'000'000);

// Maximal bicliques as a hypergraph, by a full subset sweep; refuses past
// nCap vertices.
Hypergraph bicliqueHypergraph(const Graph& g, int nCap = 18);

// Vertices are the q-cliques, adjacent when their union is a clique.
PhiGraph phiGraph(const Graph& g, int q);

// First k-clique found, if any.
std::optional<VertexSet> findKClique(const Graph& g, int k);

int cliqueNumber(const Graph& g);
int bicliqueNumber(const Graph& g, int nCap = 18);

// Text format: `n m` then m lines `u v` with u < v, 0-indexed; `#` comments.
Graph parseGraph(std::istream& in);
void writeGraph(std::ostream& out, const Graph& g);

}  // namespace helly
