#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "helly/sets.hpp"

namespace helly {

/// Hypergraph on dense vertices 0..n-1. The edge family is an ordered
/// multiset: duplicate edges are allowed and removal drops one occurrence.
/// Every vertex must lie in some edge unless the builder is told to accept
/// isolated vertices explicitly.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<VertexSet> edges, bool allowIsolated = false);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[i]; }

  // Sum of edge cardinalities.
  long long totalSize() const;
  // Largest edge cardinality; 0 when there are no edges.
  int rank() const;

  std::vector<int> isolatedVertices() const;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// A (p+1,q)-basis: p+1 pairwise distinct q-sets of vertices.
class Basis {
 public:
  Basis(std::vector<VertexSet> members, int p, int q);

  const std::vector<VertexSet>& members() const { return members_; }
  int p() const { return p_; }
  int q() const { return q_; }

  // Union of all members but the i-th.
  VertexSet supportSet(int i) const;
  std::vector<VertexSet> supportSets() const;

  VertexSet core() const;
  VertexSet unionAll() const;
  // Vertices in some member but not in the core.
  VertexSet ext() const;
  // Every vertex in >= 2 members lies in the core.
  bool starlike() const;
  // Every support set is contained in some edge of H.
  bool nontrivial(const Hypergraph& h) const;

 private:
  std::vector<VertexSet> members_;
  int p_;
  int q_;
};

/// Result of the q-subset lift: the new hypergraph plus, for each new
/// vertex index, the q-set of original vertices it stands for (in
/// lexicographic order).
struct PhiHypergraph {
  Hypergraph hypergraph;
  std::vector<VertexSet> vertexLabels;
};

struct InducedSub {
  Hypergraph hypergraph;
  // oldVertex[i] = original label of new vertex i.
  std::vector<int> oldVertex;
};

struct ForbiddenHypergraph {
  Hypergraph hypergraph;
  int p, q, s;
  std::vector<VertexSet> tSets;
  VertexSet zSet;
};

// Total intersection of a nonempty family. Throws on empty input: the core
// of an empty family is left undefined.
VertexSet core(const std::vector<VertexSet>& family);

// Core over a subset of H's edges given by indices.
VertexSet coreOfEdges(const Hypergraph& h, const std::vector<int>& edgeIdx);

// Partial hypergraph of the edges containing P (H_P). Keeps H's vertex set;
// may have zero edges.
std::vector<int> restrictTo(const Hypergraph& h, const VertexSet& p);

// Edge occurrences containing at least one support set of S (H_S^union).
std::vector<int> unionRestrict(const Hypergraph& h, const Basis& s);

// All q-subsets of S in lexicographic order; empty when |S| < q.
std::vector<VertexSet> phiSets(const VertexSet& s, int q);

// Phi_q(H): vertices are the q-subsets of V(H) contained in some edge,
// indexed lexicographically; one edge phi_q(E) per q+-edge E of H.
PhiHypergraph phiHypergraph(const Hypergraph& h, int q);

// True iff every nonempty subfamily of <= p sets has core of size >= q.
// Only subfamilies of size exactly min(p,|family|) are checked; cores are
// antitone under adding sets so the smaller ones cannot fail alone.
bool isPQIntersecting(const std::vector<VertexSet>& family, int p, int q);

// The forbidden hypergraph J_{p+1,q,s}: (p+1)(q-s)+s vertices, T_i the
// i-th block of q-s vertices, Z the last s, edges V - T_i.
ForbiddenHypergraph buildJ(int p, int q, int s);

// Subhypergraph induced by X: edges intersected with X, empties dropped,
// duplicates kept; vertices relabeled 0..|X|-1.
InducedSub inducedSub(const Hypergraph& h, const VertexSet& x);

// Text format: `n m` then m lines `k v1 ... vk` (strictly increasing,
// 0-indexed); `#` starts a comment line.
Hypergraph parseHypergraph(std::istream& in, bool allowIsolated = false);
void writeHypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace helly
