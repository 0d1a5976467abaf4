#pragma once

#include <cstdint>
#include <optional>

#include "helly/basis_engine.hpp"
#include "helly/hypergraph.hpp"
#include "helly/verdict.hpp"

namespace helly {

// Every nonempty (p,q)-intersecting subfamily of edges has a q+-core.
// p=1: the q+-edges must be empty or share q vertices. p>=2: backtracking
// over bases drawn from all q-subsets of the vertex set.
Verdict isPQHelly(const Hypergraph& h, int p, int q,
                  const EngineOptions& options = {});

// Every vertex-induced subhypergraph is (p,q)-Helly. p=1: the q+-edges must
// form a chain under inclusion (see the note in the implementation). p>=2:
// the starlike-basis backtracking.
Verdict isHereditaryPQHelly(const Hypergraph& h, int p, int q,
                            const EngineOptions& options = {});

// Independent polynomial recognizer for the hereditary property: every
// (p,q)-intersecting (p+1)-subfamily must have a p-subfamily with the same
// core.
Verdict isHereditaryByEdgeSubfamilies(const Hypergraph& h, int p, int q);

// Definitional check over all partial hypergraphs: every nonempty
// (p,q)-intersecting one has a nonempty <=p-subfamily with equal core.
// Exponential; refuses beyond mCap edges. Coincides with the hereditary
// property.
Verdict isStrongPQHelly(const Hypergraph& h, int p, int q, int mCap = 18);

struct JSearchResult {
  std::optional<JEmbedding> embedding;
  bool indeterminate = false;
};

// Searches for a partial subhypergraph isomorphic to the forbidden
// J_{p+1,q,s} for some s in 0..q-1. For a fixed (p+1)-subfamily with
// leave-one-out cores C_i (minus the omitted edge) an embedding exists iff
// min |C_i| >= 1 and q - min |C_i| <= |core|; T_i and Z are then read off
// directly.
JSearchResult containsJPartialSub(const Hypergraph& h, int p, int q,
                                  std::uint64_t subfamilyBudget = 10'000'000ULL);

}  // namespace helly
