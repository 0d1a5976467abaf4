#pragma once

#include <optional>

#include "helly/graph.hpp"
#include "helly/hypergraph.hpp"
#include "helly/verdict.hpp"

namespace helly {

/// Hard size caps for the exponential reference checks; anything larger
/// comes back as nullopt (indeterminate) instead of running forever.
struct OracleBudget {
  int maxN = 10;
  int maxM = 14;
};

// Reference check by full enumeration: a subset-sum style sweep over all
// 2^m edge subsets marks the (p,q)-intersecting ones and demands a q+-core
// from each.
std::optional<bool> bruteIsPQHelly(const Hypergraph& h, int p, int q,
                                   const OracleBudget& budget = {});

// Runs the plain reference on every vertex-induced subhypergraph.
std::optional<bool> bruteIsHereditaryPQHelly(const Hypergraph& h, int p, int q,
                                             const OracleBudget& budget = {});

enum class BaseFamily { Clique, Biclique };

// Plain reference on the maximal-clique or maximal-biclique hypergraph.
std::optional<bool> bruteGraphPQHelly(const Graph& g, int p, int q,
                                      BaseFamily family,
                                      const OracleBudget& budget = {});

// For every vertex subset X, plain reference on the maximal clique or
// biclique hypergraph of G[X] (not on subhypergraphs of the whole family).
std::optional<bool> bruteHereditaryGraphPQHelly(const Graph& g, int p, int q,
                                                BaseFamily family,
                                                const OracleBudget& budget = {});

// Each validator recomputes everything a witness claims from scratch and
// accepts only if the witness genuinely certifies failure of the queried
// property on the given instance.
bool validateHypergraphWitness(const Hypergraph& h, int p, int q,
                               bool hereditary, const Witness& w);
bool validateCliqueWitness(const Graph& g, int p, int q, bool hereditary,
                           const Witness& w);
bool validateBicliqueWitness(const Graph& g, int p, int q, bool hereditary,
                             const Witness& w);

}  // namespace helly
