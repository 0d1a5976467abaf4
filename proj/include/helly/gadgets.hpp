#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "helly/graph.hpp"
#include "helly/hypergraph.hpp"

namespace helly {

/// 3,4-SAT: exactly three literals per clause, each variable in at most
/// four clauses, no clause with a literal and its negation. Literals are
/// signed 1-indexed variable numbers.
struct Sat34Formula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws invalid_argument when the 3,4-SAT invariants are broken.
void checkSat34(const Sat34Formula& f);

// Text format: `nv m` then m lines of 3 signed 1-indexed literals; `#`
// starts a comment line.
Sat34Formula parseSat34(std::istream& in);
void writeSat34(std::ostream& out, const Sat34Formula& f);

/// A hardness instance: the graph, the parameters it should be tested at,
/// and a human-readable role per vertex.
struct SatGadget {
  Graph graph;
  int p = 0, q = 0;
  std::vector<std::string> roles;
};

// Formula with m clauses to a 4m+q-1 vertex graph tested at p = m-1:
// a clause clique Y, one triangle U_i per clause with edges across
// triangles exactly between negated literals, and a stable (q-1)-set Q
// complete to U. Satisfiable iff the graph is not (p,q)-biclique-Helly
// (proved for m >= 7; smaller m only behind allowSmall).
SatGadget satToBicliqueGadgetP(const Sat34Formula& f, int q,
                               bool allowSmall = false);

// Formula with m clauses to a (3m+2)(p+1) vertex graph tested at
// q = m(p+1)+1: a clique X and stable Y (sizes p+1) joined by a perfect
// anti-matching, and 3m false-twin blocks U_{i,a} of size p+1 complete
// across clauses exactly between negated literals. Satisfiable iff the
// graph is not (p,q)-biclique-Helly (proved for m >= 6; smaller m only
// behind allowSmall).
SatGadget satToBicliqueGadgetQ(const Sat34Formula& f, int p,
                               bool allowSmall = false);

// Adds q-1 new vertices to the vertex set and to every edge; hereditary
// (p,1)-Helly of the input matches hereditary (p,q)-Helly of the lift.
Hypergraph universalVertexLift(const Hypergraph& h, int q);

// Adds q-1 universal vertices; hereditary (p,1)-clique-Helly of the input
// matches hereditary (p,q)-clique-Helly of the lift.
Graph graphUniversalLift(const Graph& g, int q);

struct JoinGadget {
  Graph graph;
  int q = 0;
  std::vector<std::string> roles;
};

// Join of G with a (p+1)-ocular, tested at q = k+1: G has a k-clique iff
// the join is not hereditary (p,q)-clique-Helly. Requires p >= 2.
JoinGadget cliqueJoinGadget(const Graph& g, int k, int p);

// Desk-scale DPLL; at most 40 variables. assignment[i] is the value of
// variable i+1.
std::optional<std::vector<bool>> solveSat(const Sat34Formula& f);

// Seeded, reproducible generators.
Graph randomGraph(int n, double density, std::uint64_t seed);
Hypergraph randomHypergraph(int n, int m, int maxRank, std::uint64_t seed);
// Rejection-samples clauses until the occurrence bounds hold.
Sat34Formula randomSat34(int variables, int m, std::uint64_t seed);

}  // namespace helly
