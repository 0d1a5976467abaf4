#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "helly/sets.hpp"

namespace helly {

/// A violating basis: p+1 q-sets whose nontrivial (starlike, when
/// hereditary) configuration has a core that is too small (or, for the
/// hereditary check, a core disjoint from the exterior).
struct BasisWitness {
  std::vector<VertexSet> members;
  std::vector<VertexSet> supportCores;  // core over the edges containing each support set
  VertexSet core;                       // intersection of the support cores
  bool hereditary = false;
  VertexSet ext;                        // exterior, filled for hereditary witnesses
};

/// A violating (p+1)-edge subfamily: (p,q)-intersecting but no nonempty
/// <=p-subfamily matches its core.
struct SubfamilyWitness {
  std::vector<int> edgeIdx;
  VertexSet core;
};

/// An embedded forbidden partial subhypergraph: edge i restricted to the
/// listed vertices equals U - T_i.
struct JEmbedding {
  int p = 0, q = 0, s = 0;
  std::vector<int> edgeIdx;       // p+1 host edges
  std::vector<VertexSet> tSets;   // host vertices playing T_1..T_{p+1}
  VertexSet zSet;                 // host vertices playing Z
};

using Witness = std::variant<BasisWitness, SubfamilyWitness, JEmbedding>;

struct Verdict {
  bool holds = true;
  std::string method;
  std::optional<Witness> witness;
};

/// Thrown when a recognizer refuses to run past its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Verdict holdsVerdict(std::string method) {
  return Verdict{true, std::move(method), std::nullopt};
}

inline Verdict failsVerdict(std::string method, Witness w) {
  return Verdict{false, std::move(method), std::move(w)};
}

}  // namespace helly
