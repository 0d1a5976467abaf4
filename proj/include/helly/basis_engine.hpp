#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "helly/verdict.hpp"

namespace helly {

/// Answers queries about the implicit family H_P (edges "containing" P in
/// whatever sense the recognizer needs): nullopt when the family is empty,
/// otherwise its core. Must be antitone: P subset of P' implies the family
/// for P' is a subfamily of the one for P.
struct CoreProvider {
  int universe = 0;  // vertex count of the underlying instance
  std::function<std::optional<VertexSet>(const VertexSet&)> query;
};

struct EngineOptions {
  // Refuse to run when C(N,p) exceeds this many first-trie leaves.
  std::uint64_t leafBudget = 1'000'000'000ULL;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class EngineStatus { Holds, Violated, ResourceLimit };

struct EngineStats {
  std::uint64_t trieNodes = 0;   // nodes of the explicit first trie, root included
  std::uint64_t trieLeaves = 0;  // cached p-combinations
  std::uint64_t basesChecked = 0;
  std::uint64_t providerCalls = 0;
};

struct EngineResult {
  EngineStatus status = EngineStatus::Holds;
  std::optional<BasisWitness> witness;
  EngineStats stats;
};

/// Backtracking over all (p+1)-combinations of the q-set list. An explicit
/// trie caches, for every p-combination, emptiness and core of the family of
/// edges containing its union; a second trie of (p+1)-combinations is walked
/// implicitly with a bank of p+2 cursors so every support-set core is a cache
/// lookup. Violation reported when a nontrivial basis has core below q
/// (plain), or a nontrivial starlike basis has core disjoint from its
/// exterior (hereditary).
EngineResult runPlain(std::vector<VertexSet> qsets, int p, int q,
                      const CoreProvider& provider,
                      const EngineOptions& options = {});
EngineResult runHereditary(std::vector<VertexSet> qsets, int p, int q,
                           const CoreProvider& provider,
                           const EngineOptions& options = {});

}  // namespace helly
