#include "helly/basis_engine.hpp"

#include <algorithm>
#include <cstddef>

namespace helly {

namespace {

// Explicit trie over the index tuples (i1 < ... < ik), k <= p, keeping only
// tuples extendable to a full p-combination (0-indexed: i_k <= N-p+k-1).
// Children of a node are allocated contiguously, so the sibling with the
// next letter is the next node in the vector.
struct Trie {
  struct Node {
    int32_t letter;
    int64_t parent;
    int64_t firstChild;
  };
  std::vector<Node> nodes;
  std::vector<char> emptyFlag;   // family for the node's union is empty
  std::vector<int64_t> leafOff;  // per leaf: offset into coreArena
  std::vector<int32_t> leafLen;  // per leaf: core length (-1 when empty)
  std::vector<int> coreArena;
  int64_t leafBegin = 0;

  bool empty(int64_t v) const { return emptyFlag[static_cast<std::size_t>(v)] != 0; }
  bool leafEmpty(int64_t v) const { return leafLen[v - leafBegin] < 0; }
  const int* leafCore(int64_t v, int& len) const {
    len = leafLen[v - leafBegin];
    return coreArena.data() + leafOff[v - leafBegin];
  }
};

bool pastDeadline(const EngineOptions& opt) {
  return opt.deadline && std::chrono::steady_clock::now() > *opt.deadline;
}

}  // namespace

static EngineResult runEngine(std::vector<VertexSet> qsets, int p, int q,
                              const CoreProvider& provider, bool hereditary,
                              const EngineOptions& opt) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("basis engine: p,q must be >= 1");
  std::sort(qsets.begin(), qsets.end());
  qsets.erase(std::unique(qsets.begin(), qsets.end()), qsets.end());
  const int64_t n = static_cast<int64_t>(qsets.size());

  EngineResult res;
  if (n <= p) return res;  // fewer than p+1 distinct q-sets: nothing to check

  if (binomialSat(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p)) >
      opt.leafBudget) {
    res.status = EngineStatus::ResourceLimit;
    return res;
  }

  // ---- build the explicit trie with cached emptiness and leaf cores ----
  Trie t;
  t.nodes.push_back({-1, -1, -1});
  std::vector<int64_t> depthBegin(p + 2, 0);
  for (int d = 1; d <= p; ++d) {
    depthBegin[d] = static_cast<int64_t>(t.nodes.size());
    const int32_t maxLetter = static_cast<int32_t>(n) - p + d - 1;
    for (int64_t v = depthBegin[d - 1]; v < depthBegin[d]; ++v) {
      t.nodes[v].firstChild = static_cast<int64_t>(t.nodes.size());
      for (int32_t l = t.nodes[v].letter + 1; l <= maxLetter; ++l)
        t.nodes.push_back({l, v, -1});
    }
  }
  depthBegin[p + 1] = static_cast<int64_t>(t.nodes.size());
  t.leafBegin = depthBegin[p];
  t.emptyFlag.assign(t.nodes.size(), 0);
  const int64_t leafCount = depthBegin[p + 1] - depthBegin[p];
  t.leafOff.assign(leafCount, 0);
  t.leafLen.assign(leafCount, -1);

  VertexSet pathUnion;
  for (int64_t v = 1; v < static_cast<int64_t>(t.nodes.size()); ++v) {
    const bool leaf = v >= t.leafBegin;
    if (t.empty(t.nodes[v].parent)) {
      t.emptyFlag[v] = 1;
      continue;
    }
    if ((v & 1023) == 0 && pastDeadline(opt)) {
      res.status = EngineStatus::ResourceLimit;
      return res;
    }
    pathUnion.clear();
    for (int64_t w = v; w != 0; w = t.nodes[w].parent)
      pathUnion = setUnion(pathUnion, qsets[t.nodes[w].letter]);
    auto core = provider.query(pathUnion);
    ++res.stats.providerCalls;
    if (!core) {
      t.emptyFlag[v] = 1;
      continue;
    }
    if (leaf) {
      t.leafOff[v - t.leafBegin] = static_cast<int64_t>(t.coreArena.size());
      t.leafLen[v - t.leafBegin] = static_cast<int32_t>(core->size());
      t.coreArena.insert(t.coreArena.end(), core->begin(), core->end());
    }
  }
  res.stats.trieNodes = t.nodes.size();
  res.stats.trieLeaves = static_cast<std::uint64_t>(leafCount);

  // ---- implicit DFS over (p+1)-combinations with the cursor bank ----
  // At depth k with letters j_1..j_k: I[0] is the trie node of the first
  // min(k,p) letters; I[l] (1<=l<=k) the node of the tuple omitting j_l.
  std::vector<int64_t> bank(p + 2, 0);
  std::vector<int32_t> j(p + 2, -1);
  std::vector<int> cnt;       // hereditary: occurrence count per vertex
  int inBetween = 0;          // hereditary: #vertices with 2 <= cnt <= p
  if (hereditary) cnt.assign(provider.universe, 0);

  auto pushSet = [&](int32_t letter) {
    if (!hereditary) return;
    for (int v : qsets[letter]) {
      const int c = ++cnt[v];
      if (p >= 2) {
        if (c == 2) ++inBetween;
        if (c == p + 1) --inBetween;
      }
    }
  };
  auto popSet = [&](int32_t letter) {
    if (!hereditary) return;
    for (int v : qsets[letter]) {
      const int c = cnt[v]--;
      if (p >= 2) {
        if (c == p + 1) ++inBetween;
        if (c == 2) --inBetween;
      }
    }
  };

  int k = 0;
  std::uint64_t steps = 0;
  VertexSet coreBuf;

  auto checkLeaf = [&]() -> bool {  // true when a violation was found
    ++res.stats.basesChecked;
    for (int l = 1; l <= p + 1; ++l)
      if (t.leafEmpty(bank[l])) return false;  // trivial basis
    if (hereditary && inBetween != 0) return false;  // not starlike
    int len;
    const int* c0 = t.leafCore(bank[1], len);
    coreBuf.assign(c0, c0 + len);
    for (int l = 2; l <= p + 1 && !coreBuf.empty(); ++l) {
      const int* cl = t.leafCore(bank[l], len);
      VertexSet other(cl, cl + len);
      setIntersectInPlace(coreBuf, other);
    }
    bool bad;
    if (hereditary) {
      bad = true;
      for (int v : coreBuf)
        if (cnt[v] == 1) {  // core meets the exterior
          bad = false;
          break;
        }
    } else {
      bad = static_cast<int>(coreBuf.size()) < q;
    }
    if (!bad) return false;
    BasisWitness w;
    w.hereditary = hereditary;
    for (int l = 1; l <= p + 1; ++l) {
      w.members.push_back(qsets[j[l]]);
      const int* cl = t.leafCore(bank[l], len);
      w.supportCores.emplace_back(cl, cl + len);
    }
    w.core = coreBuf;
    if (hereditary) {
      VertexSet uni;
      for (const auto& m : w.members) uni = setUnion(uni, m);
      for (int v : uni)
        if (cnt[v] == 1) w.ext.push_back(v);
    }
    res.witness = std::move(w);
    res.status = EngineStatus::Violated;
    return true;
  };

  while (true) {
    if ((++steps & 4095) == 0 && pastDeadline(opt)) {
      res.status = EngineStatus::ResourceLimit;
      return res;
    }
    // try to descend to the first child
    const int32_t nj = (k == 0) ? 0 : j[k] + 1;
    const bool pruned = k >= 1 && k <= p && t.empty(bank[0]);
    if (k < p + 1 && !pruned && nj <= static_cast<int32_t>(n) - p + k - 1) {
      const int64_t oldI0 = bank[0];
      ++k;
      for (int l = 1; l <= k - 2; ++l) bank[l] = t.nodes[bank[l]].firstChild;
      if (k - 1 >= 1) bank[k - 1] = oldI0 + 1;  // sibling with the next letter
      bank[k] = oldI0;
      if (k <= p) bank[0] = t.nodes[oldI0].firstChild;
      j[k] = nj;
      pushSet(nj);
      if (k == p + 1 && checkLeaf()) return res;
      continue;
    }
    // backtrack until a next sibling exists
    while (k > 0 && j[k] + 1 > static_cast<int32_t>(n) - p + k - 2) {
      popSet(j[k]);
      for (int l = 1; l <= k - 1; ++l) bank[l] = t.nodes[bank[l]].parent;
      if (k <= p) bank[0] = t.nodes[bank[0]].parent;
      j[k] = -1;
      --k;
    }
    if (k == 0) break;
    popSet(j[k]);
    ++j[k];
    pushSet(j[k]);
    for (int l = 1; l <= k - 1; ++l) ++bank[l];  // siblings are contiguous
    if (k <= p) ++bank[0];
    if (k == p + 1 && checkLeaf()) return res;
  }
  return res;
}

EngineResult runPlain(std::vector<VertexSet> qsets, int p, int q,
                      const CoreProvider& provider, const EngineOptions& options) {
  return runEngine(std::move(qsets), p, q, provider, false, options);
}

EngineResult runHereditary(std::vector<VertexSet> qsets, int p, int q,
                           const CoreProvider& provider,
                           const EngineOptions& options) {
  return runEngine(std::move(qsets), p, q, provider, true, options);
}

}  // namespace helly
