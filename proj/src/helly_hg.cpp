#include "helly/helly_hg.hpp"

#include <algorithm>
#include <bit>

namespace helly {

namespace {

CoreProvider edgeProvider(const Hypergraph& h) {
  CoreProvider cp;
  cp.universe = h.n();
  cp.query = [&h](const VertexSet& p) -> std::optional<VertexSet> {
    auto idx = restrictTo(h, p);
    if (idx.empty()) return std::nullopt;
    return coreOfEdges(h, idx);
  };
  return cp;
}

std::vector<VertexSet> allQSubsets(int n, int q) {
  std::vector<VertexSet> out;
  forEachSubset(n, q, [&](const std::vector<int>& idx) {
    out.emplace_back(idx.begin(), idx.end());
  });
  return out;
}

Verdict fromEngine(const EngineResult& r, const char* method) {
  if (r.status == EngineStatus::ResourceLimit)
    throw ResourceError("basis engine: leaf budget or deadline exceeded");
  if (r.status == EngineStatus::Violated)
    return failsVerdict(method, *r.witness);
  return holdsVerdict(method);
}

// Cores of all nonempty edge subsets, as bit rows over the vertices.
std::vector<std::vector<std::uint64_t>> maskCores(const Hypergraph& h) {
  const int words = (h.n() + 63) / 64;
  const std::size_t total = std::size_t{1} << h.m();
  std::vector<std::vector<std::uint64_t>> core(total,
                                               std::vector<std::uint64_t>(words));
  for (int i = 0; i < h.m(); ++i)
    for (int v : h.edge(i)) core[std::size_t{1} << i][v / 64] |= 1ULL << (v % 64);
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const std::size_t low = mask & (~mask + 1);
    for (int w = 0; w < words; ++w)
      core[mask][w] = core[mask ^ low][w] & core[low][w];
  }
  return core;
}

int bitCount(const std::vector<std::uint64_t>& row) {
  int c = 0;
  for (auto w : row) c += std::popcount(w);
  return c;
}

}  // namespace

Verdict isPQHelly(const Hypergraph& h, int p, int q, const EngineOptions& options) {
  if (p < 1 || q < 1) throw std::invalid_argument("isPQHelly: p,q must be >= 1");
  if (q > h.rank()) return holdsVerdict("rank-shortcut");
  if (p == 1) {
    std::vector<int> qplus;
    for (int i = 0; i < h.m(); ++i)
      if (static_cast<int>(h.edge(i).size()) >= q) qplus.push_back(i);
    if (qplus.empty()) return holdsVerdict("qplus-core");
    VertexSet c = coreOfEdges(h, qplus);
    if (static_cast<int>(c.size()) >= q) return holdsVerdict("qplus-core");
    return failsVerdict("qplus-core",
                        SubfamilyWitness{std::move(qplus), std::move(c)});
  }
  auto provider = edgeProvider(h);
  return fromEngine(runPlain(allQSubsets(h.n(), q), p, q, provider, options),
                    "basis-engine");
}

Verdict isHereditaryPQHelly(const Hypergraph& h, int p, int q,
                            const EngineOptions& options) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isHereditaryPQHelly: p,q must be >= 1");
  if (p == 1) {
    // Hereditary (1,q)-Helly iff the q+-edges are pairwise comparable: any
    // two incomparable q+-edges A,B leave an induced subhypergraph whose two
    // q-sized traces meet in fewer than q vertices, and a chain keeps a
    // q+-core in every induced subhypergraph.
    std::vector<int> qplus;
    for (int i = 0; i < h.m(); ++i)
      if (static_cast<int>(h.edge(i).size()) >= q) qplus.push_back(i);
    std::sort(qplus.begin(), qplus.end(), [&](int a, int b) {
      return h.edge(a).size() < h.edge(b).size();
    });
    for (std::size_t i = 1; i < qplus.size(); ++i) {
      if (!isSubset(h.edge(qplus[i - 1]), h.edge(qplus[i]))) {
        // sizes are nondecreasing, so this pair is incomparable
        std::vector<int> pair{qplus[i - 1], qplus[i]};
        VertexSet c = coreOfEdges(h, pair);
        return failsVerdict("qplus-chain",
                            SubfamilyWitness{std::move(pair), std::move(c)});
      }
    }
    return holdsVerdict("qplus-chain");
  }
  auto provider = edgeProvider(h);
  return fromEngine(
      runHereditary(allQSubsets(h.n(), q), p, q, provider, options),
      "basis-engine");
}

Verdict isHereditaryByEdgeSubfamilies(const Hypergraph& h, int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isHereditaryByEdgeSubfamilies: p,q >= 1");
  if (h.m() <= p) return holdsVerdict("edge-subfamilies");
  Verdict out = holdsVerdict("edge-subfamilies");
  forEachSubset(h.m(), p + 1, [&](const std::vector<int>& idx) {
    if (!out.holds) return;
    std::vector<VertexSet> fam;
    fam.reserve(idx.size());
    for (int i : idx) fam.push_back(h.edge(i));
    if (!isPQIntersecting(fam, p, q)) return;
    VertexSet whole = core(fam);
    // A <=p-subfamily with the same core exists iff some leave-one-out
    // p-subfamily matches: cores only shrink as sets are added.
    for (std::size_t omit = 0; omit < fam.size(); ++omit) {
      VertexSet c;
      bool first = true;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (j == omit) continue;
        if (first) {
          c = fam[j];
          first = false;
        } else {
          setIntersectInPlace(c, fam[j]);
        }
      }
      if (c == whole) return;
    }
    out = failsVerdict("edge-subfamilies",
                       SubfamilyWitness{idx, std::move(whole)});
  });
  return out;
}

Verdict isStrongPQHelly(const Hypergraph& h, int p, int q, int mCap) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isStrongPQHelly: p,q must be >= 1");
  if (h.m() > mCap)
    throw ResourceError("isStrongPQHelly: edge count exceeds the cap");
  const int m = h.m();
  if (m == 0) return holdsVerdict("strong-definitional");
  auto core = maskCores(h);
  const std::size_t total = std::size_t{1} << m;
  // bad[S]: some nonempty subfamily of S with <=p edges has core below q
  std::vector<char> bad(total, 0);
  for (std::size_t mask = 1; mask < total; ++mask)
    bad[mask] = std::popcount(mask) <= p && bitCount(core[mask]) < q;
  for (int i = 0; i < m; ++i)
    for (std::size_t mask = 1; mask < total; ++mask)
      if (mask >> i & 1) bad[mask] |= bad[mask ^ (std::size_t{1} << i)];
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (bad[mask]) continue;  // not (p,q)-intersecting
    const int size = std::popcount(mask);
    if (size <= p) continue;  // is its own small subfamily
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) members.push_back(i);
    bool matched = false;
    forEachSubset(size, p, [&](const std::vector<int>& pick) {
      if (matched) return;
      std::size_t sub = 0;
      for (int i : pick) sub |= std::size_t{1} << members[i];
      if (core[sub] == core[mask]) matched = true;
    });
    if (!matched) {
      VertexSet c;
      for (int v = 0; v < h.n(); ++v)
        if (core[mask][v / 64] >> (v % 64) & 1) c.push_back(v);
      return failsVerdict("strong-definitional",
                          SubfamilyWitness{std::move(members), std::move(c)});
    }
  }
  return holdsVerdict("strong-definitional");
}

JSearchResult containsJPartialSub(const Hypergraph& h, int p, int q,
                                  std::uint64_t subfamilyBudget) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("containsJPartialSub: p,q must be >= 1");
  JSearchResult res;
  if (h.m() <= p) return res;
  if (binomialSat(h.m(), p + 1) > subfamilyBudget) {
    res.indeterminate = true;
    return res;
  }
  forEachSubset(h.m(), p + 1, [&](const std::vector<int>& idx) {
    if (res.embedding) return;
    std::vector<VertexSet> fam;
    for (int i : idx) fam.push_back(h.edge(i));
    VertexSet whole = core(fam);
    // leave-one-out cores minus the omitted edge; T_i must come from these
    std::vector<VertexSet> cands(fam.size());
    int d = h.n() + 1;
    for (std::size_t omit = 0; omit < fam.size(); ++omit) {
      VertexSet c;
      bool first = true;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (j == omit) continue;
        if (first) {
          c = fam[j];
          first = false;
        } else {
          setIntersectInPlace(c, fam[j]);
        }
      }
      cands[omit] = setDifference(c, fam[omit]);
      d = std::min(d, static_cast<int>(cands[omit].size()));
    }
    if (d < 1) return;
    const int s = std::max(0, q - d);
    if (s > q - 1 || s > static_cast<int>(whole.size())) return;
    JEmbedding emb;
    emb.p = p;
    emb.q = q;
    emb.s = s;
    emb.edgeIdx = idx;
    for (auto& c : cands)
      emb.tSets.emplace_back(c.begin(), c.begin() + (q - s));
    emb.zSet.assign(whole.begin(), whole.begin() + s);
    res.embedding = std::move(emb);
  });
  return res;
}

}  // namespace helly
