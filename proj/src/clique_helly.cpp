#include "helly/clique_helly.hpp"

#include <algorithm>
#include <functional>

namespace helly {

std::optional<VertexSet> cliqueFamilyCore(const Graph& g, const VertexSet& p) {
  if (!isClique(g, p)) return std::nullopt;  // no maximal clique contains P
  return completeTo(g, completeTo(g, p));
}

CoreProvider cliqueProvider(const Graph& g) {
  CoreProvider cp;
  cp.universe = g.n();
  cp.query = [&g](const VertexSet& p) { return cliqueFamilyCore(g, p); };
  return cp;
}

namespace {

Verdict fromEngine(const EngineResult& r, const char* method) {
  if (r.status == EngineStatus::ResourceLimit)
    throw ResourceError("basis engine: leaf budget or deadline exceeded");
  if (r.status == EngineStatus::Violated)
    return failsVerdict(method, *r.witness);
  return holdsVerdict(method);
}

// Shrinking chain of q-set cores whose total intersection is below q.
BasisWitness greedyCoreWitness(const std::vector<VertexSet>& qsets,
                               const std::vector<VertexSet>& cores) {
  BasisWitness w;
  VertexSet c;
  for (std::size_t i = 0; i < qsets.size(); ++i) {
    if (w.members.empty()) {
      c = cores[i];
      w.members.push_back(qsets[i]);
      w.supportCores.push_back(cores[i]);
      continue;
    }
    VertexSet next = setIntersect(c, cores[i]);
    if (next != c) {
      w.members.push_back(qsets[i]);
      w.supportCores.push_back(cores[i]);
      c = std::move(next);
    }
  }
  w.core = std::move(c);
  return w;
}

}  // namespace

Verdict isPQCliqueHelly(const Graph& g, int p, int q,
                        const EngineOptions& options) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isPQCliqueHelly: p,q must be >= 1");
  auto qcliques = enumerateQCliques(g, q);
  if (p == 1) {
    // q=1 reduces to the existence of a universal vertex: the singleton
    // cores below intersect exactly in the universal vertices
    if (q == 1 && g.n() > 0) {
      bool universal = false;
      for (int v = 0; v < g.n() && !universal; ++v)
        universal = g.degree(v) == g.n() - 1;
      if (universal) return holdsVerdict("universal-vertex");
    }
    if (qcliques.empty()) return holdsVerdict("qclique-core");
    std::vector<VertexSet> cores;
    cores.reserve(qcliques.size());
    VertexSet total;
    for (std::size_t i = 0; i < qcliques.size(); ++i) {
      cores.push_back(*cliqueFamilyCore(g, qcliques[i]));
      total = i == 0 ? cores[0] : setIntersect(total, cores[i]);
    }
    if (static_cast<int>(total.size()) >= q) return holdsVerdict("qclique-core");
    return failsVerdict("qclique-core", greedyCoreWitness(qcliques, cores));
  }
  auto provider = cliqueProvider(g);
  return fromEngine(runPlain(std::move(qcliques), p, q, provider, options),
                    "basis-engine");
}

Verdict isHereditaryPQCliqueHelly(const Graph& g, int p, int q,
                                  const EngineOptions& options) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isHereditaryPQCliqueHelly: p,q must be >= 1");
  if (p == 1) {
    auto qcliques = enumerateQCliques(g, q);
    VertexSet u;
    for (const auto& c : qcliques) u = setUnion(u, c);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (!g.adjacent(u[i], u[j])) {
          BasisWitness w;
          w.hereditary = true;
          w.ext = {u[i], u[j]};
          for (const auto& c : qcliques)
            if (setContains(c, u[i])) {
              w.members.push_back(c);
              break;
            }
          for (const auto& c : qcliques)
            if (setContains(c, u[j])) {
              w.members.push_back(c);
              break;
            }
          return failsVerdict("qclique-union", std::move(w));
        }
    return holdsVerdict("qclique-union");
  }
  auto provider = cliqueProvider(g);
  return fromEngine(
      runHereditary(enumerateQCliques(g, q), p, q, provider, options),
      "basis-engine");
}

Expansion buildExpansion(const Graph& g, const std::vector<VertexSet>& members) {
  if (members.size() < 2)
    throw std::invalid_argument("buildExpansion: need at least two members");
  const int p = static_cast<int>(members.size()) - 1;
  const std::size_t q = members[0].size();
  for (const auto& m : members) {
    if (m.size() != q || q == 0)
      throw std::invalid_argument("buildExpansion: members must be equal-size q-sets");
    if (!isClique(g, m))
      throw std::invalid_argument("buildExpansion: member is not a clique");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j])
        throw std::invalid_argument("buildExpansion: members must be distinct");
  for (std::size_t omit = 0; omit < members.size(); ++omit) {
    VertexSet uni;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != omit) uni = setUnion(uni, members[j]);
    if (!isClique(g, uni))
      throw std::invalid_argument(
          "buildExpansion: some union of p members is not a clique");
  }
  Expansion e;
  e.members = members;
  for (int v = 0; v < g.n(); ++v) {
    int completeCount = 0;
    for (const auto& m : members) {
      bool comp = true;
      for (int u : m)
        if (u != v && !g.adjacent(u, v)) {
          comp = false;
          break;
        }
      if (comp) ++completeCount;
    }
    if (completeCount >= p) e.vertices.push_back(v);
  }
  e.graph = inducedSubgraph(g, e.vertices).graph;
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    bool uni = true;
    for (std::size_t j = 0; j < e.vertices.size() && uni; ++j)
      if (i != j && !g.adjacent(e.vertices[i], e.vertices[j])) uni = false;
    if (uni) e.universal.push_back(e.vertices[i]);
  }
  return e;
}

OcularSpec buildOcular(int p, int q, int s, const std::optional<Graph>& wGraph) {
  if (p < 1 || q < 1 || s < 0 || s >= q)
    throw std::invalid_argument("buildOcular: need p,q >= 1 and 0 <= s < q");
  if (wGraph && p == 1)
    throw std::invalid_argument("buildOcular: no W part exists when p=1");
  const int bs = q - s;
  const int blocks = p + 1;
  const int usize = blocks * bs + s;
  OcularSpec spec;
  spec.p = p;
  spec.q = q;
  spec.s = s;
  for (int i = 0; i < blocks; ++i) {
    VertexSet t(bs);
    for (int j = 0; j < bs; ++j) t[j] = i * bs + j;
    spec.tSets.push_back(std::move(t));
  }
  for (int v = blocks * bs; v < usize; ++v) spec.zSet.push_back(v);
  std::vector<std::pair<int, int>> edges;
  if (p == 1) {
    // the two parts are cliques, mutually anticomplete, both joined to Z
    auto addCliqueEdges = [&](const VertexSet& c) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          edges.emplace_back(c[i], c[j]);
    };
    addCliqueEdges(spec.tSets[0]);
    addCliqueEdges(spec.tSets[1]);
    addCliqueEdges(spec.zSet);
    for (const auto& t : spec.tSets)
      for (int u : t)
        for (int z : spec.zSet) edges.emplace_back(u, z);
    spec.graph = Graph(usize, edges);
    return spec;
  }
  for (int i = 0; i < usize; ++i)
    for (int j = i + 1; j < usize; ++j) edges.emplace_back(i, j);  // U clique
  if (wGraph && wGraph->n() != blocks)
    throw std::invalid_argument("buildOcular: wGraph needs p+1 vertices");
  for (int i = 0; i < blocks; ++i) {
    const int w = usize + i;
    spec.wSet.push_back(w);
    for (int u = 0; u < usize; ++u)
      if (!setContains(spec.tSets[i], u)) edges.emplace_back(u, w);
  }
  if (wGraph)
    for (auto [a, b] : wGraph->edgeList())
      edges.emplace_back(usize + a, usize + b);
  spec.graph = Graph(usize + blocks, edges);
  return spec;
}

namespace {

// vertex complete to all of `a` (not counting itself)
bool completeToSet(const Graph& g, int v, const VertexSet& a) {
  for (int u : a)
    if (u != v && !g.adjacent(u, v)) return false;
  return true;
}

bool anticompleteToSet(const Graph& g, int v, const VertexSet& a) {
  for (int u : a)
    if (u != v && g.adjacent(u, v)) return false;
  return true;
}

// all unordered partitions of `rest` into equal blocks of size bs, first
// block anchored at the minimum remaining vertex
bool partitionBlocks(const VertexSet& rest, int bs,
                     std::vector<VertexSet>& blocks,
                     const std::function<bool(const std::vector<VertexSet>&)>& visit) {
  if (rest.empty()) return visit(blocks);
  const int anchor = rest[0];
  VertexSet tail(rest.begin() + 1, rest.end());
  bool stop = false;
  forEachSubset(static_cast<int>(tail.size()), bs - 1,
                [&](const std::vector<int>& idx) {
                  if (stop) return;
                  VertexSet block{anchor};
                  for (int i : idx) block.push_back(tail[i]);
                  VertexSet next = setDifference(rest, block);
                  blocks.push_back(std::move(block));
                  stop = partitionBlocks(next, bs, blocks, visit);
                  blocks.pop_back();
                });
  return stop;
}

}  // namespace

OcularSearchResult findInducedOcular(const Graph& g, int p, int q,
                                     std::uint64_t budget) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("findInducedOcular: p,q must be >= 1");
  OcularSearchResult res;
  std::uint64_t used = 0;
  for (int s = 0; s <= q - 1 && !res.embedding; ++s) {
    const int bs = q - s;
    const int usize = (p + 1) * bs + s;
    if (usize > g.n()) continue;
    std::vector<VertexSet> uCands;
    if (p == 1) {
      forEachSubset(g.n(), usize, [&](const std::vector<int>& idx) {
        uCands.emplace_back(idx.begin(), idx.end());
      });
    } else {
      uCands = enumerateQCliques(g, usize);  // clause for p>=2 needs U complete
    }
    for (const auto& u : uCands) {
      if (res.embedding || res.indeterminate) break;
      forEachSubset(static_cast<int>(u.size()), s, [&](const std::vector<int>& zi) {
        if (res.embedding || res.indeterminate) return;
        VertexSet z;
        for (int i : zi) z.push_back(u[i]);
        VertexSet rest = setDifference(u, z);
        std::vector<VertexSet> blocks;
        partitionBlocks(rest, bs, blocks, [&](const std::vector<VertexSet>& ts) {
          if (++used > budget) {
            res.indeterminate = true;
            return true;
          }
          if (p == 1) {
            for (int i = 0; i < 2; ++i) {
              VertexSet others = setDifference(u, ts[i]);
              if (!isClique(g, others)) return false;
              for (int v : ts[i])
                if (completeToSet(g, v, others)) return false;
            }
            res.embedding = OcularEmbedding{s, ts, z, {}};
            return true;
          }
          VertexSet ws;
          for (const auto& t : ts) {
            VertexSet others = setDifference(u, t);
            int found = -1;
            for (int w = 0; w < g.n() && found < 0; ++w) {
              if (setContains(u, w)) continue;
              if (completeToSet(g, w, others) && anticompleteToSet(g, w, t))
                found = w;
            }
            if (found < 0) return false;
            ws.push_back(found);  // candidate pools are disjoint across parts
          }
          res.embedding = OcularEmbedding{s, ts, z, sortedUnique(ws)};
          return true;
        });
      });
    }
    if (res.indeterminate) break;
  }
  return res;
}

}  // namespace helly
