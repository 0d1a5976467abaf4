#include "helly/biclique_helly.hpp"

#include <algorithm>
#include <functional>

namespace helly {

namespace {

// Unique bipartition of a nonempty biclique, in original vertex labels;
// edgeless sets canonicalize to (P, empty), otherwise the side holding the
// smallest vertex comes first.
std::pair<VertexSet, VertexSet> bipartitionOf(const Graph& g, const VertexSet& p) {
  VertexSet x, y;
  bool anyEdge = false;
  std::vector<char> side(p.size(), 0);
  // BFS 2-coloring inside P; validity is the caller's responsibility
  std::vector<int> order;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.assign(1, static_cast<int>(s));
    while (!order.empty()) {
      int i = order.back();
      order.pop_back();
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (static_cast<int>(j) == i || !g.adjacent(p[i], p[j])) continue;
        anyEdge = true;
        if (!seen[j]) {
          seen[j] = 1;
          side[j] = !side[i];
          order.push_back(static_cast<int>(j));
        }
      }
    }
  }
  if (!anyEdge) return {p, {}};
  for (std::size_t i = 0; i < p.size(); ++i)
    (side[i] ? y : x).push_back(p[i]);
  if (!x.empty() && !y.empty() && y[0] < x[0]) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

}  // namespace

LabeledSubgraph bicompletion(const Graph& g, const VertexSet& p) {
  if (p.empty()) throw std::invalid_argument("bicompletion: P must be nonempty");
  if (!isBicliqueSet(g, p))
    throw std::invalid_argument("bicompletion: P is not a biclique");
  auto [x, y] = bipartitionOf(g, p);
  LabeledSubgraph out;
  for (int v = 0; v < g.n(); ++v) {
    if (setContains(p, v)) {
      out.vertices.push_back(v);
      out.labelY.push_back(setContains(y, v));
      continue;
    }
    int adjX = 0, adjY = 0;
    for (int u : x) adjX += g.adjacent(u, v);
    for (int u : y) adjY += g.adjacent(u, v);
    const bool joinX = adjX == 0 && adjY == static_cast<int>(y.size());
    const bool joinY = adjY == 0 && adjX == static_cast<int>(x.size());
    if (joinX && joinY)
      throw std::logic_error("bicompletion: vertex fits both sides");
    if (joinX || joinY) {
      out.vertices.push_back(v);
      out.labelY.push_back(joinY);
    }
  }
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    bool uni = true;
    for (std::size_t j = 0; j < out.vertices.size() && uni; ++j) {
      if (i == j) continue;
      const bool adj = g.adjacent(out.vertices[i], out.vertices[j]);
      const bool diff = out.labelY[i] != out.labelY[j];
      uni = adj == diff;
    }
    if (uni) out.biuniversal.push_back(out.vertices[i]);
  }
  return out;
}

VertexSet bicliqueFamilyCore(const Graph& g, const VertexSet& p) {
  return bicompletion(g, p).biuniversal;
}

CoreProvider bicliqueProvider(const Graph& g) {
  CoreProvider cp;
  cp.universe = g.n();
  cp.query = [&g](const VertexSet& p) -> std::optional<VertexSet> {
    if (!isBicliqueSet(g, p)) return std::nullopt;
    return bicliqueFamilyCore(g, p);
  };
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

// A 3-set spanning one or three edges; exists iff G is not complete
// bipartite.
std::optional<VertexSet> findBadTriple(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c) {
        const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        if (e == 1 || e == 3) return VertexSet{a, b, c};
      }
  return std::nullopt;
}

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

Verdict plainP1(const Graph& g, int q, const char* method) {
  auto qb = enumerateQBicliques(g, q);
  if (qb.empty()) return holdsVerdict(method);
  std::vector<VertexSet> cores;
  cores.reserve(qb.size());
  VertexSet total;
  for (std::size_t i = 0; i < qb.size(); ++i) {
    cores.push_back(bicliqueFamilyCore(g, qb[i]));
    total = i == 0 ? cores[0] : setIntersect(total, cores[i]);
  }
  if (static_cast<int>(total.size()) >= q) return holdsVerdict(method);
  return failsVerdict(method, greedyCoreWitness(qb, cores));
}

}  // namespace

Verdict isPQBicliqueHelly(const Graph& g, int p, int q,
                          const EngineOptions& options) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isPQBicliqueHelly: p,q must be >= 1");
  if (p == 2 && q == 1) {
    if (isCompleteBipartite(g)) return holdsVerdict("complete-bipartite");
    // three singletons from a non-biclique triple: all pairs are bicliques
    // and their cores cannot share a vertex (that would break the parity of
    // bicliques among four vertices)
    auto t = *findBadTriple(g);
    BasisWitness w;
    for (int v : t) w.members.push_back({v});
    for (std::size_t omit = 0; omit < 3; ++omit) {
      VertexSet pair;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != omit) pair.push_back(t[j]);
      w.supportCores.push_back(bicliqueFamilyCore(g, pair));
    }
    w.core = setIntersect(setIntersect(w.supportCores[0], w.supportCores[1]),
                          w.supportCores[2]);
    return failsVerdict("complete-bipartite", std::move(w));
  }
  if (p == 1) {
    if (q <= 2) {
      if (isCompleteBipartite(g)) return holdsVerdict("complete-bipartite");
      Verdict v = plainP1(g, q, "complete-bipartite");
      if (v.holds)
        throw std::logic_error("isPQBicliqueHelly: dispatch disagreement");
      return v;
    }
    return plainP1(g, q, "qbiclique-core");
  }
  auto provider = bicliqueProvider(g);
  return fromEngine(
      runPlain(enumerateQBicliques(g, q), p, q, provider, options),
      "basis-engine");
}

Verdict isHereditaryPQBicliqueHelly(const Graph& g, int p, int q,
                                    const EngineOptions& options) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("isHereditaryPQBicliqueHelly: p,q >= 1");
  if (p == 1) {
    auto qb = enumerateQBicliques(g, q);
    VertexSet u;
    for (const auto& b : qb) u = setUnion(u, b);
    if (isBicliqueSet(g, u)) return holdsVerdict("qbiclique-union");
    auto sub = inducedSubgraph(g, u);
    auto t = *findBadTriple(sub.graph);
    BasisWitness w;
    w.hereditary = true;
    for (int i : t) w.ext.push_back(sub.oldVertex[i]);
    for (int v : w.ext)
      for (const auto& b : qb)
        if (setContains(b, v)) {
          w.members.push_back(b);
          break;
        }
    return failsVerdict("qbiclique-union", std::move(w));
  }
  if (p == 2 && q == 1) {
    if (isCompleteBipartite(g)) return holdsVerdict("complete-bipartite");
    auto provider = bicliqueProvider(g);
    Verdict v = fromEngine(
        runHereditary(enumerateQBicliques(g, q), p, q, provider, options),
        "complete-bipartite");
    if (v.holds)
      throw std::logic_error("isHereditaryPQBicliqueHelly: dispatch disagreement");
    return v;
  }
  auto provider = bicliqueProvider(g);
  return fromEngine(
      runHereditary(enumerateQBicliques(g, q), p, q, provider, options),
      "basis-engine");
}

LabeledSubgraph buildBiexpansion(const Graph& g,
                                 const std::vector<VertexSet>& members) {
  if (members.size() < 3)
    throw std::invalid_argument("buildBiexpansion: needs p >= 2 (three members)");
  const std::size_t q = members[0].size();
  for (const auto& m : members) {
    if (m.size() != q || q == 0)
      throw std::invalid_argument("buildBiexpansion: members must be q-sets");
    if (!isBicliqueSet(g, m))
      throw std::invalid_argument("buildBiexpansion: member is not a biclique");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j])
        throw std::invalid_argument("buildBiexpansion: members must be distinct");
  VertexSet u;
  for (const auto& m : members) u = setUnion(u, m);
  if (!isBicliqueSet(g, u))
    throw std::invalid_argument("buildBiexpansion: the union is not a biclique");
  auto [ux, uy] = bipartitionOf(g, u);

  std::vector<VertexSet> unions;  // leave-one-out unions of p members
  for (std::size_t omit = 0; omit < members.size(); ++omit) {
    VertexSet pu;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != omit) pu = setUnion(pu, members[j]);
    unions.push_back(std::move(pu));
  }

  LabeledSubgraph out;
  for (int v = 0; v < g.n(); ++v) {
    int label = -1;
    for (const auto& pu : unions) {
      VertexSet withV = setUnion(pu, VertexSet{v});
      if (!isBicliqueSet(g, withV)) continue;
      VertexSet a = setIntersect(pu, ux), b = setIntersect(pu, uy);
      bool joinX = true, joinY = true;
      for (int w : a) {
        if (w == v) continue;
        (g.adjacent(w, v) ? joinX : joinY) = false;
      }
      for (int w : b) {
        if (w == v) continue;
        (g.adjacent(w, v) ? joinY : joinX) = false;
      }
      if (joinX == joinY)
        throw std::logic_error("buildBiexpansion: ambiguous side for a vertex");
      const int mine = joinY ? 1 : 0;
      if (label != -1 && label != mine)
        throw std::logic_error("buildBiexpansion: conflicting labels");
      label = mine;
    }
    if (label != -1) {
      out.vertices.push_back(v);
      out.labelY.push_back(static_cast<char>(label));
    }
  }
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    bool uni = true;
    for (std::size_t j = 0; j < out.vertices.size() && uni; ++j) {
      if (i == j) continue;
      const bool adj = g.adjacent(out.vertices[i], out.vertices[j]);
      uni = adj == (out.labelY[i] != out.labelY[j]);
    }
    if (uni) out.biuniversal.push_back(out.vertices[i]);
  }
  return out;
}

BiocularSpec buildBiocular(int p, int q, int s, BiocularVariant variant) {
  if (p < 1 || q < 1 || s < 0 || s >= q)
    throw std::invalid_argument("buildBiocular: need p,q >= 1 and 0 <= s < q");
  if (variant == BiocularVariant::Auto) {
    if (p == 1 && q == 1)
      variant = BiocularVariant::CoP3;
    else if (p == 1 || (p == 2 && s == 0))
      variant = BiocularVariant::MatchingOrTripartite;
    else
      variant = BiocularVariant::Outside;
  }
  BiocularSpec spec;
  spec.p = p;
  spec.q = q;
  spec.s = s;
  const int bs = q - s;
  const int blocks = p + 1;
  const int usize = blocks * bs + s;
  auto fillParts = [&] {
    for (int i = 0; i < blocks; ++i) {
      VertexSet t(bs);
      for (int j = 0; j < bs; ++j) t[j] = i * bs + j;
      spec.tSets.push_back(std::move(t));
    }
    for (int v = blocks * bs; v < usize; ++v) spec.zSet.push_back(v);
  };
  std::vector<std::pair<int, int>> edges;
  switch (variant) {
    case BiocularVariant::CoP3:
    case BiocularVariant::K3: {
      if (p != 1 || q != 1)
        throw std::invalid_argument("buildBiocular: fixed graphs need (p,q)=(1,1)");
      fillParts();
      edges.emplace_back(0, 1);
      if (variant == BiocularVariant::K3) {
        // K3 on three vertices; the third vertex sits outside U
        spec.graph = Graph(3, {{0, 1}, {0, 2}, {1, 2}});
      } else {
        spec.graph = Graph(3, {{0, 1}});
      }
      return spec;
    }
    case BiocularVariant::MatchingOrTripartite: {
      if (p > 2 || (p == 2 && s != 0) || (p == 1 && q == 1))
        throw std::invalid_argument(
            "buildBiocular: this clause needs p=1 (q>=2) or p=2 with s=0");
      fillParts();
      if (p == 1 && s >= 1) {
        // stable parts; T1 complete to T2, Z isolated
        for (int a : spec.tSets[0])
          for (int b : spec.tSets[1]) edges.emplace_back(a, b);
      } else if (p == 1) {
        // perfect matching between the two stable q-sets
        for (int j = 0; j < bs; ++j) edges.emplace_back(j, bs + j);
      } else {
        // complete tripartite on three stable q-sets
        for (int i = 0; i < blocks; ++i)
          for (int j = i + 1; j < blocks; ++j)
            for (int a : spec.tSets[i])
              for (int b : spec.tSets[j]) edges.emplace_back(a, b);
      }
      spec.graph = Graph(usize, edges);
      return spec;
    }
    case BiocularVariant::Outside: {
      if (p < 2 || (p == 2 && q == 1))
        throw std::invalid_argument(
            "buildBiocular: the outside-vertex clause needs p >= 2, (p,q) != (2,1)");
      fillParts();
      for (int i = 0; i < blocks; ++i) {
        const int w = usize + i;
        spec.wSet.push_back(w);
        for (int u = 0; u < usize; ++u)
          if (!setContains(spec.tSets[i], u)) edges.emplace_back(u, w);
      }
      spec.graph = Graph(usize + blocks, edges);
      return spec;
    }
    case BiocularVariant::Auto:
      break;
  }
  throw std::logic_error("buildBiocular: unreachable");
}

namespace {

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

// matches the inside clause: every U-T_i a biclique, no v in T_i keeps it one
bool insideClause(const Graph& g, const VertexSet& u,
                  const std::vector<VertexSet>& ts) {
  for (const auto& t : ts) {
    VertexSet others = setDifference(u, t);
    if (!isBicliqueSet(g, others)) return false;
    for (int v : t)
      if (isBicliqueSet(g, setUnion(others, VertexSet{v}))) return false;
  }
  return true;
}

// backtracking choice of distinct outside witnesses, one per part
bool pickDistinct(const std::vector<VertexSet>& cands, std::size_t i,
                  VertexSet& used, VertexSet& chosen) {
  if (i == cands.size()) return true;
  for (int w : cands[i]) {
    if (setContains(used, w)) continue;
    used = setUnion(used, VertexSet{w});
    chosen.push_back(w);
    if (pickDistinct(cands, i + 1, used, chosen)) return true;
    chosen.pop_back();
    used = setDifference(used, VertexSet{w});
  }
  return false;
}

}  // namespace

BiocularSearchResult findInducedBiocular(const Graph& g, int p, int q,
                                         std::uint64_t budget) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("findInducedBiocular: p,q must be >= 1");
  BiocularSearchResult res;
  if (p == 1 && q == 1) {
    if (auto t = findBadTriple(g)) {
      // the part assignment within a K3 or co-P3 is nominal
      res.embedding = BiocularEmbedding{0, {{(*t)[0]}, {(*t)[1]}}, {}, {(*t)[2]}};
    }
    return res;
  }
  std::uint64_t used = 0;
  for (int s = 0; s <= q - 1 && !res.embedding && !res.indeterminate; ++s) {
    const int bs = q - s;
    const int blocks = p + 1;
    const int usize = blocks * bs + s;
    if (usize > g.n()) continue;
    const bool inside = p <= 2 && (p == 1 || s == 0) && !(p == 1 && q == 1);
    const bool outside = p >= 2 && !(p == 2 && q == 1);
    std::vector<VertexSet> uCands;
    if (inside) {
      forEachSubset(g.n(), usize, [&](const std::vector<int>& idx) {
        uCands.emplace_back(idx.begin(), idx.end());
      });
    } else if (outside) {
      uCands = enumerateQBicliques(g, usize);
    }
    for (const auto& u : uCands) {
      if (res.embedding || res.indeterminate) break;
      const bool uBiclique = inside ? isBicliqueSet(g, u) : true;
      forEachSubset(static_cast<int>(u.size()), s, [&](const std::vector<int>& zi) {
        if (res.embedding || res.indeterminate) return;
        VertexSet z;
        for (int i : zi) z.push_back(u[i]);
        VertexSet rest = setDifference(u, z);
        std::vector<VertexSet> tsBuf;
        partitionBlocks(rest, bs, tsBuf, [&](const std::vector<VertexSet>& ts) {
          if (++used > budget) {
            res.indeterminate = true;
            return true;
          }
          if (inside && insideClause(g, u, ts)) {
            res.embedding = BiocularEmbedding{s, ts, z, {}};
            return true;
          }
          if (outside && uBiclique) {
            std::vector<VertexSet> cands(ts.size());
            bool feasible = true;
            for (std::size_t i = 0; i < ts.size() && feasible; ++i) {
              VertexSet others = setDifference(u, ts[i]);
              for (int w = 0; w < g.n(); ++w) {
                if (setContains(u, w)) continue;
                VertexSet withW = setUnion(others, VertexSet{w});
                if (!isBicliqueSet(g, withW)) continue;
                bool blocksAll = true;
                for (int v : ts[i])
                  if (isBicliqueSet(g, setUnion(withW, VertexSet{v}))) {
                    blocksAll = false;
                    break;
                  }
                if (blocksAll) cands[i].push_back(w);
              }
              feasible = !cands[i].empty();
            }
            if (feasible) {
              VertexSet usedW, chosen;
              if (pickDistinct(cands, 0, usedW, chosen)) {
                res.embedding = BiocularEmbedding{s, ts, z, chosen};
                return true;
              }
            }
          }
          return false;
        });
      });
    }
  }
  return res;
}

bool validateNonHellyCertificate(const Graph& g, int p, int q,
                                 const std::vector<VertexSet>& d) {
  if (p < 1 || q < 1) return false;
  if (d.size() != static_cast<std::size_t>(p) + 1) return false;
  for (const auto& m : d) {
    if (static_cast<int>(m.size()) != q) return false;
    if (!isBicliqueSet(g, m)) return false;
    for (int v : m)
      if (v < 0 || v >= g.n()) return false;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d[i] == d[j]) return false;
  VertexSet total;
  for (std::size_t omit = 0; omit < d.size(); ++omit) {
    VertexSet pu;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != omit) pu = setUnion(pu, d[j]);
    if (!isBicliqueSet(g, pu)) return false;
    VertexSet c = bicliqueFamilyCore(g, pu);
    total = omit == 0 ? c : setIntersect(total, c);
  }
  return static_cast<int>(total.size()) < q;
}

}  // namespace helly
