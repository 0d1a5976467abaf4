#include "helly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "helly/biclique_helly.hpp"
#include "helly/clique_helly.hpp"

namespace helly {

namespace {

// 2^m sweep over edge subsets. bad[mask] marks families owning a nonempty
// <=p-subfamily with a small core, i.e. the non-(p,q)-intersecting ones.
std::optional<bool> bruteFamily(int n, const std::vector<VertexSet>& edges,
                                int p, int q, int maxM) {
  const int m = static_cast<int>(edges.size());
  if (m > maxM || n > 64) return std::nullopt;
  if (m == 0) return true;
  const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::vector<std::uint64_t> bits(m, 0);
  for (int i = 0; i < m; ++i)
    for (int v : edges[i]) bits[i] |= 1ULL << v;
  const std::size_t total = std::size_t{1} << m;
  std::vector<std::uint64_t> coreBits(total);
  std::vector<char> bad(total, 0);
  coreBits[0] = full;
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    coreBits[mask] = coreBits[mask ^ low] & bits[std::countr_zero(mask)];
    const int pc = std::popcount(mask);
    if (pc <= p && std::popcount(coreBits[mask]) < q) bad[mask] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (std::size_t mask = 0; mask < total; ++mask)
      if (mask >> i & 1) bad[mask] |= bad[mask ^ (std::size_t{1} << i)];
  for (std::size_t mask = 1; mask < total; ++mask)
    if (!bad[mask] && std::popcount(coreBits[mask]) < q) return false;
  return true;
}

std::optional<bool> graphFamilyEdges(const Graph& g, BaseFamily family,
                                     std::vector<VertexSet>& out) {
  try {
    Hypergraph h = family == BaseFamily::Clique ? cliqueHypergraph(g)
                                                : bicliqueHypergraph(g);
    out = h.edges();
    return true;
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<bool> bruteIsPQHelly(const Hypergraph& h, int p, int q,
                                   const OracleBudget& budget) {
  if (h.n() > budget.maxN) return std::nullopt;
  return bruteFamily(h.n(), h.edges(), p, q, budget.maxM);
}

std::optional<bool> bruteIsHereditaryPQHelly(const Hypergraph& h, int p, int q,
                                             const OracleBudget& budget) {
  if (h.n() > budget.maxN) return std::nullopt;
  for (std::uint32_t xm = 1; xm < (1u << h.n()); ++xm) {
    VertexSet x;
    for (int v = 0; v < h.n(); ++v)
      if (xm >> v & 1) x.push_back(v);
    auto sub = inducedSub(h, x);
    auto r = bruteFamily(sub.hypergraph.n(), sub.hypergraph.edges(), p, q,
                         budget.maxM);
    if (!r) return std::nullopt;
    if (!*r) return false;
  }
  return true;
}

std::optional<bool> bruteGraphPQHelly(const Graph& g, int p, int q,
                                      BaseFamily family,
                                      const OracleBudget& budget) {
  if (g.n() > budget.maxN) return std::nullopt;
  std::vector<VertexSet> edges;
  auto ok = graphFamilyEdges(g, family, edges);
  if (!ok) return std::nullopt;
  return bruteFamily(g.n(), edges, p, q, budget.maxM);
}

std::optional<bool> bruteHereditaryGraphPQHelly(const Graph& g, int p, int q,
                                                BaseFamily family,
                                                const OracleBudget& budget) {
  if (g.n() > budget.maxN) return std::nullopt;
  for (std::uint32_t xm = 1; xm < (1u << g.n()); ++xm) {
    VertexSet x;
    for (int v = 0; v < g.n(); ++v)
      if (xm >> v & 1) x.push_back(v);
    auto sub = inducedSubgraph(g, x);
    auto r = bruteGraphPQHelly(sub.graph, p, q, family, budget);
    if (!r) return std::nullopt;
    if (!*r) return false;
  }
  return true;
}

namespace {

bool inRange(const VertexSet& s, int n) {
  for (int v : s)
    if (v < 0 || v >= n) return false;
  return true;
}

bool distinctSets(const std::vector<VertexSet>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

bool validateHgSubfamily(const Hypergraph& h, int p, int q, bool hereditary,
                         const SubfamilyWitness& sw) {
  if (sw.edgeIdx.empty()) return false;
  std::vector<int> idx = sw.edgeIdx;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  if (idx.front() < 0 || idx.back() >= h.m()) return false;
  std::vector<VertexSet> fam;
  for (int i : idx) fam.push_back(h.edge(i));
  if (!isPQIntersecting(fam, p, q)) return false;
  VertexSet c = core(fam);
  if (!hereditary) return static_cast<int>(c.size()) < q;
  // hereditary: no nonempty subfamily of size min(p,|F|) may reach the same
  // core (smaller ones cannot either, since cores are antitone)
  const int k = std::min<int>(p, static_cast<int>(fam.size()));
  bool match = false;
  forEachSubset(static_cast<int>(fam.size()), k, [&](const std::vector<int>& pick) {
    if (match) return;
    std::vector<VertexSet> part;
    for (int i : pick) part.push_back(fam[i]);
    if (core(part) == c) match = true;
  });
  return !match;
}

bool validateHgBasis(const Hypergraph& h, int p, int q, bool hereditary,
                     const BasisWitness& bw) {
  if (bw.members.size() != static_cast<std::size_t>(p) + 1) return false;
  for (const auto& m : bw.members)
    if (static_cast<int>(m.size()) != q || !inRange(m, h.n())) return false;
  if (!distinctSets(bw.members)) return false;
  Basis b(bw.members, p, q);
  if (!b.nontrivial(h)) return false;
  VertexSet total;
  for (int i = 0; i <= p; ++i) {
    auto idx = restrictTo(h, b.supportSet(i));
    if (idx.empty()) return false;
    VertexSet c = coreOfEdges(h, idx);
    total = i == 0 ? c : setIntersect(total, c);
  }
  if (!hereditary) return static_cast<int>(total.size()) < q;
  if (bw.hereditary != true) return false;
  return b.starlike() && setsDisjoint(total, b.ext());
}

bool validateJEmbedding(const Hypergraph& h, const JEmbedding& je) {
  if (je.q < 1 || je.s < 0 || je.s >= je.q || je.p < 1) return false;
  if (je.edgeIdx.size() != static_cast<std::size_t>(je.p) + 1) return false;
  if (je.tSets.size() != je.edgeIdx.size()) return false;
  std::vector<int> idx = je.edgeIdx;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  if (idx.front() < 0 || idx.back() >= h.m()) return false;
  VertexSet u = je.zSet;
  if (static_cast<int>(je.zSet.size()) != je.s) return false;
  for (const auto& t : je.tSets) {
    if (static_cast<int>(t.size()) != je.q - je.s) return false;
    if (!setsDisjoint(u, t)) return false;
    u = setUnion(u, t);
  }
  if (!inRange(u, h.n())) return false;
  for (std::size_t i = 0; i < je.tSets.size(); ++i) {
    VertexSet restricted = setIntersect(h.edge(je.edgeIdx[i]), u);
    if (restricted != setDifference(u, je.tSets[i])) return false;
  }
  return true;
}

// Recomputes family cores for graph witnesses; the query returns nullopt
// exactly when the set is not a clique / biclique.
using FamilyCore = std::optional<VertexSet> (*)(const Graph&, const VertexSet&);

std::optional<VertexSet> cliqueCoreQuery(const Graph& g, const VertexSet& p) {
  return cliqueFamilyCore(g, p);
}

std::optional<VertexSet> bicliqueCoreQuery(const Graph& g, const VertexSet& p) {
  if (!isBicliqueSet(g, p)) return std::nullopt;
  return bicliqueFamilyCore(g, p);
}

bool validateGraphBasis(const Graph& g, int p, int q, bool hereditary,
                        const BasisWitness& bw, FamilyCore query,
                        bool extIsBad) {
  for (const auto& m : bw.members) {
    if (static_cast<int>(m.size()) != q || !inRange(m, g.n())) return false;
    if (!query(g, m)) return false;  // each member must be in the family
  }
  if (bw.members.empty()) return false;
  if (hereditary && p == 1) {
    // pointed failure of the q-set union rule: ext spans vertices of listed
    // members whose union is not in the family
    if (!bw.hereditary || bw.ext.empty()) return false;
    for (int v : bw.ext) {
      bool covered = false;
      for (const auto& m : bw.members) covered = covered || setContains(m, v);
      if (!covered) return false;
    }
    return extIsBad;
  }
  if (p == 1) {
    // a chain of family cores with a total intersection below q
    VertexSet total;
    for (std::size_t i = 0; i < bw.members.size(); ++i) {
      auto c = query(g, bw.members[i]);
      total = i == 0 ? *c : setIntersect(total, *c);
    }
    return static_cast<int>(total.size()) < q;
  }
  if (bw.members.size() != static_cast<std::size_t>(p) + 1) return false;
  if (!distinctSets(bw.members)) return false;
  Basis b(bw.members, p, q);
  VertexSet total;
  for (int i = 0; i <= p; ++i) {
    auto c = query(g, b.supportSet(i));
    if (!c) return false;  // support not in a family member: trivial basis
    total = i == 0 ? *c : setIntersect(total, *c);
  }
  if (!hereditary) return static_cast<int>(total.size()) < q;
  if (!bw.hereditary) return false;
  return b.starlike() && setsDisjoint(total, b.ext());
}

}  // namespace

bool validateHypergraphWitness(const Hypergraph& h, int p, int q,
                               bool hereditary, const Witness& w) {
  if (p < 1 || q < 1) return false;
  if (const auto* sw = std::get_if<SubfamilyWitness>(&w))
    return validateHgSubfamily(h, p, q, hereditary, *sw);
  if (const auto* bw = std::get_if<BasisWitness>(&w))
    return validateHgBasis(h, p, q, hereditary, *bw);
  if (const auto* je = std::get_if<JEmbedding>(&w))
    return hereditary && je->p == p && je->q == q && validateJEmbedding(h, *je);
  return false;
}

bool validateCliqueWitness(const Graph& g, int p, int q, bool hereditary,
                           const Witness& w) {
  if (p < 1 || q < 1) return false;
  const auto* bw = std::get_if<BasisWitness>(&w);
  if (!bw) return false;
  bool extBad = false;
  if (hereditary && p == 1 && bw->ext.size() == 2 && inRange(bw->ext, g.n()))
    extBad = !g.adjacent(bw->ext[0], bw->ext[1]);
  return validateGraphBasis(g, p, q, hereditary, *bw, &cliqueCoreQuery, extBad);
}

bool validateBicliqueWitness(const Graph& g, int p, int q, bool hereditary,
                             const Witness& w) {
  if (p < 1 || q < 1) return false;
  const auto* bw = std::get_if<BasisWitness>(&w);
  if (!bw) return false;
  bool extBad = false;
  if (hereditary && p == 1 && bw->ext.size() == 3 && inRange(bw->ext, g.n()))
    extBad = !isBicliqueSet(g, bw->ext);
  return validateGraphBasis(g, p, q, hereditary, *bw, &bicliqueCoreQuery,
                            extBad);
}

}  // namespace helly
