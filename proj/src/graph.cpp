#include "helly/graph.hpp"

#include "helly/verdict.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace helly {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  const int words = (n + 63) / 64;
  adj_.assign(n, {});
  rows_.assign(n, std::vector<std::uint64_t>(words));
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: vertex out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  m_ = static_cast<long long>(es.size());
  for (auto [u, v] : es) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    rows_[u][v / 64] |= 1ULL << (v % 64);
    rows_[v][u / 64] |= 1ULL << (u % 64);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::maxDegree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edgeList() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) es.emplace_back(u, v);
  return es;
}

bool isClique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool isBicliqueSet(const Graph& g, const VertexSet& s) {
  // 2-color by BFS over the induced subgraph, then demand completeness
  // across the sides. Edgeless sets pass.
  const int k = static_cast<int>(s.size());
  long long edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) ++edges;
  if (edges == 0) return true;
  std::vector<int> color(k, -1);
  std::vector<int> stack;
  color[0] = 0;
  stack.push_back(0);
  int seen = 1;
  long long sideX = 1, sideY = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < k; ++j) {
      if (j == i || !g.adjacent(s[i], s[j])) continue;
      if (color[j] == -1) {
        color[j] = 1 - color[i];
        (color[j] == 0 ? sideX : sideY)++;
        ++seen;
        stack.push_back(j);
      } else if (color[j] == color[i]) {
        return false;  // odd cycle
      }
    }
  }
  return seen == k && edges == sideX * sideY;
}

VertexSet completeTo(const Graph& g, const VertexSet& w) {
  VertexSet out;
  for (int v = 0; v < g.n(); ++v) {
    bool ok = true;
    for (int u : w)
      if (u != v && !g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

namespace {

void cliqueRec(const Graph& g, VertexSet& cur, const VertexSet& cand, int q,
               std::vector<VertexSet>& out) {
  if (static_cast<int>(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  const int need = q - static_cast<int>(cur.size());
  for (std::size_t i = 0; i + need <= cand.size(); ++i) {
    const int v = cand[i];
    VertexSet next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
    cur.push_back(v);
    cliqueRec(g, cur, next, q, out);
    cur.pop_back();
  }
}

bool tripleBiclique(const Graph& g, int a, int b, int c) {
  const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
  return e == 0 || e == 2;
}

void bicliqueRec(const Graph& g, VertexSet& cur, int start, int q,
                 std::vector<VertexSet>& out) {
  if (static_cast<int>(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  const int need = q - static_cast<int>(cur.size());
  for (int v = start; v + need <= g.n(); ++v) {
    bool ok = true;
    for (std::size_t i = 0; i < cur.size() && ok; ++i)
      for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
        ok = tripleBiclique(g, cur[i], cur[j], v);
    if (!ok) continue;
    cur.push_back(v);
    bicliqueRec(g, cur, v + 1, q, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> enumerateQCliques(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("enumerateQCliques: q must be >= 1");
  std::vector<VertexSet> out;
  VertexSet cur, all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  cliqueRec(g, cur, all, q, out);
  return out;
}

std::vector<VertexSet> enumerateQBicliques(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("enumerateQBicliques: q must be >= 1");
  // every 1- or 2-set is a biclique; beyond that grow with the rule that a
  // set is a biclique iff each 3-subset spans 0 or 2 edges
  std::vector<VertexSet> out;
  VertexSet cur;
  bicliqueRec(g, cur, 0, q, out);
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> isCompleteBipartite(
    const Graph& g) {
  VertexSet all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  if (g.m() == 0) return std::make_pair(all, VertexSet{});
  std::vector<int> color(g.n(), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  int seen = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        ++seen;
        stack.push_back(u);
      } else if (color[u] == color[v]) {
        return std::nullopt;
      }
    }
  }
  if (seen != g.n()) return std::nullopt;  // a complete bipartite graph with
                                           // an edge is connected
  VertexSet x, y;
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? x : y).push_back(v);
  if (g.m() != static_cast<long long>(x.size()) * static_cast<long long>(y.size()))
    return std::nullopt;
  if (!x.empty() && !y.empty() && y[0] < x[0]) std::swap(x, y);
  return std::make_pair(std::move(x), std::move(y));
}

InducedSubgraph inducedSubgraph(const Graph& g, const VertexSet& x) {
  std::vector<int> newId(g.n(), -1);
  std::vector<int> oldVertex;
  for (int v : x) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("inducedSubgraph: X not within vertices");
    newId[v] = static_cast<int>(oldVertex.size());
    oldVertex.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return InducedSubgraph{Graph(static_cast<int>(oldVertex.size()), edges),
                         std::move(oldVertex)};
}

Graph joinGraphs(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edgeList();
  for (auto [u, v] : b.edgeList()) edges.emplace_back(u + a.n(), v + a.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < b.n(); ++v) edges.emplace_back(u, v + a.n());
  return Graph(a.n() + b.n(), edges);
}

namespace {

void bronKerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                  std::vector<VertexSet>& out, std::uint64_t budget) {
  if (p.empty() && x.empty()) {
    if (out.size() >= budget)
      throw ResourceError("cliqueHypergraph: maximal clique budget exceeded");
    out.push_back(r);
    std::sort(out.back().begin(), out.back().end());
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p)
    if (int c = static_cast<int>(setIntersect(p, g.neighbors(u)).size()); c > best) {
      best = c;
      pivot = u;
    }
  for (int u : x)
    if (int c = static_cast<int>(setIntersect(p, g.neighbors(u)).size()); c > best) {
      best = c;
      pivot = u;
    }
  VertexSet ext = setDifference(p, g.neighbors(pivot));
  for (int v : ext) {
    r.push_back(v);
    bronKerbosch(g, r, setIntersect(p, g.neighbors(v)),
                 setIntersect(x, g.neighbors(v)), out, budget);
    r.pop_back();
    p = setDifference(p, VertexSet{v});
    x = setUnion(x, VertexSet{v});
  }
}

}  // namespace

Hypergraph cliqueHypergraph(const Graph& g, std::uint64_t cliqueBudget) {
  std::vector<VertexSet> cliques;
  if (g.n() > 0) {
    VertexSet r, p(g.n());
    for (int v = 0; v < g.n(); ++v) p[v] = v;
    bronKerbosch(g, r, std::move(p), {}, cliques, cliqueBudget);
  }
  std::sort(cliques.begin(), cliques.end());
  return Hypergraph(g.n(), std::move(cliques));
}

Hypergraph bicliqueHypergraph(const Graph& g, int nCap) {
  if (g.n() > nCap)
    throw ResourceError("bicliqueHypergraph: vertex count exceeds the cap");
  const int n = g.n();
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> bic(total, 1);
  for (std::size_t s = 1; s < total; ++s) {
    if (std::popcount(s) < 3) continue;
    const int v = std::countr_zero(s);
    const std::size_t rest = s ^ (std::size_t{1} << v);
    if (!bic[rest]) {
      bic[s] = 0;
      continue;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(rest >> a & 1)) continue;
      for (int b = a + 1; b < n && ok; ++b)
        if (rest >> b & 1) ok = tripleBiclique(g, v, a, b);
    }
    bic[s] = ok;
  }
  std::vector<VertexSet> maximal;
  for (std::size_t s = 1; s < total; ++s) {
    if (!bic[s]) continue;
    bool max = true;
    for (int w = 0; w < n && max; ++w)
      if (!(s >> w & 1) && bic[s | (std::size_t{1} << w)]) max = false;
    if (!max) continue;
    VertexSet vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    maximal.push_back(std::move(vs));
  }
  std::sort(maximal.begin(), maximal.end());
  return Hypergraph(n, std::move(maximal));
}

PhiGraph phiGraph(const Graph& g, int q) {
  auto cliques = enumerateQCliques(g, q);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (isClique(g, setUnion(cliques[i], cliques[j])))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return PhiGraph{Graph(static_cast<int>(cliques.size()), edges),
                  std::move(cliques)};
}

namespace {

bool kCliqueRec(const Graph& g, VertexSet& cur, const VertexSet& cand, int k,
                VertexSet& found) {
  if (static_cast<int>(cur.size()) == k) {
    found = cur;
    return true;
  }
  const int need = k - static_cast<int>(cur.size());
  for (std::size_t i = 0; i + need <= cand.size(); ++i) {
    const int v = cand[i];
    VertexSet next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
    cur.push_back(v);
    if (kCliqueRec(g, cur, next, k, found)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> findKClique(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("findKClique: negative k");
  if (k == 0) return VertexSet{};
  VertexSet cur, all(g.n()), found;
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  if (kCliqueRec(g, cur, all, k, found)) return found;
  return std::nullopt;
}

int cliqueNumber(const Graph& g) {
  int w = 0;
  while (w < g.n() && findKClique(g, w + 1)) ++w;
  return w;
}

int bicliqueNumber(const Graph& g, int nCap) {
  if (g.n() > nCap)
    throw ResourceError("bicliqueNumber: vertex count exceeds the cap");
  auto b = bicliqueHypergraph(g, nCap);
  return b.rank();
}

namespace {
bool nextDataLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}
}  // namespace

Graph parseGraph(std::istream& in) {
  std::string line;
  if (!nextDataLine(in, line))
    throw std::runtime_error("graph parse: missing header line");
  std::istringstream head(line);
  long long n, m;
  if (!(head >> n >> m)) throw std::runtime_error("graph parse: bad header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!nextDataLine(in, line))
      throw std::runtime_error("graph parse: missing edge line");
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw std::runtime_error("graph parse: bad edge line");
    if (u >= v) throw std::runtime_error("graph parse: edges need u < v");
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

void writeGraph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edgeList()) out << u << ' ' << v << '\n';
}

}  // namespace helly
