#include "helly/hypergraph.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace helly {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges, bool allowIsolated)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
  for (const auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        throw std::invalid_argument("hypergraph: vertex out of range");
      if (i > 0 && e[i] <= e[i - 1])
        throw std::invalid_argument("hypergraph: edge not strictly sorted");
    }
  }
  if (!allowIsolated) {
    auto iso = isolatedVertices();
    if (!iso.empty()) {
      std::ostringstream msg;
      msg << "hypergraph: isolated vertices:";
      for (int v : iso) msg << ' ' << v;
      throw std::invalid_argument(msg.str());
    }
  }
}

long long Hypergraph::totalSize() const {
  long long t = 0;
  for (const auto& e : edges_) t += static_cast<long long>(e.size());
  return t;
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges_) r = std::max(r, e.size());
  return static_cast<int>(r);
}

std::vector<int> Hypergraph::isolatedVertices() const {
  std::vector<char> seen(n_, 0);
  for (const auto& e : edges_)
    for (int v : e) seen[v] = 1;
  std::vector<int> iso;
  for (int v = 0; v < n_; ++v)
    if (!seen[v]) iso.push_back(v);
  return iso;
}

Basis::Basis(std::vector<VertexSet> members, int p, int q)
    : members_(std::move(members)), p_(p), q_(q) {
  if (p < 1 || q < 1) throw std::invalid_argument("basis: p,q must be >= 1");
  if (members_.size() != static_cast<std::size_t>(p) + 1)
    throw std::invalid_argument("basis: needs exactly p+1 members");
  for (const auto& s : members_)
    if (static_cast<int>(s.size()) != q)
      throw std::invalid_argument("basis: member is not a q-set");
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (members_[i] == members_[j])
        throw std::invalid_argument("basis: members must be pairwise distinct");
}

VertexSet Basis::supportSet(int i) const {
  VertexSet u;
  for (std::size_t j = 0; j < members_.size(); ++j)
    if (static_cast<int>(j) != i) u = setUnion(u, members_[j]);
  return u;
}

std::vector<VertexSet> Basis::supportSets() const {
  std::vector<VertexSet> out;
  out.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i)
    out.push_back(supportSet(static_cast<int>(i)));
  return out;
}

VertexSet Basis::core() const { return helly::core(members_); }

VertexSet Basis::unionAll() const {
  VertexSet u;
  for (const auto& s : members_) u = setUnion(u, s);
  return u;
}

VertexSet Basis::ext() const { return setDifference(unionAll(), core()); }

bool Basis::starlike() const {
  std::map<int, int> count;
  for (const auto& s : members_)
    for (int v : s) ++count[v];
  const int full = static_cast<int>(members_.size());
  for (auto [v, c] : count)
    if (c >= 2 && c < full) return false;
  return true;
}

bool Basis::nontrivial(const Hypergraph& h) const {
  for (const auto& sup : supportSets()) {
    bool contained = false;
    for (const auto& e : h.edges())
      if (isSubset(sup, e)) {
        contained = true;
        break;
      }
    if (!contained) return false;
  }
  return true;
}

VertexSet core(const std::vector<VertexSet>& family) {
  if (family.empty())
    throw std::invalid_argument("core: undefined for the empty family");
  VertexSet c = family[0];
  for (std::size_t i = 1; i < family.size() && !c.empty(); ++i)
    setIntersectInPlace(c, family[i]);
  return c;
}

VertexSet coreOfEdges(const Hypergraph& h, const std::vector<int>& edgeIdx) {
  if (edgeIdx.empty())
    throw std::invalid_argument("core: undefined for the empty family");
  VertexSet c = h.edge(edgeIdx[0]);
  for (std::size_t i = 1; i < edgeIdx.size() && !c.empty(); ++i)
    setIntersectInPlace(c, h.edge(edgeIdx[i]));
  return c;
}

std::vector<int> restrictTo(const Hypergraph& h, const VertexSet& p) {
  for (int v : p)
    if (v < 0 || v >= h.n())
      throw std::invalid_argument("restrictTo: P not within the vertex set");
  std::vector<int> idx;
  for (int i = 0; i < h.m(); ++i)
    if (isSubset(p, h.edge(i))) idx.push_back(i);
  return idx;
}

std::vector<int> unionRestrict(const Hypergraph& h, const Basis& s) {
  auto sups = s.supportSets();
  std::vector<int> idx;
  for (int i = 0; i < h.m(); ++i) {
    for (const auto& sup : sups)
      if (isSubset(sup, h.edge(i))) {
        idx.push_back(i);
        break;
      }
  }
  return idx;
}

std::vector<VertexSet> phiSets(const VertexSet& s, int q) {
  std::vector<VertexSet> out;
  if (q < 0 || q > static_cast<int>(s.size())) return out;
  forEachSubset(static_cast<int>(s.size()), q, [&](const std::vector<int>& idx) {
    VertexSet qs(q);
    for (int i = 0; i < q; ++i) qs[i] = s[idx[i]];
    out.push_back(std::move(qs));
  });
  return out;
}

PhiHypergraph phiHypergraph(const Hypergraph& h, int q) {
  // Vertex identity of Phi_q: q-sets canonicalized by sorted contents with a
  // stable lexicographic index.
  std::map<VertexSet, int> index;
  std::vector<std::vector<VertexSet>> perEdge;
  for (const auto& e : h.edges()) {
    auto qs = phiSets(e, q);
    if (qs.empty()) continue;  // not a q+-edge
    for (const auto& s : qs) index.emplace(s, 0);
    perEdge.push_back(std::move(qs));
  }
  int next = 0;
  std::vector<VertexSet> labels;
  for (auto& [set, id] : index) {
    id = next++;
    labels.push_back(set);
  }
  std::vector<VertexSet> edges;
  edges.reserve(perEdge.size());
  for (const auto& qs : perEdge) {
    VertexSet e;
    e.reserve(qs.size());
    for (const auto& s : qs) e.push_back(index.at(s));
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  return PhiHypergraph{Hypergraph(next, std::move(edges)), std::move(labels)};
}

bool isPQIntersecting(const std::vector<VertexSet>& family, int p, int q) {
  if (family.empty())
    throw std::invalid_argument("isPQIntersecting: family must be nonempty");
  const int k = std::min<int>(p, static_cast<int>(family.size()));
  bool ok = true;
  forEachSubset(static_cast<int>(family.size()), k,
                [&](const std::vector<int>& idx) {
                  if (!ok) return;
                  VertexSet c = family[idx[0]];
                  for (int i = 1; i < k && !c.empty(); ++i)
                    setIntersectInPlace(c, family[idx[i]]);
                  if (static_cast<int>(c.size()) < q) ok = false;
                });
  return ok;
}

ForbiddenHypergraph buildJ(int p, int q, int s) {
  if (p < 1 || q < 1 || s < 0 || s >= q)
    throw std::invalid_argument("buildJ: need p,q >= 1 and 0 <= s < q");
  const int blocks = p + 1;
  const int bs = q - s;
  const int n = blocks * bs + s;
  std::vector<VertexSet> tSets(blocks);
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < bs; ++j) tSets[i].push_back(i * bs + j);
  VertexSet z;
  for (int v = blocks * bs; v < n; ++v) z.push_back(v);
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::vector<VertexSet> edges;
  for (int i = 0; i < blocks; ++i)
    edges.push_back(setDifference(all, tSets[i]));
  return ForbiddenHypergraph{Hypergraph(n, std::move(edges)), p, q, s,
                             std::move(tSets), std::move(z)};
}

InducedSub inducedSub(const Hypergraph& h, const VertexSet& x) {
  std::vector<int> newId(h.n(), -1);
  std::vector<int> oldVertex;
  for (int v : x) {
    if (v < 0 || v >= h.n())
      throw std::invalid_argument("inducedSub: X not within the vertex set");
    newId[v] = static_cast<int>(oldVertex.size());
    oldVertex.push_back(v);
  }
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    VertexSet cut;
    for (int v : e)
      if (newId[v] >= 0) cut.push_back(newId[v]);
    if (!cut.empty()) edges.push_back(std::move(cut));
  }
  return InducedSub{
      Hypergraph(static_cast<int>(oldVertex.size()), std::move(edges), true),
      std::move(oldVertex)};
}

namespace {
// Reads the next non-comment, non-blank line.
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

Hypergraph parseHypergraph(std::istream& in, bool allowIsolated) {
  std::string line;
  if (!nextDataLine(in, line))
    throw std::runtime_error("hypergraph parse: missing header line");
  std::istringstream head(line);
  int n, m;
  if (!(head >> n >> m))
    throw std::runtime_error("hypergraph parse: bad header line");
  std::vector<VertexSet> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!nextDataLine(in, line))
      throw std::runtime_error("hypergraph parse: missing edge line");
    std::istringstream ls(line);
    int k;
    if (!(ls >> k) || k < 1)
      throw std::runtime_error("hypergraph parse: bad edge size");
    VertexSet e(k);
    for (int j = 0; j < k; ++j) {
      if (!(ls >> e[j]))
        throw std::runtime_error("hypergraph parse: truncated edge line");
      if (j > 0 && e[j] <= e[j - 1])
        throw std::runtime_error(
            "hypergraph parse: vertices not strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), allowIsolated);
}

void writeHypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.m() << '\n';
  for (const auto& e : h.edges()) {
    out << e.size();
    for (int v : e) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace helly
