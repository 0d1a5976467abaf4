#include "helly/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "helly/clique_helly.hpp"

namespace helly {

void checkSat34(const Sat34Formula& f) {
  if (f.variables < 0) throw std::invalid_argument("3,4-SAT: negative variable count");
  std::vector<int> occ(f.variables + 1, 0);
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      const int v = std::abs(lit);
      if (lit == 0 || v > f.variables)
        throw std::invalid_argument("3,4-SAT: literal out of range");
      ++occ[v];
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (c[i] == c[j])
          throw std::invalid_argument("3,4-SAT: repeated literal in a clause");
        if (c[i] == -c[j])
          throw std::invalid_argument(
              "3,4-SAT: clause contains a literal and its negation");
      }
  }
  for (int v = 1; v <= f.variables; ++v)
    if (occ[v] > 4)
      throw std::invalid_argument("3,4-SAT: variable occurs in more than 4 clauses");
}

namespace {

bool nextDataLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Sat34Formula parseSat34(std::istream& in) {
  std::string line;
  if (!nextDataLine(in, line)) throw std::invalid_argument("formula: empty input");
  std::istringstream head(line);
  Sat34Formula f;
  int m = 0;
  if (!(head >> f.variables >> m) || f.variables < 0 || m < 0)
    throw std::invalid_argument("formula: bad header");
  for (int i = 0; i < m; ++i) {
    if (!nextDataLine(in, line))
      throw std::invalid_argument("formula: missing clause line");
    std::istringstream ls(line);
    std::array<int, 3> c{};
    if (!(ls >> c[0] >> c[1] >> c[2]))
      throw std::invalid_argument("formula: clause needs three literals");
    int extra;
    if (ls >> extra) throw std::invalid_argument("formula: too many literals");
    f.clauses.push_back(c);
  }
  checkSat34(f);
  return f;
}

void writeSat34(std::ostream& out, const Sat34Formula& f) {
  out << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses)
    out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

SatGadget satToBicliqueGadgetP(const Sat34Formula& f, int q, bool allowSmall) {
  checkSat34(f);
  const int m = static_cast<int>(f.clauses.size());
  if (q < 1) throw std::invalid_argument("satToBicliqueGadgetP: q must be >= 1");
  if (m < 7 && !allowSmall)
    throw std::invalid_argument(
        "satToBicliqueGadgetP: the equivalence needs at least 7 clauses");
  // vertices: y_i = i; u_{i,a} = m + 3i + a; the stable block starts at 4m
  SatGadget g;
  g.p = m - 1;
  g.q = q;
  const int uBase = m;
  const int qBase = 4 * m;
  const int n = 4 * m + q - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edges.emplace_back(uBase + 3 * i + a, uBase + 3 * i + b);
    for (int j = 0; j < m; ++j)
      if (j != i)
        for (int a = 0; a < 3; ++a) edges.emplace_back(i, uBase + 3 * j + a);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (f.clauses[i][a] == -f.clauses[j][b])
            edges.emplace_back(uBase + 3 * i + a, uBase + 3 * j + b);
  for (int k = 0; k < q - 1; ++k)
    for (int i = 0; i < m; ++i)
      for (int a = 0; a < 3; ++a) edges.emplace_back(uBase + 3 * i + a, qBase + k);
  g.graph = Graph(n, edges);
  g.roles.resize(n);
  for (int i = 0; i < m; ++i) g.roles[i] = "y" + std::to_string(i + 1);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < 3; ++a)
      g.roles[uBase + 3 * i + a] =
          "u" + std::to_string(i + 1) + "," + std::to_string(a + 1);
  for (int k = 0; k < q - 1; ++k) g.roles[qBase + k] = "q" + std::to_string(k + 1);
  return g;
}

SatGadget satToBicliqueGadgetQ(const Sat34Formula& f, int p, bool allowSmall) {
  checkSat34(f);
  const int m = static_cast<int>(f.clauses.size());
  if (p < 1) throw std::invalid_argument("satToBicliqueGadgetQ: p must be >= 1");
  if (m < 6 && !allowSmall)
    throw std::invalid_argument(
        "satToBicliqueGadgetQ: the equivalence needs at least 6 clauses");
  // vertices: x_i = i; y_i = (p+1)+i; block U_{i,a} starts at 2(p+1)+(3i+a)(p+1)
  SatGadget g;
  g.p = p;
  g.q = m * (p + 1) + 1;
  const int b = p + 1;
  const int yBase = b;
  const int uBase = 2 * b;
  const int n = (3 * m + 2) * b;
  auto uVertex = [&](int i, int a, int t) { return uBase + (3 * i + a) * b + t; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      if (i != j) edges.emplace_back(i, yBase + j);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < 3; ++a)
      for (int t = 0; t < b; ++t) {
        const int u = uVertex(i, a, t);
        for (int x = 0; x < b; ++x) edges.emplace_back(x, u);
        for (int a2 = a + 1; a2 < 3; ++a2)
          for (int t2 = 0; t2 < b; ++t2) edges.emplace_back(u, uVertex(i, a2, t2));
      }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int a = 0; a < 3; ++a)
        for (int a2 = 0; a2 < 3; ++a2)
          if (f.clauses[i][a] == -f.clauses[j][a2])
            for (int t = 0; t < b; ++t)
              for (int t2 = 0; t2 < b; ++t2)
                edges.emplace_back(uVertex(i, a, t), uVertex(j, a2, t2));
  g.graph = Graph(n, edges);
  g.roles.resize(n);
  for (int i = 0; i < b; ++i) g.roles[i] = "x" + std::to_string(i + 1);
  for (int i = 0; i < b; ++i) g.roles[yBase + i] = "y" + std::to_string(i + 1);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < 3; ++a)
      for (int t = 0; t < b; ++t)
        g.roles[uVertex(i, a, t)] = "u" + std::to_string(i + 1) + "," +
                                    std::to_string(a + 1) + "#" +
                                    std::to_string(t + 1);
  return g;
}

Hypergraph universalVertexLift(const Hypergraph& h, int q) {
  if (q < 1) throw std::invalid_argument("universalVertexLift: q must be >= 1");
  std::vector<VertexSet> edges = h.edges();
  for (auto& e : edges)
    for (int k = 0; k < q - 1; ++k) e.push_back(h.n() + k);
  const bool isolated = !h.isolatedVertices().empty() || (h.m() == 0 && q > 1);
  return Hypergraph(h.n() + q - 1, std::move(edges), isolated);
}

Graph graphUniversalLift(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("graphUniversalLift: q must be >= 1");
  auto edges = g.edgeList();
  const int n = g.n() + q - 1;
  for (int k = g.n(); k < n; ++k)
    for (int v = 0; v < k; ++v) edges.emplace_back(v, k);
  return Graph(n, edges);
}

JoinGadget cliqueJoinGadget(const Graph& g, int k, int p) {
  if (p < 2) throw std::invalid_argument("cliqueJoinGadget: p must be >= 2");
  if (k < 1) throw std::invalid_argument("cliqueJoinGadget: k must be >= 1");
  auto ocular = buildOcular(p, 1, 0);
  JoinGadget out;
  out.q = k + 1;
  out.graph = joinGraphs(g, ocular.graph);
  out.roles.resize(out.graph.n());
  for (int v = 0; v < g.n(); ++v) out.roles[v] = "g" + std::to_string(v);
  for (int i = 0; i <= p; ++i) {
    out.roles[g.n() + ocular.tSets[i][0]] = "t" + std::to_string(i + 1);
    out.roles[g.n() + ocular.wSet[i]] = "w" + std::to_string(i + 1);
  }
  return out;
}

namespace {

bool dpll(const std::vector<std::array<int, 3>>& clauses,
          std::vector<int>& assign) {
  // find a unit or an unassigned literal of the first unresolved clause
  int branch = 0;
  for (const auto& c : clauses) {
    bool satisfied = false;
    int unassigned = 0, freeLit = 0;
    for (int lit : c) {
      const int v = std::abs(lit);
      if (assign[v] == 0) {
        ++unassigned;
        freeLit = lit;
      } else if (assign[v] == (lit > 0 ? 1 : -1)) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) continue;
    if (unassigned == 0) return false;
    if (unassigned == 1) {
      const int v = std::abs(freeLit);
      assign[v] = freeLit > 0 ? 1 : -1;
      if (dpll(clauses, assign)) return true;
      assign[v] = 0;
      return false;
    }
    if (branch == 0) branch = freeLit;
  }
  if (branch == 0) return true;  // every clause satisfied
  const int v = std::abs(branch);
  for (int value : {branch > 0 ? 1 : -1, branch > 0 ? -1 : 1}) {
    assign[v] = value;
    if (dpll(clauses, assign)) return true;
  }
  assign[v] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<bool>> solveSat(const Sat34Formula& f) {
  if (f.variables > 40)
    throw std::invalid_argument("solveSat: more than 40 variables");
  std::vector<int> assign(f.variables + 1, 0);
  if (!dpll(f.clauses, assign)) return std::nullopt;
  std::vector<bool> out(f.variables);
  for (int v = 1; v <= f.variables; ++v) out[v - 1] = assign[v] == 1;
  return out;
}

Graph randomGraph(int n, double density, std::uint64_t seed) {
  if (n < 0 || density < 0.0 || density > 1.0)
    throw std::invalid_argument("randomGraph: bad parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Hypergraph randomHypergraph(int n, int m, int maxRank, std::uint64_t seed) {
  if (n < 1 || m < 0 || maxRank < 1)
    throw std::invalid_argument("randomHypergraph: bad parameters");
  std::mt19937_64 rng(seed);
  const int cap = std::min(maxRank, n);
  std::uniform_int_distribution<int> sizeDist(1, cap);
  std::vector<int> pool(n);
  std::vector<VertexSet> edges;
  for (int e = 0; e < m; ++e) {
    const int k = sizeDist(rng);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    edges.push_back(sortedUnique(VertexSet(pool.begin(), pool.begin() + k)));
  }
  return Hypergraph(n, std::move(edges), true);
}

Sat34Formula randomSat34(int variables, int m, std::uint64_t seed) {
  if (variables < 3 || m < 0)
    throw std::invalid_argument("randomSat34: needs at least 3 variables");
  if (3 * m > 4 * variables)
    throw std::invalid_argument("randomSat34: occurrence bounds are infeasible");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> varDist(1, variables);
  std::bernoulli_distribution sign(0.5);
  Sat34Formula f;
  f.variables = variables;
  for (;;) {  // reject whole draws that break the occurrence bounds
    f.clauses.clear();
    for (int i = 0; i < m; ++i) {
      int a = varDist(rng), b, c;
      do b = varDist(rng); while (b == a);
      do c = varDist(rng); while (c == a || c == b);
      auto lit = [&](int v) { return sign(rng) ? v : -v; };
      f.clauses.push_back({lit(a), lit(b), lit(c)});
    }
    std::vector<int> occ(variables + 1, 0);
    bool ok = true;
    for (const auto& cl : f.clauses)
      for (int lit : cl)
        if (++occ[std::abs(lit)] > 4) ok = false;
    if (ok) return f;
  }
}

}  // namespace helly
