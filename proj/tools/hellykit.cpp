// Command-line front end: parse instances, run the recognizers, oracles and
// gadget generators, and emit JSON verdicts with machine-checkable witnesses.
//
// Exit codes: 0 property holds (or witness valid / generation ok),
// 1 property fails (witness in output) or witness invalid,
// 2 usage or parse error, 3 budget exhausted / indeterminate.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "helly/biclique_helly.hpp"
#include "helly/clique_helly.hpp"
#include "helly/gadgets.hpp"
#include "helly/helly_hg.hpp"
#include "helly/oracle.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::json;
using namespace helly;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

EngineOptions engineOptions() {
  EngineOptions opt;
  if (const char* ms = std::getenv("HELLYKIT_BUDGET_MS")) {
    long v = std::strtol(ms, nullptr, 10);
    if (v > 0)
      opt.deadline =
          std::chrono::steady_clock::now() + std::chrono::milliseconds(v);
  }
  return opt;
}

Hypergraph readHypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parseHypergraph(in);
}

Graph readGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parseGraph(in);
}

Sat34Formula readFormula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parseSat34(in);
}

json witnessToJson(const Witness& w) {
  json out;
  if (const auto* b = std::get_if<BasisWitness>(&w)) {
    out["kind"] = "basis";
    out["members"] = b->members;
    out["supportCores"] = b->supportCores;
    out["core"] = b->core;
    out["hereditary"] = b->hereditary;
    out["ext"] = b->ext;
  } else if (const auto* s = std::get_if<SubfamilyWitness>(&w)) {
    out["kind"] = "subfamily";
    out["edges"] = s->edgeIdx;
    out["core"] = s->core;
  } else {
    const auto& e = std::get<JEmbedding>(w);
    out["kind"] = "forbidden-embedding";
    out["p"] = e.p;
    out["q"] = e.q;
    out["s"] = e.s;
    out["edges"] = e.edgeIdx;
    out["tSets"] = e.tSets;
    out["zSet"] = e.zSet;
  }
  return out;
}

Witness witnessFromJson(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "basis") {
    BasisWitness b;
    b.members = j.at("members").get<std::vector<VertexSet>>();
    b.supportCores = j.at("supportCores").get<std::vector<VertexSet>>();
    b.core = j.at("core").get<VertexSet>();
    b.hereditary = j.value("hereditary", false);
    b.ext = j.value("ext", VertexSet{});
    return b;
  }
  if (kind == "subfamily") {
    SubfamilyWitness s;
    s.edgeIdx = j.at("edges").get<std::vector<int>>();
    s.core = j.at("core").get<VertexSet>();
    return s;
  }
  if (kind == "forbidden-embedding") {
    JEmbedding e;
    e.p = j.at("p").get<int>();
    e.q = j.at("q").get<int>();
    e.s = j.at("s").get<int>();
    e.edgeIdx = j.at("edges").get<std::vector<int>>();
    e.tSets = j.at("tSets").get<std::vector<VertexSet>>();
    e.zSet = j.at("zSet").get<VertexSet>();
    return e;
  }
  throw std::runtime_error("unknown witness kind: " + kind);
}

int emitVerdict(const std::string& property, int p, int q, const Verdict& v,
                int n, int m, std::uint64_t baseSets, double elapsedMs,
                bool text) {
  if (text) {
    std::cout << property << " p=" << p << " q=" << q << ": "
              << (v.holds ? "holds" : "fails") << " (" << v.method << ", "
              << elapsedMs << " ms)\n";
  } else {
    json out;
    out["property"] = property;
    out["p"] = p;
    out["q"] = q;
    out["holds"] = v.holds;
    out["method"] = v.method;
    if (v.witness) out["witness"] = witnessToJson(*v.witness);
    out["stats"] = {{"n", n},
                    {"m", m},
                    {"N", baseSets},
                    {"elapsed_ms", elapsedMs}};
    std::cout << out.dump(2) << "\n";
  }
  return v.holds ? kExitHolds : kExitFails;
}

double msSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::ostream& openOutput(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

void writeRoles(std::ostream& out, const std::vector<std::string>& roles) {
  for (std::size_t i = 0; i < roles.size(); ++i)
    out << "# vertex " << i << ": " << roles[i] << "\n";
}

void writeRolesSidecar(const std::string& path,
                       const std::vector<std::string>& roles) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << json(roles).dump(2) << "\n";
}

struct CommonArgs {
  std::string input;
  int p = 1, q = 1;
  bool hereditary = false;
  bool text = false;
};

void addCommon(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("input", a.input, "instance file")->required();
  cmd->add_option("--p", a.p, "p parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--q", a.q, "q parameter")->check(CLI::PositiveNumber);
  cmd->add_flag("--hereditary", a.hereditary, "hereditary variant");
  cmd->add_flag("--text", a.text, "human-readable output instead of JSON");
}

int runHg(const CommonArgs& a, const std::string& method) {
  auto h = readHypergraph(a.input);
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  if (method == "edge-subfamilies") {
    if (!a.hereditary)
      throw std::runtime_error("edge-subfamilies needs --hereditary");
    v = isHereditaryByEdgeSubfamilies(h, a.p, a.q);
  } else if (method == "brute") {
    auto r = a.hereditary ? bruteIsHereditaryPQHelly(h, a.p, a.q)
                          : bruteIsPQHelly(h, a.p, a.q);
    if (!r) return kExitBudget;
    v = Verdict{*r, "brute", std::nullopt};
  } else {
    v = a.hereditary ? isHereditaryPQHelly(h, a.p, a.q, engineOptions())
                     : isPQHelly(h, a.p, a.q, engineOptions());
  }
  return emitVerdict(a.hereditary ? "hereditary-pq-helly" : "pq-helly", a.p,
                     a.q, v, h.n(), h.m(), binomialSat(h.n(), a.q),
                     msSince(t0), a.text);
}

int runGraphProperty(const CommonArgs& a, bool biclique) {
  auto g = readGraph(a.input);
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  std::uint64_t baseSets;
  if (biclique) {
    v = a.hereditary ? isHereditaryPQBicliqueHelly(g, a.p, a.q, engineOptions())
                     : isPQBicliqueHelly(g, a.p, a.q, engineOptions());
    baseSets = enumerateQBicliques(g, a.q).size();
  } else {
    v = a.hereditary ? isHereditaryPQCliqueHelly(g, a.p, a.q, engineOptions())
                     : isPQCliqueHelly(g, a.p, a.q, engineOptions());
    baseSets = enumerateQCliques(g, a.q).size();
  }
  std::string property = biclique ? "pq-biclique-helly" : "pq-clique-helly";
  if (a.hereditary) property = "hereditary-" + property;
  return emitVerdict(property, a.p, a.q, v, g.n(), g.m(), baseSets,
                     msSince(t0), a.text);
}

int runOracle(const CommonArgs& a, const std::string& kind) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<bool> r;
  int n = 0, m = 0;
  if (kind == "hg") {
    auto h = readHypergraph(a.input);
    n = h.n();
    m = h.m();
    r = a.hereditary ? bruteIsHereditaryPQHelly(h, a.p, a.q)
                     : bruteIsPQHelly(h, a.p, a.q);
  } else {
    auto g = readGraph(a.input);
    n = g.n();
    m = g.m();
    auto family = kind == "clique" ? BaseFamily::Clique : BaseFamily::Biclique;
    r = a.hereditary ? bruteHereditaryGraphPQHelly(g, a.p, a.q, family)
                     : bruteGraphPQHelly(g, a.p, a.q, family);
  }
  if (!r) {
    std::cerr << "oracle: instance over the enumeration budget\n";
    return kExitBudget;
  }
  Verdict v{*r, "brute", std::nullopt};
  std::string property = kind == "hg" ? "pq-helly" : "pq-" + kind + "-helly";
  if (a.hereditary) property = "hereditary-" + property;
  return emitVerdict(property, a.p, a.q, v, n, m, 0, msSince(t0), a.text);
}

// Cross-checks every recognizer and reference against each other on a batch
// of hypergraph instances, across all parameter pairs up to the given caps.
int runSuite(const std::vector<std::string>& inputs, int maxP, int maxQ,
             int jobs, bool text) {
  std::vector<Hypergraph> instances;
  for (const auto& path : inputs) instances.push_back(readHypergraph(path));
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
  int disagreements = 0;
  json report = json::array();
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& h = instances[i];
    json entry;
    entry["input"] = inputs[i];
    json checks = json::array();
    for (int p = 1; p <= maxP; ++p)
      for (int q = 1; q <= maxQ; ++q) {
        bool plain = isPQHelly(h, p, q).holds;
        bool hered = isHereditaryPQHelly(h, p, q).holds;
        bool byEdges = isHereditaryByEdgeSubfamilies(h, p, q).holds;
        bool jFree = !containsJPartialSub(h, p, q).embedding.has_value();
        auto bPlain = bruteIsPQHelly(h, p, q);
        auto bHered = bruteIsHereditaryPQHelly(h, p, q);
        bool strong = h.m() <= 14 ? isStrongPQHelly(h, p, q).holds : hered;
        bool agree = hered == byEdges && hered == jFree && hered == strong &&
                     (!bPlain || plain == *bPlain) &&
                     (!bHered || hered == *bHered);
        if (!agree) ++disagreements;
        checks.push_back({{"p", p},
                          {"q", q},
                          {"holds", plain},
                          {"hereditary", hered},
                          {"agree", agree}});
      }
    entry["checks"] = std::move(checks);
#pragma omp critical
    report.push_back(std::move(entry));
  }
  if (text)
    std::cout << "suite: " << instances.size() << " instances, "
              << disagreements << " disagreements\n";
  else
    std::cout << json{{"instances", instances.size()},
                      {"disagreements", disagreements},
                      {"report", report}}
                     .dump(2)
              << "\n";
  return disagreements == 0 ? kExitHolds : kExitFails;
}

int runValidateWitness(const std::string& property, int p, int q,
                       bool hereditary, const std::string& instancePath,
                       const std::string& witnessPath) {
  std::ifstream win(witnessPath);
  if (!win) throw std::runtime_error("cannot open " + witnessPath);
  auto w = witnessFromJson(json::parse(win));
  bool ok;
  if (property == "hg")
    ok = validateHypergraphWitness(readHypergraph(instancePath), p, q,
                                   hereditary, w);
  else if (property == "clique")
    ok = validateCliqueWitness(readGraph(instancePath), p, q, hereditary, w);
  else
    ok = validateBicliqueWitness(readGraph(instancePath), p, q, hereditary, w);
  std::cout << json{{"property", property},
                    {"p", p},
                    {"q", q},
                    {"hereditary", hereditary},
                    {"valid", ok}}
                   .dump(2)
            << "\n";
  return ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide generalized Helly properties of hypergraphs and graphs"};
  app.require_subcommand(1);

  CommonArgs hgArgs;
  std::string hgMethod = "auto";
  auto* hg = app.add_subcommand("hg", "(p,q)-Helly property of a hypergraph");
  addCommon(hg, hgArgs);
  hg->add_option("--method", hgMethod, "auto|edge-subfamilies|brute")
      ->check(CLI::IsMember({"auto", "edge-subfamilies", "brute"}));

  CommonArgs cliqueArgs;
  auto* clique =
      app.add_subcommand("clique", "(p,q)-clique-Helly property of a graph");
  addCommon(clique, cliqueArgs);

  CommonArgs bicliqueArgs;
  auto* biclique = app.add_subcommand(
      "biclique", "(p,q)-biclique-Helly property of a graph");
  addCommon(biclique, bicliqueArgs);

  CommonArgs oracleArgs;
  std::string oracleKind = "hg";
  auto* oracle =
      app.add_subcommand("oracle", "brute-force reference by full enumeration");
  addCommon(oracle, oracleArgs);
  oracle->add_option("--kind", oracleKind, "hg|clique|biclique")
      ->check(CLI::IsMember({"hg", "clique", "biclique"}));

  std::vector<std::string> suiteInputs;
  int suiteMaxP = 3, suiteMaxQ = 3, suiteJobs = 0;
  bool suiteText = false;
  auto* suite = app.add_subcommand(
      "suite", "characterization agreement matrix over hypergraph instances");
  suite->add_option("inputs", suiteInputs, "hypergraph files")->required();
  suite->add_option("--max-p", suiteMaxP)->check(CLI::PositiveNumber);
  suite->add_option("--max-q", suiteMaxQ)->check(CLI::PositiveNumber);
  suite->add_option("--jobs", suiteJobs, "worker pool size (0 = default)");
  suite->add_flag("--text", suiteText);

  auto* gadget = app.add_subcommand("gadget", "generate test instances");
  gadget->require_subcommand(1);
  int gp = 2, gq = 1, gs = 0, gk = 2;
  std::string gOut, gRoles, gInput, gVariant = "auto";
  bool gAllowSmall = false, gGraphLift = false;

  auto* gj = gadget->add_subcommand("j", "forbidden hypergraph");
  gj->add_option("--p", gp)->check(CLI::PositiveNumber);
  gj->add_option("--q", gq)->check(CLI::PositiveNumber);
  gj->add_option("--s", gs)->check(CLI::NonNegativeNumber);
  gj->add_option("-o,--output", gOut);

  auto* gocular = gadget->add_subcommand("ocular", "forbidden clique graph");
  gocular->add_option("--p", gp)->check(CLI::PositiveNumber);
  gocular->add_option("--q", gq)->check(CLI::PositiveNumber);
  gocular->add_option("--s", gs)->check(CLI::NonNegativeNumber);
  gocular->add_option("-o,--output", gOut);

  auto* gbiocular =
      gadget->add_subcommand("biocular", "forbidden biclique graph");
  gbiocular->add_option("--p", gp)->check(CLI::PositiveNumber);
  gbiocular->add_option("--q", gq)->check(CLI::PositiveNumber);
  gbiocular->add_option("--s", gs)->check(CLI::NonNegativeNumber);
  gbiocular->add_option("--variant", gVariant)
      ->check(CLI::IsMember({"auto", "matching", "outside", "co-p3", "k3"}));
  gbiocular->add_option("-o,--output", gOut);

  auto* gsatp =
      gadget->add_subcommand("sat-p", "clause-clique hardness graph");
  gsatp->add_option("input", gInput, "formula file")->required();
  gsatp->add_option("--q", gq)->check(CLI::PositiveNumber);
  gsatp->add_flag("--allow-small", gAllowSmall);
  gsatp->add_option("-o,--output", gOut);
  gsatp->add_option("--roles", gRoles, "sidecar JSON role map");

  auto* gsatq = gadget->add_subcommand("sat-q", "false-twin hardness graph");
  gsatq->add_option("input", gInput, "formula file")->required();
  gsatq->add_option("--p", gp)->check(CLI::PositiveNumber);
  gsatq->add_flag("--allow-small", gAllowSmall);
  gsatq->add_option("-o,--output", gOut);
  gsatq->add_option("--roles", gRoles, "sidecar JSON role map");

  auto* glift = gadget->add_subcommand("lift", "universal vertex lift");
  glift->add_option("input", gInput, "hypergraph or graph file")->required();
  glift->add_option("--q", gq)->check(CLI::PositiveNumber);
  glift->add_flag("--graph", gGraphLift, "input is a graph");
  glift->add_option("-o,--output", gOut);

  auto* gjoin = gadget->add_subcommand("join", "clique join hardness graph");
  gjoin->add_option("input", gInput, "graph file")->required();
  gjoin->add_option("--k", gk, "clique size queried")
      ->check(CLI::PositiveNumber);
  gjoin->add_option("--p", gp)->check(CLI::PositiveNumber);
  gjoin->add_option("-o,--output", gOut);
  gjoin->add_option("--roles", gRoles, "sidecar JSON role map");

  std::string rKind = "graph";
  int rN = 8, rM = 6, rMaxRank = 4, rVars = 8;
  double rDensity = 0.5;
  std::uint64_t rSeed = 1;
  auto* grandom = gadget->add_subcommand("random", "seeded random instance");
  grandom->add_option("--kind", rKind)
      ->check(CLI::IsMember({"graph", "hypergraph", "sat"}));
  grandom->add_option("--n", rN)->check(CLI::NonNegativeNumber);
  grandom->add_option("--m", rM)->check(CLI::NonNegativeNumber);
  grandom->add_option("--max-rank", rMaxRank)->check(CLI::PositiveNumber);
  grandom->add_option("--density", rDensity);
  grandom->add_option("--vars", rVars)->check(CLI::PositiveNumber);
  grandom->add_option("--seed", rSeed);
  grandom->add_option("-o,--output", gOut);

  std::string vProperty, vInstance, vWitness;
  int vp = 1, vq = 1;
  bool vHereditary = false;
  auto* validate = app.add_subcommand(
      "validate-witness", "recheck a violation witness from scratch");
  validate->add_option("--property", vProperty, "hg|clique|biclique")
      ->required()
      ->check(CLI::IsMember({"hg", "clique", "biclique"}));
  validate->add_option("--p", vp)->check(CLI::PositiveNumber);
  validate->add_option("--q", vq)->check(CLI::PositiveNumber);
  validate->add_flag("--hereditary", vHereditary);
  validate->add_option("--instance", vInstance)->required();
  validate->add_option("--witness", vWitness)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (hg->parsed()) return runHg(hgArgs, hgMethod);
    if (clique->parsed()) return runGraphProperty(cliqueArgs, false);
    if (biclique->parsed()) return runGraphProperty(bicliqueArgs, true);
    if (oracle->parsed()) return runOracle(oracleArgs, oracleKind);
    if (suite->parsed())
      return runSuite(suiteInputs, suiteMaxP, suiteMaxQ, suiteJobs, suiteText);
    if (validate->parsed())
      return runValidateWitness(vProperty, vp, vq, vHereditary, vInstance,
                                vWitness);

    std::ofstream file;
    if (gj->parsed()) {
      auto spec = buildJ(gp, gq, gs);
      writeHypergraph(openOutput(file, gOut), spec.hypergraph);
    } else if (gocular->parsed()) {
      auto spec = buildOcular(gp, gq, gs);
      writeGraph(openOutput(file, gOut), spec.graph);
    } else if (gbiocular->parsed()) {
      BiocularVariant variant = BiocularVariant::Auto;
      if (gVariant == "matching") variant = BiocularVariant::MatchingOrTripartite;
      if (gVariant == "outside") variant = BiocularVariant::Outside;
      if (gVariant == "co-p3") variant = BiocularVariant::CoP3;
      if (gVariant == "k3") variant = BiocularVariant::K3;
      auto spec = buildBiocular(gp, gq, gs, variant);
      writeGraph(openOutput(file, gOut), spec.graph);
    } else if (gsatp->parsed() || gsatq->parsed()) {
      auto f = readFormula(gInput);
      auto sg = gsatp->parsed() ? satToBicliqueGadgetP(f, gq, gAllowSmall)
                                : satToBicliqueGadgetQ(f, gp, gAllowSmall);
      auto& out = openOutput(file, gOut);
      out << "# test at p=" << sg.p << " q=" << sg.q << "\n";
      writeRoles(out, sg.roles);
      writeGraph(out, sg.graph);
      writeRolesSidecar(gRoles, sg.roles);
    } else if (glift->parsed()) {
      if (gGraphLift)
        writeGraph(openOutput(file, gOut),
                   graphUniversalLift(readGraph(gInput), gq));
      else
        writeHypergraph(openOutput(file, gOut),
                        universalVertexLift(readHypergraph(gInput), gq));
    } else if (gjoin->parsed()) {
      auto jg = cliqueJoinGadget(readGraph(gInput), gk, gp);
      auto& out = openOutput(file, gOut);
      out << "# test hereditary clique property at p=" << gp << " q=" << jg.q
          << "\n";
      writeRoles(out, jg.roles);
      writeGraph(out, jg.graph);
      writeRolesSidecar(gRoles, jg.roles);
    } else if (grandom->parsed()) {
      auto& out = openOutput(file, gOut);
      if (rKind == "graph")
        writeGraph(out, randomGraph(rN, rDensity, rSeed));
      else if (rKind == "hypergraph")
        writeHypergraph(out, randomHypergraph(rN, rM, rMaxRank, rSeed));
      else
        writeSat34(out, randomSat34(rVars, rM, rSeed));
    }
    return kExitHolds;
  } catch (const ResourceError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
