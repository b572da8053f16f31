// gti: compute degree-based topological indices, verify the AG bound and
// relation catalog over graph families and exhaustive enumerations, and run
// the edge-deletion searches.
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gti/bounds.hpp"
#include "gti/chromatic.hpp"
#include "gti/edge_effects.hpp"
#include "gti/enumeration.hpp"
#include "gti/families.hpp"
#include "gti/graph6.hpp"
#include "gti/indices.hpp"
#include "gti/relations.hpp"
#include "gti/report.hpp"

using namespace gti;

namespace {

struct InputOpts {
  std::string inPath;
  std::string format = "graph6";
  std::string family;
  int n = 0, k = 0, p = 0, q = 0;
  int enumerateN = 0;
  bool strict = false;
};

void addInputOpts(CLI::App* cmd, InputOpts& in, bool addK = true) {
  cmd->add_option("--in", in.inPath, "input file");
  cmd->add_option("--format", in.format, "input format: graph6|edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--family", in.family, "graph family: K|Kpq|star|P|C|L");
  cmd->add_option("--n", in.n, "family order");
  if (addK) cmd->add_option("--k", in.k, "family parameter k");
  cmd->add_option("--p", in.p, "bipartite part size p");
  cmd->add_option("--q", in.q, "bipartite part size q");
  cmd->add_option("--enumerate-n", in.enumerateN, "all connected graphs on n vertices");
  cmd->add_flag("--strict", in.strict, "abort on malformed input; findings fail the run");
}

Graph readEdgeList(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::vector<Edge> es;
  int maxV = -1;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int u, v;
    if (!(ss >> u >> v)) throw std::runtime_error(path + ": bad edge line: " + line);
    es.emplace_back(u, v);
    maxV = std::max({maxV, u, v});
  }
  return buildGraph(maxV + 1, es);
}

std::vector<Graph> loadGraphs(const InputOpts& in) {
  std::vector<Graph> gs;
  if (in.enumerateN > 0) {
    gs = enumerateConnected(in.enumerateN);
  } else if (!in.family.empty()) {
    if (in.family == "Kpq")
      gs.push_back(completeBipartiteGraph(in.p ? in.p : in.n, in.q ? in.q : in.k));
    else
      gs.push_back(familyByName(in.family, in.n, in.k));
  } else if (!in.inPath.empty()) {
    if (in.format == "edgelist") {
      gs.push_back(readEdgeList(in.inPath));
    } else {
      std::vector<std::string> errors;
      for (auto& l : readGraph6File(in.inPath, in.strict, &errors)) gs.push_back(std::move(l.graph));
      for (const auto& e : errors) std::cerr << "warning: " << e << "\n";
    }
  } else {
    throw std::runtime_error("no input: use --in, --family or --enumerate-n");
  }
  return gs;
}

// simple header + string rows table, emitted as CSV or a JSON object array
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const {
    std::string out;
    for (size_t i = 0; i < header.size(); i++) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& r : rows) {
      for (size_t i = 0; i < r.size(); i++) out += (i ? "," : "") + r[i];
      out += "\n";
    }
    return out;
  }
  std::string json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj;
      for (size_t i = 0; i < header.size() && i < r.size(); i++) obj[header[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    return arr.dump(2);
  }
};

void emitText(const std::string& text, const std::string& outSpec) {
  if (outSpec.empty() || outSpec == "csv" || outSpec == "json") {
    std::cout << text;
    return;
  }
  std::ofstream f(outSpec);
  if (!f) throw std::runtime_error("cannot write " + outSpec);
  f << text;
}

void emitTable(const Table& t, const std::string& outSpec) {
  bool json = outSpec == "json" ||
              (outSpec.size() > 5 && outSpec.substr(outSpec.size() - 5) == ".json");
  emitText(json ? t.json() : t.csv(), outSpec);
}

template <class F>
void parallelFor(int jobs, int count, F fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; i++) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; t++)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

const char* b2s(bool b) { return b ? "true" : "false"; }

int runIndices(const InputOpts& in, const std::string& outSpec) {
  Table t;
  t.header = {"graph6", "n", "m", "GA", "AG", "ABC", "SDD", "M1", "M2", "F"};
  for (const Graph& g : loadGraphs(in)) {
    IndexVector iv = indexVector(g);
    t.rows.push_back({writeGraph6(g), std::to_string(g.n()), std::to_string(g.m()),
                      formatDouble(iv.ga), formatDouble(iv.ag), formatDouble(iv.abc),
                      formatDouble(iv.sdd), std::to_string(iv.m1), std::to_string(iv.m2),
                      std::to_string(iv.f)});
  }
  emitTable(t, outSpec);
  return 0;
}

int runVerify(const InputOpts& in, const std::string& outSpec, double tol, int jobs,
              bool relations) {
  std::vector<Graph> gs = loadGraphs(in);
  Table t;
  t.header = {"graph6", relations ? "relationId" : "boundId", "lhs", "rhs",
              "slack",  "equality",                           "extremalMatch"};
  std::vector<Table> parts(gs.size());
  std::vector<std::vector<ViolationRecord>> badParts(gs.size());
  parallelFor(jobs, static_cast<int>(gs.size()), [&](int i) {
    std::string g6 = writeGraph6(gs[i]);
    auto addRow = [&](const char* id, bool applicable, double lhs, double rhs, double slack,
                      bool equality, bool extremal, bool holds, bool anomaly,
                      const std::string& note) {
      if (!applicable) return;
      parts[i].rows.push_back({g6, id, formatDouble(lhs), formatDouble(rhs), formatDouble(slack),
                               b2s(equality), b2s(extremal)});
      if (!holds || anomaly)
        badParts[i].push_back({g6, id, lhs, rhs, slack, std::nullopt,
                               !holds ? "violation" : "anomaly: " + note});
    };
    if (relations) {
      for (const RelationReport& r : verifyRelations(gs[i], tol))
        addRow(toString(r.id), r.applicable, r.lhs, r.rhs, r.slack, r.equality, r.extremalMatch,
               r.holds, r.anomaly, r.note);
    } else {
      for (const BoundReport& r : verifyBounds(gs[i], tol))
        addRow(toString(r.id), r.applicable, r.lhs, r.rhs, r.slack, r.equality, r.extremalMatch,
               r.holds, r.anomaly, r.note);
    }
  });
  std::vector<ViolationRecord> bad;
  for (auto& p : parts)
    for (auto& r : p.rows) t.rows.push_back(std::move(r));
  for (auto& p : badParts)
    for (auto& r : p) bad.push_back(std::move(r));
  emitTable(t, outSpec);
  long long violations = 0;
  for (const auto& r : bad) violations += r.note == "violation";
  std::cerr << gs.size() << " graphs, " << t.rows.size() << " checks, " << violations
            << " violations, " << bad.size() - violations << " anomalies\n";
  if (!bad.empty()) {
    sortRecords(bad);
    writeCsv(bad, std::cerr);
  }
  return bad.empty() ? 0 : 1;
}

int runChromatic(const InputOpts& in, const std::string& outSpec, const std::string& kRange,
                 int nMax, double tol) {
  Table t;
  if (in.family == "L" && !kRange.empty()) {
    int k1 = 0, k2 = 0;
    if (auto dots = kRange.find(".."); dots != std::string::npos) {
      k1 = std::stoi(kRange.substr(0, dots));
      k2 = std::stoi(kRange.substr(dots + 2));
    } else {
      k1 = k2 = std::stoi(kRange);
    }
    t.header = {"k", "nStar", "excessAtNMax", "growthAtHalf", "growthAtNMax", "ratioGrew"};
    for (int k = k1; k <= k2; k++) {
      Theorem8Scan s = theorem8Scan(k, nMax);
      bool grew = theorem8Bound(k, nMax) / (k + 1) > theorem8Bound(k, nMax / 2) / (k + 1);
      t.rows.push_back({std::to_string(k), std::to_string(s.nStar), formatDouble(s.excessAtNMax),
                        formatDouble(s.growthAtHalf), formatDouble(s.growthAtNMax), b2s(grew)});
    }
    emitTable(t, outSpec);
    return 0;
  }
  std::vector<Graph> gs = loadGraphs(in);
  t.header = {"graph6", "checkId", "chi", "bound", "slack", "equality", "note"};
  // conjecture-class outcomes are findings and never fail the run (unless
  // --strict); only violations of the proven chain are assertion-class
  long long findings = 0, violations = 0;
  for (const Graph& g : gs) {
    std::string g6 = writeGraph6(g);
    RelationReport c1 = conjecture1Check(g, tol);
    if (c1.applicable) {
      if (!c1.holds || c1.anomaly) findings++;
      t.rows.push_back({g6, "Conjecture1", formatDouble(c1.lhs), formatDouble(c1.rhs),
                        formatDouble(c1.slack), b2s(c1.equality),
                        c1.holds ? "" : "FINDING: conjecture violated"});
    }
    ChainReport ch = agChromaticChain(g, tol);
    if (ch.applicable) {
      bool ok = ch.holdsChiN && ch.holdsNAg;
      if (!ok) violations++;
      t.rows.push_back({g6, "AGchain", std::to_string(ch.chi), formatDouble(ch.agBound),
                        formatDouble(ch.slack), b2s(ch.equality), ok ? "" : "chain violated"});
    }
  }
  OpenQuestionScan oq = agDeltaOpenQuestion(gs, tol);
  findings += static_cast<long long>(oq.violations.size());
  std::cerr << "chi*Delta/(2AG) max ratio " << formatDouble(oq.maxRatio) << " at "
            << oq.maxWitnessGraph6 << "; " << oq.violations.size()
            << " graphs above 1 (open question findings)\n";
  emitTable(t, outSpec);
  if (violations) return 1;
  return findings && in.strict ? 1 : 0;
}

int runEdgeEffects(const InputOpts& in, const std::string& outSpec) {
  Table t;
  t.header = {"graph6", "u",    "v",    "di",   "dj",   "gaDelta",   "agDelta",   "T11i", "T11ii",
              "T12i",   "T12ii", "T13i", "T13ii", "T14i", "T14ii", "ascending", "descending"};
  for (const Graph& g : loadGraphs(in)) {
    std::string g6 = writeGraph6(g);
    for (const EdgeAnalysis& ea : classifyEdges(g)) {
      auto cond = [&](const ConditionVerdict& v, bool second) {
        return v.applicable ? b2s(second ? v.condII : v.condI) : "n/a";
      };
      t.rows.push_back({g6, std::to_string(ea.edge.first), std::to_string(ea.edge.second),
                        std::to_string(ea.ctx.di), std::to_string(ea.ctx.dj),
                        formatDouble(ea.delta.gaDelta), formatDouble(ea.delta.agDelta),
                        cond(ea.t11, false), cond(ea.t11, true), cond(ea.t12, false),
                        cond(ea.t12, true), cond(ea.t13, false), cond(ea.t13, true),
                        cond(ea.t14, false), cond(ea.t14, true), b2s(ea.ascending),
                        b2s(ea.descending)});
    }
  }
  emitTable(t, outSpec);
  return 0;
}

nlohmann::json contextJson(const EdgeLocalContext& ctx) {
  auto ms = [](const DegreeMultiset& m) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [d, c] : m.items) a.push_back({{"degree", d}, {"count", c}});
    return a;
  };
  return {{"di", ctx.di}, {"dj", ctx.dj}, {"neighborsI", ms(ctx.nbrI)}, {"neighborsJ", ms(ctx.nbrJ)}};
}

nlohmann::json verdictsJson(const EdgeLocalContext& ctx) {
  auto v2j = [](const ConditionVerdict& v) {
    if (!v.applicable) return nlohmann::json{{"applicable", false}, {"reason", v.reason}};
    return nlohmann::json{{"applicable", true}, {"i", v.condI}, {"ii", v.condII}};
  };
  ConditionVerdict t13 = checkT13(ctx), t14 = checkT14(ctx);
  return {{"T11", v2j(checkT11(ctx))},          {"T12", v2j(checkT12(ctx))},
          {"T13", v2j(t13)},                    {"T14", v2j(t14)},
          {"ascending", t13.applicable && t13.condI}, {"descending", t14.applicable && t14.condI}};
}

int runSearchT11(const std::string& outSpec, int diMax, int djMax) {
  T11SearchSpec spec;
  spec.diMax = diMax;
  spec.djMax = djMax;
  std::vector<T11Finding> fs = searchCounterexampleT11(spec);
  nlohmann::json arr = nlohmann::json::array();
  int refuting = 0;
  for (const auto& f : fs) {
    refuting += f.refutesI;
    nlohmann::json j{{"context", contextJson(f.ctx)},
                     {"gaDelta", f.gaDelta},
                     {"agDelta", agDeltaLocal(f.ctx)},
                     {"verdicts", verdictsJson(f.ctx)},
                     {"refutesT11i", f.refutesI},
                     {"nonNecessityT11ii", f.nonNecessityII}};
    if (!f.witnessGraph6.empty()) {
      j["witnessGraph6"] = f.witnessGraph6;
      j["witnessN"] = f.witnessN;
      j["gaDeltaGlobal"] = f.gaDeltaGlobal;
    }
    arr.push_back(std::move(j));
  }
  emitText(arr.dump(2) + "\n", outSpec);
  std::cerr << fs.size() << " findings (" << refuting << " refuting condition (i))\n";
  return 0;
}

int runProblem1(const InputOpts& in, const std::string& outSpec, int precision) {
  std::vector<Graph> gs = loadGraphs(in);
  Problem1Report rep = problem1Scan(gs, precision);
  auto f2j = [](const Problem1Finding& f) {
    return nlohmann::json{{"graph6", f.graph6},
                          {"edge", {f.edge.first, f.edge.second}},
                          {"gaDelta", f.gaDelta},
                          {"agDelta", f.agDelta},
                          {"gaCandidate", f.gaCandidate},
                          {"agCandidate", f.agCandidate}};
  };
  nlohmann::json j{{"precisionDigits", rep.precisionDigits},
                   {"candidateThreshold", "1e-" + std::to_string(rep.precisionDigits / 2)},
                   {"edgesScanned", rep.edgesScanned}};
  j["smallestGaDelta"] = nlohmann::json::array();
  for (const auto& f : rep.smallestGa) j["smallestGaDelta"].push_back(f2j(f));
  j["smallestAgDelta"] = nlohmann::json::array();
  for (const auto& f : rep.smallestAg) j["smallestAgDelta"].push_back(f2j(f));
  emitText(j.dump(2) + "\n", outSpec);
  long long candidates = 0;
  for (const auto& f : rep.smallestGa) candidates += f.gaCandidate;
  for (const auto& f : rep.smallestAg) candidates += f.agCandidate;
  std::cerr << rep.edgesScanned << " edges scanned, " << candidates
            << " equality candidates (open problem)\n";
  return 0;
}

int runEnumerate(int n, const std::string& outSpec) {
  std::string text;
  for (const Graph& g : enumerateConnected(n)) text += writeGraph6(g) + "\n";
  emitText(text, outSpec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-based topological indices: computation, bound/relation verification, "
               "edge-deletion analysis"};
  app.require_subcommand(1);

  InputOpts in;
  std::string outSpec;
  double tol = 1e-9;
  int jobs = 1, precision = 50, nMax = 2000, diMax = 50, djMax = 2000, enumN = 7;
  std::string kRange;
  bool allEdges = false;

  auto* cIndices = app.add_subcommand("indices", "compute the index vector per graph");
  addInputOpts(cIndices, in);
  cIndices->add_option("--out", outSpec, "output path, or csv|json for stdout");

  auto* cBounds = app.add_subcommand("verify-bounds", "evaluate bounds T1-T6, C1-C4");
  addInputOpts(cBounds, in);
  cBounds->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cBounds->add_option("--tol", tol, "equality tolerance")->check(CLI::PositiveNumber);
  cBounds->add_option("--jobs", jobs, "worker threads");

  auto* cRel = app.add_subcommand("verify-relations", "evaluate relations T7, C5, T9, T10");
  addInputOpts(cRel, in);
  cRel->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cRel->add_option("--tol", tol, "equality tolerance")->check(CLI::PositiveNumber);
  cRel->add_option("--jobs", jobs, "worker threads");

  auto* cChrom = app.add_subcommand("chromatic-check", "chromatic bounds and L(n,k) scans");
  addInputOpts(cChrom, in, false);
  cChrom->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cChrom->add_option("--tol", tol, "equality tolerance");
  cChrom->add_option("--k", kRange, "k or k1..k2 for the L(n,k) scan");
  cChrom->add_option("--n-max", nMax, "largest n for the L(n,k) scan");

  auto* cEdge = app.add_subcommand("edge-effects", "per-edge deletion deltas and conditions");
  addInputOpts(cEdge, in);
  cEdge->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cEdge->add_flag("--all-edges", allEdges, "analyze every edge (default)");

  auto* cT11 = app.add_subcommand("search-t11", "search for condition-(i) refutations");
  cT11->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cT11->add_option("--di-max", diMax, "endpoint degree limit for side i");
  cT11->add_option("--dj-max", djMax, "endpoint degree limit for side j");

  auto* cP1 = app.add_subcommand("problem1", "high-precision near-equality scan");
  addInputOpts(cP1, in);
  cP1->add_option("--out", outSpec, "output path, or csv|json for stdout");
  cP1->add_option("--precision", precision, "significant digits (>= 15)");

  auto* cEnum = app.add_subcommand("enumerate", "connected graphs up to isomorphism");
  cEnum->add_option("--n", enumN, "vertex count (1..8)")->required();
  cEnum->add_option("--out", outSpec, "output path (graph6 lines)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cIndices->parsed()) return runIndices(in, outSpec);
    if (cBounds->parsed()) return runVerify(in, outSpec, tol, jobs, false);
    if (cRel->parsed()) return runVerify(in, outSpec, tol, jobs, true);
    if (cChrom->parsed()) return runChromatic(in, outSpec, kRange, nMax, tol);
    if (cEdge->parsed()) {
      (void)allEdges;
      return runEdgeEffects(in, outSpec);
    }
    if (cT11->parsed()) return runSearchT11(outSpec, diMax, djMax);
    if (cP1->parsed()) return runProblem1(in, outSpec, precision);
    if (cEnum->parsed()) return runEnumerate(enumN, outSpec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
