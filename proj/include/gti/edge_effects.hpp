#ifndef GTI_EDGE_EFFECTS_HPP
#define GTI_EDGE_EFFECTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gti/bigfloat.hpp"
#include "gti/graph.hpp"

namespace gti {

// Degree multiset stored as sorted (degree, count) pairs so that search
// configurations with thousands of identical neighbors stay O(1).
struct DegreeMultiset {
  std::vector<std::pair<int, long long>> items;  // sorted by degree

  static DegreeMultiset fromValues(std::vector<int> values);
  void add(int degree, long long count);
  long long size() const;
  bool empty() const { return items.empty(); }
  int minDeg() const { return items.front().first; }
  int maxDeg() const { return items.back().first; }
  bool operator==(const DegreeMultiset&) const = default;
};

// Everything the deletion deltas and the per-edge sufficient conditions need
// to know about one edge: endpoint degrees and the degrees of the remaining
// neighbors on each side. When the edge is pendant, endpoint i is the
// pendant one. dR/dS range over the full neighborhoods (they include the
// partner endpoint); dMax/dMin exclude it.
struct EdgeLocalContext {
  int di = 0, dj = 0;
  DegreeMultiset nbrI, nbrJ;  // |nbrI| = di-1, |nbrJ| = dj-1

  int dR() const { return nbrI.empty() ? dj : std::max(nbrI.maxDeg(), dj); }
  int dS() const { return nbrJ.empty() ? di : std::max(nbrJ.maxDeg(), di); }
  std::optional<int> dMinI() const;
  std::optional<int> dMaxI() const;
  std::optional<int> dMinJ() const;
  std::optional<int> dMaxJ() const;
  bool pendant() const { return di == 1; }
  bool operator==(const EdgeLocalContext&) const = default;
};

EdgeLocalContext edgeContext(const Graph& g, int u, int v);

// GA(G) - GA(G-e) and AG(G) - AG(G-e) from the local context alone.
double gaDeltaLocal(const EdgeLocalContext& ctx);
double agDeltaLocal(const EdgeLocalContext& ctx);

BigFloat gaDeltaLocalHP(const EdgeLocalContext& ctx, int precisionDigits);
BigFloat agDeltaLocalHP(const EdgeLocalContext& ctx, int precisionDigits);

enum class DeltaMethod { LocalFormula, GlobalRecompute };

struct DeltaResult {
  double gaDelta = 0.0;
  double agDelta = 0.0;
  DeltaMethod method = DeltaMethod::GlobalRecompute;
};

// Oracle for the local formulas: recompute both indices on g and on g-e.
DeltaResult deltaGlobal(const Graph& g, int u, int v);

struct ConditionVerdict {
  bool applicable = false;
  std::string reason;
  bool condI = false;
  bool condII = false;
  bool satisfied() const { return applicable && (condI || condII); }
};

// Refutation target: (i) di <= dR and dj <= dS;
// (ii) max(di/dj, dj/di) <= min(di/dR, dj/dS).
ConditionVerdict checkT11(const EdgeLocalContext& ctx);

// Pendant edge, guarantees gaDelta > 0: (i) dMinJ >= dj;
// (ii) √dMaxJ / (2√(dj - 1/2 + 6·dMaxJ)) <= √dj/(dj+1).
ConditionVerdict checkT12(const EdgeLocalContext& ctx);

// Non-pendant edge, guarantees gaDelta > 0: (i) di <= dMinI and dj <= dMinJ;
// (ii) max(di/dj, dj/di) <= min((di-1/2)/dMaxI, (dj-1/2)/dMaxJ).
ConditionVerdict checkT13(const EdgeLocalContext& ctx);

// Guarantees agDelta > 0: (i) di > dMaxI and dj > dMaxJ, where a pendant
// endpoint counts as infinitely large ratio; (ii) the two normalized-gap
// terms sum to at most (di+dj)/√(di·dj), pendant side contributing 0.
ConditionVerdict checkT14(const EdgeLocalContext& ctx);

struct EdgeAnalysis {
  Edge edge;
  EdgeLocalContext ctx;
  DeltaResult delta;  // local-formula values
  ConditionVerdict t11, t12, t13, t14;
  bool ascending = false;   // T13(i) on a non-pendant edge
  bool descending = false;  // T14(i)
};

std::vector<EdgeAnalysis> classifyEdges(const Graph& g);

// Builds a graph realizing the context: the edge v0~v1, one fresh vertex per
// required neighbor, and pendant fillers raising each neighbor to its degree.
// edgeContext(result, 0, 1) reproduces ctx exactly.
Graph realizeContext(const EdgeLocalContext& ctx);
long long realizedSize(const EdgeLocalContext& ctx);

struct T11SearchSpec {
  int diMax = 50;
  int djMax = 2000;
  int maxFindings = 25;
  long long realizeCap = 300000;  // realize witnesses only up to this size
};

struct T11Finding {
  EdgeLocalContext ctx;
  double gaDelta = 0.0;
  bool refutesI = false;        // T11(i) satisfied yet gaDelta < 0
  bool nonNecessityII = false;  // T11(ii) hypothesis fails yet gaDelta > 0
  bool t13iiHolds = false;
  std::string witnessGraph6;    // set when realized
  long long witnessN = 0;
  double gaDeltaGlobal = 0.0;   // recomputed on the witness
};

// Scans uniform-plus-one-exception neighbor shapes. Returns (a) every
// configuration refuting T11(i) and (b) a capped sample of configurations
// where T11(ii)'s hypothesis fails, gaDelta > 0 and T13(ii) certifies the
// increase. The smallest findings are realized and re-verified globally.
std::vector<T11Finding> searchCounterexampleT11(const T11SearchSpec& spec);

struct PhenomenaWitness {
  EdgeLocalContext ctx;
  double deltaLocal = 0.0;
  double deltaGlobalValue = 0.0;
  std::string witnessGraph6;
  long long witnessN = 0;
};

struct PhenomenaReport {
  // pendant-edge deletion that increases GA (gaDelta < 0)
  std::optional<PhenomenaWitness> pendantGaDecrease;
  // ascending edge whose deletion increases AG (agDelta < 0)
  std::optional<PhenomenaWitness> ascendingAgDecrease;
};

// Searches configuration grids for the two sign phenomena that cannot occur
// on very small graphs, realizes the smallest witnesses found and verifies
// them by global recomputation.
PhenomenaReport searchPhenomena(int djMax = 600, long long realizeCap = 300000);

struct Problem1Finding {
  std::string graph6;
  Edge edge;
  std::string gaDelta;  // decimal, precisionDigits digits
  std::string agDelta;
  double gaDeltaApprox = 0.0;
  double agDeltaApprox = 0.0;
  bool gaCandidate = false;  // |gaDelta| below the candidate threshold
  bool agCandidate = false;
};

struct Problem1Report {
  int precisionDigits = 50;
  long long edgesScanned = 0;
  // sorted ascending by the respective |delta|
  std::vector<Problem1Finding> smallestGa;
  std::vector<Problem1Finding> smallestAg;
};

// High-precision scan for GA(G) = GA(G-e) / AG(G) = AG(G-e) candidates.
// Exact equality is an open problem: anything below 10^(-precision/2) is
// reported as a CANDIDATE, never as a proven equality.
Problem1Report problem1Scan(const std::vector<Graph>& graphs, int precisionDigits = 50,
                            int keep = 5);

}  // namespace gti

#endif  // GTI_EDGE_EFFECTS_HPP
