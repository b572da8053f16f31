#ifndef GTI_CHROMATIC_HPP
#define GTI_CHROMATIC_HPP

#include <string>
#include <vector>

#include "gti/graph.hpp"
#include "gti/relations.hpp"

namespace gti {

struct ChromaticResult {
  int chi = 0;
  std::vector<int> coloring;       // proper, uses exactly chi colors 0..chi-1
  std::vector<int> cliqueWitness;  // clique of size <= chi (lower bound)
};

// Exact chromatic number by branch and bound: DSATUR upper bound, clique
// lower bound, full backtracking. The certificate is re-verified before
// returning. Throws when n exceeds vertexLimit.
ChromaticResult chromaticNumber(const Graph& g, int vertexLimit = 16);

// χ(L(n,k)): k+1 for 2 <= k <= n-2, 2 for k=1, n for k=n-1.
int chiL(int n, int k);

// Tests χ(G) <= 2GA(G)/avg-degree; equality expected exactly on complete
// graphs. A violation is a finding, not an assertion failure.
RelationReport conjecture1Check(const Graph& g, double tol = 1e-9, int vertexLimit = 16);

// Verifies the chain χ(G) <= n <= 2AG(G)/avg-degree.
struct ChainReport {
  bool applicable = false;
  std::string reason;
  int chi = 0;
  int n = 0;
  double agBound = 0.0;  // 2AG/d̄ = n·AG/m
  bool holdsChiN = false;
  bool holdsNAg = false;
  double slack = 0.0;    // agBound - chi
  bool equality = false;
  bool extremalMatch = false;  // complete graph
};

ChainReport agChromaticChain(const Graph& g, double tol = 1e-9, int vertexLimit = 16);

// 2GA(L(n,k))/d̄ and its excess over χ(L(n,k)) via closed forms.
double theorem8Bound(int k, int n);
double theorem8Excess(int k, int n);  // r(n) = bound - (k+1)

// Threshold scan: smallest n* with r(n) >= 0 for all n in [n*, nMax],
// plus O(√n)-growth evidence.
struct Theorem8Scan {
  int k = 0;
  int nMax = 0;
  bool thresholdFound = false;
  int nStar = 0;
  double excessAtNMax = 0.0;
  double growthAtHalf = 0.0;  // r(nMax/2)/√(nMax/2)
  double growthAtNMax = 0.0;  // r(nMax)/√(nMax)
};

Theorem8Scan theorem8Scan(int k, int nMax);

// Search for χ(G) > 2AG(G)/Δ. Reports the maximum χ·Δ/(2AG) ratio seen and
// any graph exceeding 1 (none is known; this is an open question).
struct OpenQuestionScan {
  double maxRatio = 0.0;
  std::string maxWitnessGraph6;
  int graphsScanned = 0;
  std::vector<std::string> violations;  // graph6 of any graph with ratio > 1
};

OpenQuestionScan agDeltaOpenQuestion(const std::vector<Graph>& graphs, double tol = 1e-9,
                                     int vertexLimit = 16);

// Same ratio for L(n,k) via closed forms: χ(L)·Δ/(2AG(L)).
double agDeltaRatioL(int n, int k);

}  // namespace gti

#endif  // GTI_CHROMATIC_HPP
