#include "gti/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gti/graph6.hpp"
#include "gti/indices.hpp"

namespace gti {

namespace {

struct MaskAdj {
  std::vector<uint32_t> adj;
  int n;
  explicit MaskAdj(const Graph& g) : adj(g.n(), 0), n(g.n()) {
    for (const auto& [u, v] : g.edges()) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
  }
};

struct CliqueSearch {
  const MaskAdj& g;
  uint32_t best = 0;
  int bestSize = 0;

  void expand(uint32_t clique, int size, uint32_t cand) {
    if (size + std::popcount(cand) <= bestSize) return;
    if (cand == 0) {
      if (size > bestSize) {
        bestSize = size;
        best = clique;
      }
      return;
    }
    while (cand) {
      if (size + std::popcount(cand) <= bestSize) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(clique | (1u << v), size + 1, cand & g.adj[v]);
    }
  }
};

struct ColorSearch {
  const MaskAdj& g;
  int lb;
  std::vector<int> color;
  std::vector<int> bestColor;
  int ub;

  ColorSearch(const MaskAdj& g, int lowerBound, int upperBound, std::vector<int> greedy)
      : g(g), lb(lowerBound), color(g.n, -1), bestColor(std::move(greedy)), ub(upperBound) {}

  // DSATUR branch and bound: color the most saturated uncolored vertex next.
  void solve(int colored, int used) {
    if (used >= ub) return;
    if (colored == g.n) {
      ub = used;
      bestColor = color;
      return;
    }
    int pick = -1, pickSat = -1, pickDeg = -1;
    for (int v = 0; v < g.n; v++) {
      if (color[v] >= 0) continue;
      uint32_t satMask = 0;
      for (uint32_t nb = g.adj[v]; nb;) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[u] >= 0) satMask |= 1u << color[u];
      }
      int sat = std::popcount(satMask);
      int deg = std::popcount(g.adj[v]);
      if (sat > pickSat || (sat == pickSat && deg > pickDeg)) {
        pick = v;
        pickSat = sat;
        pickDeg = deg;
      }
    }
    uint32_t forbidden = 0;
    for (uint32_t nb = g.adj[pick]; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[u] >= 0) forbidden |= 1u << color[u];
    }
    int limit = std::min(used + 1, ub - 1);
    for (int c = 0; c < limit; c++) {
      if (forbidden & (1u << c)) continue;
      color[pick] = c;
      solve(colored + 1, std::max(used, c + 1));
      color[pick] = -1;
      if (ub == lb) return;
    }
  }
};

std::vector<int> greedyColoring(const MaskAdj& g) {
  // largest-degree-first greedy, gives the initial upper bound
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; i++) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::popcount(g.adj[a]) > std::popcount(g.adj[b]); });
  std::vector<int> color(g.n, -1);
  for (int v : order) {
    uint32_t forbidden = 0;
    for (uint32_t nb = g.adj[v]; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[u] >= 0) forbidden |= 1u << color[u];
    }
    int c = 0;
    while (forbidden & (1u << c)) c++;
    color[v] = c;
  }
  return color;
}

bool isProper(const Graph& g, const std::vector<int>& color, int chi) {
  if (static_cast<int>(color.size()) != g.n()) return false;
  std::vector<char> seen(chi, 0);
  for (int v = 0; v < g.n(); v++) {
    if (color[v] < 0 || color[v] >= chi) return false;
    seen[color[v]] = 1;
  }
  for (char s : seen)
    if (!s) return false;
  for (const auto& [u, v] : g.edges())
    if (color[u] == color[v]) return false;
  return true;
}

}  // namespace

ChromaticResult chromaticNumber(const Graph& g, int vertexLimit) {
  if (g.n() > vertexLimit || g.n() > 31)
    throw std::invalid_argument("chromaticNumber: vertex limit exceeded");
  ChromaticResult res;
  if (g.n() == 0) return res;
  MaskAdj adj(g);

  CliqueSearch cs{adj};
  cs.expand(0, 0, (adj.n == 31) ? 0x7fffffffu : ((1u << adj.n) - 1));
  for (int v = 0; v < adj.n; v++)
    if (cs.best & (1u << v)) res.cliqueWitness.push_back(v);

  std::vector<int> greedy = greedyColoring(adj);
  int ub = 1 + *std::max_element(greedy.begin(), greedy.end());

  ColorSearch search(adj, cs.bestSize, ub, std::move(greedy));
  if (ub > cs.bestSize) search.solve(0, 0);
  res.chi = search.ub;
  res.coloring = search.bestColor;

  if (!isProper(g, res.coloring, res.chi))
    throw std::logic_error("chromaticNumber: certificate failed verification");
  return res;
}

int chiL(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("chiL: 1 <= k <= n-1 required");
  if (k == n - 1) return n;  // K_n
  if (k == 1) return 2;      // star
  return k + 1;
}

RelationReport conjecture1Check(const Graph& g, double tol, int vertexLimit) {
  RelationReport r;
  r.id = RelationId::Conjecture1;
  r.note = "conjecture";
  if (!isConnected(g)) {
    r.reason = "disconnected";
    return r;
  }
  if (g.m() == 0) {
    r.reason = "edgeless";
    return r;
  }
  r.applicable = true;
  IndexVector iv = indexVector(g);
  r.lhs = chromaticNumber(g, vertexLimit).chi;
  r.rhs = g.n() * iv.ga / static_cast<double>(g.m());  // 2GA/d̄
  r.slack = r.rhs - r.lhs;
  r.holds = r.slack >= -tol;
  r.equality = std::fabs(r.slack) <= tol;
  r.extremalMatch = classify(g).complete;
  if (r.equality != r.extremalMatch) r.anomaly = true;
  return r;
}

ChainReport agChromaticChain(const Graph& g, double tol, int vertexLimit) {
  ChainReport r;
  if (!isConnected(g)) {
    r.reason = "disconnected";
    return r;
  }
  if (g.m() == 0) {
    r.reason = "edgeless";
    return r;
  }
  r.applicable = true;
  r.n = g.n();
  r.chi = chromaticNumber(g, vertexLimit).chi;
  IndexVector iv = indexVector(g);
  r.agBound = g.n() * iv.ag / static_cast<double>(g.m());
  r.holdsChiN = r.chi <= r.n;
  r.holdsNAg = static_cast<double>(r.n) <= r.agBound + tol;
  r.slack = r.agBound - r.chi;
  r.equality = std::fabs(r.slack) <= tol;
  r.extremalMatch = classify(g).complete;
  return r;
}

double theorem8Bound(int k, int n) {
  IndexVector iv = familyClosedForms("L", n, k);
  double m = k * (k - 1) / 2.0 + static_cast<double>(k) * (n - k);
  return n * iv.ga / m;
}

double theorem8Excess(int k, int n) { return theorem8Bound(k, n) - (chiL(n, k)); }

Theorem8Scan theorem8Scan(int k, int nMax) {
  if (k < 2 || nMax < k + 2) throw std::invalid_argument("theorem8Scan: k >= 2, nMax >= k+2");
  Theorem8Scan s;
  s.k = k;
  s.nMax = nMax;
  int lastNegative = k + 1;
  for (int n = k + 2; n <= nMax; n++)
    if (theorem8Excess(k, n) < 0) lastNegative = n;
  s.nStar = lastNegative + 1;
  s.thresholdFound = s.nStar <= nMax;
  s.excessAtNMax = theorem8Excess(k, nMax);
  int half = std::max(k + 2, nMax / 2);
  s.growthAtHalf = theorem8Excess(k, half) / std::sqrt(static_cast<double>(half));
  s.growthAtNMax = s.excessAtNMax / std::sqrt(static_cast<double>(nMax));
  return s;
}

OpenQuestionScan agDeltaOpenQuestion(const std::vector<Graph>& graphs, double tol,
                                     int vertexLimit) {
  OpenQuestionScan s;
  for (const Graph& g : graphs) {
    if (!isConnected(g) || g.m() == 0 || g.n() > vertexLimit) continue;
    s.graphsScanned++;
    int chi = chromaticNumber(g, vertexLimit).chi;
    IndexVector iv = indexVector(g);
    int maxDeg = 0;
    for (int v = 0; v < g.n(); v++) maxDeg = std::max(maxDeg, g.degree(v));
    double ratio = chi * maxDeg / (2.0 * iv.ag);
    if (ratio > s.maxRatio) {
      s.maxRatio = ratio;
      s.maxWitnessGraph6 = writeGraph6(g);
    }
    if (ratio > 1.0 + tol) s.violations.push_back(writeGraph6(g));
  }
  return s;
}

double agDeltaRatioL(int n, int k) {
  IndexVector iv = familyClosedForms("L", n, k);
  return chiL(n, k) * (n - 1) / (2.0 * iv.ag);
}

}  // namespace gti
