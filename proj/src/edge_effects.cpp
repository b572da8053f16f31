#include "gti/edge_effects.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gti/graph6.hpp"
#include "gti/indices.hpp"

namespace gti {

DegreeMultiset DegreeMultiset::fromValues(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  DegreeMultiset ms;
  for (int v : values) {
    if (!ms.items.empty() && ms.items.back().first == v)
      ms.items.back().second++;
    else
      ms.items.emplace_back(v, 1);
  }
  return ms;
}

void DegreeMultiset::add(int degree, long long count) {
  if (count <= 0) return;
  auto it = std::lower_bound(items.begin(), items.end(), std::make_pair(degree, 0LL));
  if (it != items.end() && it->first == degree)
    it->second += count;
  else
    items.insert(it, {degree, count});
}

long long DegreeMultiset::size() const {
  long long s = 0;
  for (const auto& [d, c] : items) s += c;
  return s;
}

std::optional<int> EdgeLocalContext::dMinI() const {
  return nbrI.empty() ? std::nullopt : std::optional<int>(nbrI.minDeg());
}
std::optional<int> EdgeLocalContext::dMaxI() const {
  return nbrI.empty() ? std::nullopt : std::optional<int>(nbrI.maxDeg());
}
std::optional<int> EdgeLocalContext::dMinJ() const {
  return nbrJ.empty() ? std::nullopt : std::optional<int>(nbrJ.minDeg());
}
std::optional<int> EdgeLocalContext::dMaxJ() const {
  return nbrJ.empty() ? std::nullopt : std::optional<int>(nbrJ.maxDeg());
}

EdgeLocalContext edgeContext(const Graph& g, int u, int v) {
  if (!g.hasEdge(u, v)) throw std::invalid_argument("edgeContext: not an edge");
  if (g.degree(v) == 1 && g.degree(u) > 1) std::swap(u, v);  // pendant endpoint is i
  EdgeLocalContext ctx;
  ctx.di = g.degree(u);
  ctx.dj = g.degree(v);
  std::vector<int> degsI, degsJ;
  for (int w : g.neighbors(u))
    if (w != v) degsI.push_back(g.degree(w));
  for (int w : g.neighbors(v))
    if (w != u) degsJ.push_back(g.degree(w));
  ctx.nbrI = DegreeMultiset::fromValues(std::move(degsI));
  ctx.nbrJ = DegreeMultiset::fromValues(std::move(degsJ));
  return ctx;
}

namespace {

// one side's contribution to GA(G) - GA(G-e): endpoint degree drops d -> d-1
double gaSide(int d, const DegreeMultiset& nbrs) {
  double s = 0.0;
  for (const auto& [k, c] : nbrs.items) {
    double dk = static_cast<double>(d) * k;
    s += c * 2.0 * (std::sqrt(dk) / (d + k) - std::sqrt(dk - k) / (d + k - 1));
  }
  return s;
}

double agSide(int d, const DegreeMultiset& nbrs) {
  double s = 0.0;
  for (const auto& [k, c] : nbrs.items) {
    double dk = static_cast<double>(d) * k;
    s += c * 0.5 * ((d + k) / std::sqrt(dk) - (d + k - 1) / std::sqrt(dk - k));
  }
  return s;
}

}  // namespace

double gaDeltaLocal(const EdgeLocalContext& ctx) {
  double s = 2.0 * std::sqrt(static_cast<double>(ctx.di) * ctx.dj) / (ctx.di + ctx.dj);
  s += gaSide(ctx.di, ctx.nbrI);
  s += gaSide(ctx.dj, ctx.nbrJ);
  return s;
}

double agDeltaLocal(const EdgeLocalContext& ctx) {
  double s = (ctx.di + ctx.dj) / (2.0 * std::sqrt(static_cast<double>(ctx.di) * ctx.dj));
  s += agSide(ctx.di, ctx.nbrI);
  s += agSide(ctx.dj, ctx.nbrJ);
  return s;
}

BigFloat gaDeltaLocalHP(const EdgeLocalContext& ctx, int digits) {
  // per-edge GA term 2√A/B with integer A, B
  auto term = [&](long long a, long long b) {
    return BigFloat::sqrtOfInt(a, digits).mulInt(2).divInt(b);
  };
  BigFloat s = term(static_cast<long long>(ctx.di) * ctx.dj, ctx.di + ctx.dj);
  for (const auto* side : {&ctx.nbrI, &ctx.nbrJ}) {
    int d = (side == &ctx.nbrI) ? ctx.di : ctx.dj;
    for (const auto& [k, c] : side->items) {
      long long dk = static_cast<long long>(d) * k;
      BigFloat t = term(dk, d + k) - term(dk - k, d + k - 1);
      s = s + t.mulInt(c);
    }
  }
  return s;
}

BigFloat agDeltaLocalHP(const EdgeLocalContext& ctx, int digits) {
  // (a)/√A = a·√A/A, so only integer square roots and small divisions occur
  auto term = [&](long long num, long long a) {
    return BigFloat::sqrtOfInt(a, digits).mulInt(num).divInt(a);
  };
  long long didj = static_cast<long long>(ctx.di) * ctx.dj;
  BigFloat s = term(ctx.di + ctx.dj, didj).divInt(2);
  for (const auto* side : {&ctx.nbrI, &ctx.nbrJ}) {
    int d = (side == &ctx.nbrI) ? ctx.di : ctx.dj;
    for (const auto& [k, c] : side->items) {
      long long dk = static_cast<long long>(d) * k;
      BigFloat t = term(d + k, dk) - term(d + k - 1, dk - k);
      s = s + t.mulInt(c).divInt(2);
    }
  }
  return s;
}

DeltaResult deltaGlobal(const Graph& g, int u, int v) {
  IndexVector before = indexVector(g);
  IndexVector after = indexVector(deleteEdge(g, u, v));
  return {before.ga - after.ga, before.ag - after.ag, DeltaMethod::GlobalRecompute};
}

namespace {

// a/b <= c/d for positive integers
bool fracLeq(long long a, long long b, long long c, long long d) { return a * d <= c * b; }

}  // namespace

ConditionVerdict checkT11(const EdgeLocalContext& ctx) {
  ConditionVerdict v;
  v.applicable = true;
  long long di = ctx.di, dj = ctx.dj, dR = ctx.dR(), dS = ctx.dS();
  v.condI = di <= dR && dj <= dS;
  // max(di/dj, dj/di) <= min(di/dR, dj/dS)
  long long p = std::max(di, dj), q = std::min(di, dj);
  bool iLeft = fracLeq(di, dR, dj, dS);  // di/dR <= dj/dS ?
  long long mn = iLeft ? di : dj, md = iLeft ? dR : dS;
  v.condII = fracLeq(p, q, mn, md);
  return v;
}

ConditionVerdict checkT12(const EdgeLocalContext& ctx) {
  ConditionVerdict v;
  if (ctx.di != 1) {
    v.reason = "non-pendant edge";
    return v;
  }
  if (ctx.dj < 2) {
    v.reason = "both endpoints pendant";
    return v;
  }
  v.applicable = true;
  __int128 dj = ctx.dj, mx = *ctx.dMaxJ();
  v.condI = *ctx.dMinJ() >= ctx.dj;
  // squared and cleared of denominators:
  // dMaxJ (dj+1)^2 <= 4 dj^2 - 2 dj + 24 dj dMaxJ
  v.condII = mx * (dj + 1) * (dj + 1) <= 4 * dj * dj - 2 * dj + 24 * dj * mx;
  return v;
}

ConditionVerdict checkT13(const EdgeLocalContext& ctx) {
  ConditionVerdict v;
  if (ctx.di < 2 || ctx.dj < 2) {
    v.reason = "pendant edge";
    return v;
  }
  v.applicable = true;
  long long di = ctx.di, dj = ctx.dj;
  v.condI = di <= *ctx.dMinI() && dj <= *ctx.dMinJ();
  // max(di/dj, dj/di) <= min((2di-1)/(2 dMaxI), (2dj-1)/(2 dMaxJ))
  long long p = std::max(di, dj), q = std::min(di, dj);
  long long mi = *ctx.dMaxI(), mj = *ctx.dMaxJ();
  bool iLeft = fracLeq(2 * di - 1, 2 * mi, 2 * dj - 1, 2 * mj);
  long long mn = iLeft ? 2 * di - 1 : 2 * dj - 1, md = iLeft ? 2 * mi : 2 * mj;
  v.condII = fracLeq(p, q, mn, md);
  return v;
}

ConditionVerdict checkT14(const EdgeLocalContext& ctx) {
  ConditionVerdict v;
  if (ctx.dj < 2) {
    v.reason = "both endpoints pendant";
    return v;
  }
  v.applicable = true;
  bool pendant = ctx.pendant();
  // (i): each endpoint degree strictly above all its other neighbors';
  // a pendant endpoint has none, its ratio counts as infinite.
  bool sideI = pendant ? true : ctx.di > *ctx.dMaxI();
  v.condI = sideI && ctx.dj > *ctx.dMaxJ();
  double lhs = 0.0;
  if (!pendant) {
    double mi = *ctx.dMaxI();
    lhs += (mi - ctx.di + 1) / (2.0 * std::sqrt(mi * ctx.di));
  }
  double mj = *ctx.dMaxJ();
  lhs += (mj - ctx.dj + 1) / (2.0 * std::sqrt(mj * ctx.dj));
  double rhs = (ctx.di + ctx.dj) / std::sqrt(static_cast<double>(ctx.di) * ctx.dj);
  v.condII = lhs <= rhs;
  return v;
}

std::vector<EdgeAnalysis> classifyEdges(const Graph& g) {
  std::vector<EdgeAnalysis> out;
  out.reserve(static_cast<size_t>(g.m()));
  for (const auto& [u, v] : g.edges()) {
    EdgeAnalysis ea;
    ea.edge = {u, v};
    ea.ctx = edgeContext(g, u, v);
    ea.delta = {gaDeltaLocal(ea.ctx), agDeltaLocal(ea.ctx), DeltaMethod::LocalFormula};
    ea.t11 = checkT11(ea.ctx);
    ea.t12 = checkT12(ea.ctx);
    ea.t13 = checkT13(ea.ctx);
    ea.t14 = checkT14(ea.ctx);
    ea.ascending = ea.t13.applicable && ea.t13.condI;
    ea.descending = ea.t14.applicable && ea.t14.condI;
    out.push_back(std::move(ea));
  }
  return out;
}

long long realizedSize(const EdgeLocalContext& ctx) {
  long long n = 2;
  for (const auto* side : {&ctx.nbrI, &ctx.nbrJ})
    for (const auto& [d, c] : side->items) n += c * d;
  return n;
}

Graph realizeContext(const EdgeLocalContext& ctx) {
  if (ctx.nbrI.size() != ctx.di - 1 || ctx.nbrJ.size() != ctx.dj - 1)
    throw std::invalid_argument("realizeContext: multiset sizes must be d-1");
  if (ctx.dj == 1 && ctx.di > 1)
    throw std::invalid_argument("realizeContext: pendant endpoint must be i");
  for (const auto* side : {&ctx.nbrI, &ctx.nbrJ})
    for (const auto& [d, c] : side->items)
      if (d < 1) throw std::invalid_argument("realizeContext: neighbor degree < 1");
  long long total = realizedSize(ctx);
  if (total > 20000000) throw std::invalid_argument("realizeContext: graph too large");

  std::vector<Edge> es{{0, 1}};
  int next = 2;
  for (const auto* side : {&ctx.nbrI, &ctx.nbrJ}) {
    int endpoint = (side == &ctx.nbrI) ? 0 : 1;
    for (const auto& [d, c] : side->items)
      for (long long t = 0; t < c; t++) {
        int nb = next++;
        es.emplace_back(endpoint, nb);
        for (int f = 0; f < d - 1; f++) es.emplace_back(nb, next++);
      }
  }
  return buildGraph(next, es);
}

namespace {

EdgeLocalContext makeSearchContext(int di, int dj, int a, int b, bool excI, bool excJ) {
  EdgeLocalContext ctx;
  ctx.di = di;
  ctx.dj = dj;
  long long ni = di - 1, nj = dj - 1;
  if (excI && ni >= 1) {
    ctx.nbrI.add(dj, 1);
    ni--;
  }
  ctx.nbrI.add(a, ni);
  if (excJ && nj >= 1) {
    ctx.nbrJ.add(dj, 1);
    nj--;
  }
  ctx.nbrJ.add(b, nj);
  return ctx;
}

void realizeFinding(T11Finding& f, long long cap) {
  long long size = realizedSize(f.ctx);
  if (size > cap) return;
  Graph g = realizeContext(f.ctx);
  if (!(edgeContext(g, 0, 1) == f.ctx))
    throw std::logic_error("realizeContext: context failed to round-trip");
  f.witnessGraph6 = writeGraph6(g);
  f.witnessN = g.n();
  f.gaDeltaGlobal = deltaGlobal(g, 0, 1).gaDelta;
}

}  // namespace

std::vector<T11Finding> searchCounterexampleT11(const T11SearchSpec& spec) {
  if (spec.diMax < 1 || spec.djMax < spec.diMax)
    throw std::invalid_argument("searchCounterexampleT11: empty search space");
  std::vector<T11Finding> refutations, nonNecessity;
  for (int di = 1; di <= spec.diMax; di++) {
    for (int dj = std::max(di, 2); dj <= spec.djMax; dj++) {
      int uniq[4] = {1, 2, di, dj};
      for (int ai = 0; ai < 4; ai++) {
        int a = uniq[ai];
        bool dupA = false;
        for (int t = 0; t < ai; t++) dupA |= uniq[t] == a;
        if (dupA || (di == 1 && ai > 0)) continue;
        for (int bi = 0; bi < 4; bi++) {
          int b = uniq[bi];
          bool dupB = false;
          for (int t = 0; t < bi; t++) dupB |= uniq[t] == b;
          if (dupB) continue;
          for (bool excI : {false, true}) {
            if (excI && di <= 1) continue;
            for (bool excJ : {false, true}) {
              EdgeLocalContext ctx = makeSearchContext(di, dj, a, b, excI, excJ);
              ConditionVerdict t11 = checkT11(ctx);
              double delta = gaDeltaLocal(ctx);
              if (t11.condI && delta < -1e-12) {
                T11Finding f;
                f.ctx = std::move(ctx);
                f.gaDelta = delta;
                f.refutesI = true;
                refutations.push_back(std::move(f));
              } else if (!t11.condII && delta > 1e-12) {
                ConditionVerdict t13 = checkT13(ctx);
                if (t13.applicable && t13.condII) {
                  T11Finding f;
                  f.ctx = std::move(ctx);
                  f.gaDelta = delta;
                  f.nonNecessityII = true;
                  f.t13iiHolds = true;
                  nonNecessity.push_back(std::move(f));
                }
              }
            }
          }
        }
      }
    }
  }
  auto bySize = [](const T11Finding& x, const T11Finding& y) {
    long long sx = realizedSize(x.ctx), sy = realizedSize(y.ctx);
    if (sx != sy) return sx < sy;
    return x.gaDelta < y.gaDelta;
  };
  auto dedup = [&](std::vector<T11Finding>& v) {
    std::sort(v.begin(), v.end(), bySize);
    v.erase(std::unique(v.begin(), v.end(),
                        [](const T11Finding& x, const T11Finding& y) { return x.ctx == y.ctx; }),
            v.end());
  };
  dedup(refutations);
  dedup(nonNecessity);

  std::vector<T11Finding> out;
  int keepA = std::max(1, spec.maxFindings * 4 / 5);
  for (int i = 0; i < static_cast<int>(refutations.size()) && i < keepA; i++)
    out.push_back(std::move(refutations[i]));
  for (int i = 0;
       i < static_cast<int>(nonNecessity.size()) && static_cast<int>(out.size()) < spec.maxFindings;
       i++)
    out.push_back(std::move(nonNecessity[i]));
  for (size_t i = 0; i < out.size() && i < 3; i++) realizeFinding(out[i], spec.realizeCap);
  // always realize the best refutation if the head of the list is a non-necessity record
  for (auto& f : out)
    if (f.refutesI && f.witnessGraph6.empty()) {
      realizeFinding(f, spec.realizeCap);
      break;
    }
  return out;
}

PhenomenaReport searchPhenomena(int djMax, long long realizeCap) {
  PhenomenaReport rep;
  const int ladder[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 14, 16, 20, 25, 32, 40, 50, 64, 80, 100, 130, 160, 200};

  // pendant edge whose deletion increases GA: hub with many mid-degree neighbors
  for (int dj = 4; dj <= djMax; dj++) {
    for (int b : ladder) {
      if (b > dj) break;
      EdgeLocalContext ctx = makeSearchContext(1, dj, 1, b, false, false);
      double d = gaDeltaLocal(ctx);
      if (d < -1e-9) {
        long long size = realizedSize(ctx);
        if (size <= realizeCap &&
            (!rep.pendantGaDecrease || size < rep.pendantGaDecrease->witnessN)) {
          PhenomenaWitness w;
          w.ctx = ctx;
          w.deltaLocal = d;
          Graph g = realizeContext(ctx);
          w.witnessN = g.n();
          w.witnessGraph6 = writeGraph6(g);
          w.deltaGlobalValue = deltaGlobal(g, 0, 1).gaDelta;
          rep.pendantGaDecrease = std::move(w);
        }
      }
    }
  }

  // ascending edge whose deletion increases AG: low-degree endpoints whose
  // other neighbors are heavy hubs
  for (int di = 2; di <= 6; di++) {
    for (int dj = di; dj <= 6; dj++) {
      for (int k : ladder) {
        if (k < dj) continue;  // ascending needs neighbor degrees >= endpoint degree
        EdgeLocalContext ctx;
        ctx.di = di;
        ctx.dj = dj;
        ctx.nbrI.add(k, di - 1);
        ctx.nbrJ.add(k, dj - 1);
        ConditionVerdict t13 = checkT13(ctx);
        if (!t13.applicable || !t13.condI) continue;
        double d = agDeltaLocal(ctx);
        if (d < -1e-9) {
          long long size = realizedSize(ctx);
          if (size <= realizeCap &&
              (!rep.ascendingAgDecrease || size < rep.ascendingAgDecrease->witnessN)) {
            PhenomenaWitness w;
            w.ctx = ctx;
            w.deltaLocal = d;
            Graph g = realizeContext(ctx);
            w.witnessN = g.n();
            w.witnessGraph6 = writeGraph6(g);
            w.deltaGlobalValue = deltaGlobal(g, 0, 1).agDelta;
            rep.ascendingAgDecrease = std::move(w);
          }
        }
      }
    }
  }
  return rep;
}

Problem1Report problem1Scan(const std::vector<Graph>& graphs, int precisionDigits, int keep) {
  if (precisionDigits < 15) throw std::invalid_argument("problem1Scan: precision >= 15 required");
  Problem1Report rep;
  rep.precisionDigits = precisionDigits;
  BigFloat threshold = BigFloat::pow10Negative(precisionDigits / 2, precisionDigits);

  struct Row {
    Problem1Finding finding;
    BigFloat gaAbs, agAbs;
  };
  std::vector<Row> rows;
  for (const Graph& g : graphs) {
    std::string g6 = writeGraph6(g);
    for (const auto& [u, v] : g.edges()) {
      EdgeLocalContext ctx = edgeContext(g, u, v);
      BigFloat ga = gaDeltaLocalHP(ctx, precisionDigits);
      BigFloat ag = agDeltaLocalHP(ctx, precisionDigits);
      Row r;
      r.finding.graph6 = g6;
      r.finding.edge = {u, v};
      r.finding.gaDelta = ga.toString(precisionDigits);
      r.finding.agDelta = ag.toString(precisionDigits);
      r.finding.gaDeltaApprox = ga.toDouble();
      r.finding.agDeltaApprox = ag.toDouble();
      r.gaAbs = ga.abs();
      r.agAbs = ag.abs();
      r.finding.gaCandidate = r.gaAbs < threshold;
      r.finding.agCandidate = r.agAbs < threshold;
      rows.push_back(std::move(r));
      rep.edgesScanned++;
    }
  }
  auto takeSmallest = [&](auto cmpKey, std::vector<Problem1Finding>& out) {
    std::vector<int> idx(rows.size());
    for (size_t i = 0; i < idx.size(); i++) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      int c = cmpKey(rows[x]).compare(cmpKey(rows[y]));
      if (c != 0) return c < 0;
      return std::tie(rows[x].finding.graph6, rows[x].finding.edge) <
             std::tie(rows[y].finding.graph6, rows[y].finding.edge);
    });
    for (int i = 0; i < keep && i < static_cast<int>(idx.size()); i++)
      out.push_back(rows[idx[i]].finding);
  };
  takeSmallest([](const Row& r) -> const BigFloat& { return r.gaAbs; }, rep.smallestGa);
  takeSmallest([](const Row& r) -> const BigFloat& { return r.agAbs; }, rep.smallestAg);
  return rep;
}

}  // namespace gti
