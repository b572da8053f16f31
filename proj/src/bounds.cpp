#include "gti/bounds.hpp"

#include <cmath>

namespace gti {

const char* toString(BoundId id) {
  switch (id) {
    case BoundId::T1: return "T1";
    case BoundId::C1: return "C1";
    case BoundId::T2: return "T2";
    case BoundId::C2: return "C2";
    case BoundId::T3: return "T3";
    case BoundId::C3: return "C3";
    case BoundId::T4: return "T4";
    case BoundId::C4: return "C4";
    case BoundId::T5: return "T5";
    case BoundId::T6: return "T6";
  }
  return "?";
}

GraphStats graphStats(const Graph& g) {
  GraphStats s;
  s.prof = degreeProfile(g);
  s.iv = indexVector(g);
  s.cls = classify(g);
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) == 1 || g.degree(v) == 1) s.pendantEdges++;
  return s;
}

namespace {

// Extremal classes by bound: the star/regular/(Δ,1)-semiregular family for
// the δ₁ bounds, regular alone for the corollaries derived by dropping the
// pendant split, star/K3 for the order-only bound.
bool matchesDeltaOneClass(const GraphStats& s) {
  return s.cls.star || s.cls.regular ||
         (s.cls.semiregular && s.cls.semiS == s.prof.maxDeg && s.cls.semiR == 1);
}

double clampRadicand(double x, BoundReport& r) {
  if (x < 0) {
    if (x >= -1e-12) return 0.0;
    r.anomaly = true;
    r.note = "negative radicand";
    return 0.0;
  }
  return x;
}

void finish(BoundReport& r, double tol, bool extremal) {
  r.slack = r.isLower ? r.lhs - r.rhs : r.rhs - r.lhs;
  r.holds = r.slack >= -tol;
  r.equality = std::fabs(r.slack) <= tol;
  r.extremalMatch = extremal;
  if (r.equality != r.extremalMatch) {
    r.anomaly = true;
    if (r.note.empty())
      r.note = r.equality ? "equality without extremal structure" : "extremal structure without equality";
  }
}

bool gateConnected(const GraphStats& s, BoundReport& r) {
  if (!s.cls.connected) {
    r.reason = "disconnected";
    return false;
  }
  if (s.prof.m == 0) {
    r.reason = "edgeless";
    return false;
  }
  return true;
}

bool gateDelta1(const GraphStats& s, BoundReport& r) {
  if (!gateConnected(s, r)) return false;
  if (!s.prof.minNonPendant) {
    r.reason = "no non-pendant vertex";
    return false;
  }
  return true;
}

}  // namespace

BoundReport boundT1(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T1;
  if (!gateDelta1(s, r)) return r;
  r.applicable = true;
  r.lhs = s.iv.ag;
  double p = s.prof.pendantCount, D = s.prof.maxDeg, d1 = *s.prof.minNonPendant;
  double m = static_cast<double>(s.prof.m);
  double inner = static_cast<double>(s.iv.f + 2 * s.iv.m2) - p * (d1 + 1) * (d1 + 1);
  r.rhs = p * (D + 1) / (2.0 * std::sqrt(D)) +
          std::sqrt(clampRadicand((m - p) * inner, r)) / (2.0 * d1);
  finish(r, tol, matchesDeltaOneClass(s));
  return r;
}

BoundReport boundC1(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::C1;
  if (!gateConnected(s, r)) return r;
  r.applicable = true;
  r.lhs = s.iv.ag;
  double m = static_cast<double>(s.prof.m);
  r.rhs = std::sqrt(m * static_cast<double>(s.iv.f + 2 * s.iv.m2)) / (2.0 * s.prof.minDeg);
  finish(r, tol, s.cls.regular);
  return r;
}

BoundReport boundT2(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T2;
  if (!gateDelta1(s, r)) return r;
  r.applicable = true;
  r.lhs = s.iv.ag;
  double p = s.prof.pendantCount, D = s.prof.maxDeg, d1 = *s.prof.minNonPendant;
  double m = static_cast<double>(s.prof.m);
  double rad = static_cast<double>(s.iv.f + 2 * s.iv.m2) - p * (d1 + 1) * (d1 + 1) +
               4.0 * D * D * (m - p) * (m - p - 1);
  r.rhs = p * (D + 1) / (2.0 * std::sqrt(D)) + std::sqrt(clampRadicand(rad, r)) / (2.0 * d1);
  finish(r, tol, matchesDeltaOneClass(s));
  return r;
}

BoundReport boundC2(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::C2;
  if (!gateConnected(s, r)) return r;
  r.applicable = true;
  r.lhs = s.iv.ag;
  double m = static_cast<double>(s.prof.m), D = s.prof.maxDeg;
  double rad = static_cast<double>(s.iv.f + 2 * s.iv.m2) + 4.0 * m * (m - 1) * D * D;
  r.rhs = std::sqrt(clampRadicand(rad, r)) / (2.0 * s.prof.minDeg);
  finish(r, tol, s.cls.regular);
  return r;
}

BoundReport boundT3(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T3;
  if (!gateConnected(s, r)) return r;
  r.applicable = true;
  r.lhs = s.iv.ag;
  // pendant-edge count, not pendant-vertex count: the two differ only on K2,
  // where using p = 2 would falsify the bound.
  double pe = static_cast<double>(s.pendantEdges);
  double m = static_cast<double>(s.prof.m), n = s.prof.n;
  r.rhs = 0.5 * pe * n / std::sqrt(n - 1.0) +
          0.5 * (m - pe) * (std::sqrt((n - 1.0) / 2.0) + std::sqrt(2.0 / (n - 1.0)));
  finish(r, tol, s.cls.star || s.cls.k3);
  return r;
}

BoundReport boundC3(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::C3;
  if (!gateConnected(s, r)) return r;
  if (s.prof.minDeg < 2) {
    r.reason = "minimum degree < 2";
    return r;
  }
  r.applicable = true;
  r.lhs = s.iv.ag;
  double m = static_cast<double>(s.prof.m), n = s.prof.n;
  r.rhs = 0.5 * m * (std::sqrt((n - 1.0) / 2.0) + std::sqrt(2.0 / (n - 1.0)));
  finish(r, tol, s.cls.k3);
  return r;
}

BoundReport boundT4(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T4;
  if (!gateDelta1(s, r)) return r;
  r.applicable = true;
  r.isLower = true;
  r.lhs = s.iv.ag;
  double p = s.prof.pendantCount, D = s.prof.maxDeg, d1 = *s.prof.minNonPendant;
  double m = static_cast<double>(s.prof.m);
  double root = std::sqrt(D * d1);
  double coef = std::sqrt(clampRadicand(2.0 * (m - p) * (D + d1) * root, r)) /
                (D * (D + d1 + 2.0 * root));
  double rad = static_cast<double>(s.iv.f) + 2.0 * m * D * D - p * (3.0 * D * D + 1.0);
  r.rhs = p * (d1 + 1) / (2.0 * std::sqrt(d1)) + coef * std::sqrt(clampRadicand(rad, r));
  finish(r, tol, matchesDeltaOneClass(s));
  return r;
}

BoundReport boundC4(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::C4;
  if (!gateConnected(s, r)) return r;
  if (s.prof.pendantCount > 0) {
    r.reason = "has pendant vertices";
    return r;
  }
  r.applicable = true;
  r.isLower = true;
  r.lhs = s.iv.ag;
  double D = s.prof.maxDeg, d1 = s.prof.minDeg;  // δ₁ = δ when p = 0
  double m = static_cast<double>(s.prof.m);
  double root = std::sqrt(D * d1);
  double coef = std::sqrt(2.0 * m * (D + d1) * root) / (D * (D + d1 + 2.0 * root));
  r.rhs = coef * std::sqrt(static_cast<double>(s.iv.f) + 2.0 * m * D * D);
  finish(r, tol, s.cls.regular);
  return r;
}

BoundReport boundT5(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T5;
  if (!gateDelta1(s, r)) return r;
  r.applicable = true;
  r.isLower = true;
  r.lhs = s.iv.ag;
  double p = s.prof.pendantCount, D = s.prof.maxDeg, d1 = *s.prof.minNonPendant;
  double m = static_cast<double>(s.prof.m);
  double root = std::sqrt(D * d1);
  double coef = std::sqrt(clampRadicand(2.0 * (m - p) * (D + d1) * root, r)) /
                (D + d1 + 2.0 * root);
  double rad = s.iv.sdd - p * (D + 1.0 / D) + 2.0 * (m - p);
  r.rhs = p * (d1 + 1) / (2.0 * std::sqrt(d1)) + coef * std::sqrt(clampRadicand(rad, r));
  finish(r, tol, matchesDeltaOneClass(s));
  return r;
}

BoundReport boundT6(const GraphStats& s, double tol) {
  BoundReport r;
  r.id = BoundId::T6;
  if (!gateDelta1(s, r)) return r;
  r.applicable = true;
  r.isLower = true;
  r.lhs = s.iv.ag;
  double p = s.prof.pendantCount, D = s.prof.maxDeg, d1 = *s.prof.minNonPendant;
  r.rhs = p * (d1 + 1) / (2.0 * std::sqrt(d1)) +
          (static_cast<double>(s.iv.m1) - p * (D + 1)) / (2.0 * D);
  finish(r, tol, matchesDeltaOneClass(s));
  return r;
}

std::vector<BoundReport> verifyBounds(const Graph& g, double tol) {
  GraphStats s = graphStats(g);
  return {boundT1(s, tol), boundC1(s, tol), boundT2(s, tol), boundC2(s, tol),
          boundT3(s, tol), boundC3(s, tol), boundT4(s, tol), boundC4(s, tol),
          boundT5(s, tol), boundT6(s, tol)};
}

}  // namespace gti
