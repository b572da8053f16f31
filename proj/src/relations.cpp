#include "gti/relations.hpp"

#include <cmath>

namespace gti {

const char* toString(RelationId id) {
  switch (id) {
    case RelationId::T7L: return "T7L";
    case RelationId::T7R: return "T7R";
    case RelationId::C5: return "C5";
    case RelationId::T9L: return "T9L";
    case RelationId::T9R: return "T9R";
    case RelationId::T10L: return "T10L";
    case RelationId::T10R: return "T10R";
    case RelationId::ABCRemark: return "ABCremark";
    case RelationId::Conjecture1: return "Conjecture1";
  }
  return "?";
}

namespace {

void finish(RelationReport& r, double tol, bool extremal) {
  r.slack = r.rhs - r.lhs;
  r.holds = r.slack >= -tol;
  r.equality = std::fabs(r.slack) <= tol;
  r.extremalMatch = extremal;
  if (r.equality != r.extremalMatch) {
    r.anomaly = true;
    r.note = r.equality ? "equality without extremal structure" : "extremal structure without equality";
  }
}

bool gate(const GraphStats& s, RelationReport& r, bool needMinDeg2) {
  if (!s.cls.connected) {
    r.reason = "disconnected";
    return false;
  }
  if (s.prof.n < 2 || s.prof.m == 0) {
    r.reason = "edgeless";
    return false;
  }
  if (needMinDeg2 && s.prof.minDeg < 2) {
    r.reason = "minimum degree < 2";
    return false;
  }
  return true;
}

}  // namespace

std::pair<RelationReport, RelationReport> relationT7(const GraphStats& s, double tol) {
  RelationReport left, right;
  left.id = RelationId::T7L;
  right.id = RelationId::T7R;
  if (!gate(s, left, false)) {
    right.reason = left.reason;
    return {left, right};
  }
  left.applicable = right.applicable = true;
  left.lhs = s.iv.ga;
  left.rhs = s.iv.ag;
  finish(left, tol, s.cls.regular);
  double n = s.prof.n, d = s.prof.minDeg;
  right.lhs = s.iv.ag;
  right.rhs = (d + n - 1) * (d + n - 1) / (4.0 * d * (n - 1)) * s.iv.ga;
  finish(right, tol, s.cls.star || s.cls.complete);
  return {left, right};
}

RelationReport relationC5(const GraphStats& s, double tol) {
  RelationReport r;
  r.id = RelationId::C5;
  if (!gate(s, r, false)) return r;
  r.applicable = true;
  double n = s.prof.n;
  r.lhs = s.iv.ag;
  r.rhs = n * n / (4.0 * (n - 1)) * s.iv.ga;
  finish(r, tol, s.cls.star);
  return r;
}

std::pair<RelationReport, RelationReport> relationT9(const GraphStats& s, double tol) {
  RelationReport left, right;
  left.id = RelationId::T9L;
  right.id = RelationId::T9R;
  if (!gate(s, left, true)) {
    right.reason = left.reason;
    return {left, right};
  }
  left.applicable = right.applicable = true;
  double n = s.prof.n, d = s.prof.minDeg;
  left.lhs = d / std::sqrt(2.0 * d - 2.0) * s.iv.abc;
  left.rhs = s.iv.ag;
  finish(left, tol, s.cls.regular);
  right.lhs = s.iv.ag;
  right.rhs = (n - 1) / std::sqrt(2.0 * n - 4.0) * s.iv.abc;
  finish(right, tol, s.cls.complete);
  return {left, right};
}

RelationReport abcRemark(const GraphStats& s, double tol) {
  RelationReport r;
  r.id = RelationId::ABCRemark;
  if (!gate(s, r, true)) return r;
  r.applicable = true;
  r.lhs = std::sqrt(2.0) * s.iv.abc;
  r.rhs = s.iv.ag;
  finish(r, tol, s.cls.cycle);
  return r;
}

std::pair<RelationReport, RelationReport> relationT10(const GraphStats& s, double tol) {
  RelationReport left, right;
  left.id = RelationId::T10L;
  right.id = RelationId::T10R;
  if (!gate(s, left, false)) {
    right.reason = left.reason;
    return {left, right};
  }
  left.applicable = right.applicable = true;
  double n = s.prof.n, d = s.prof.minDeg;
  left.lhs = (d + n - 1) * std::sqrt(d * (n - 1)) / (2.0 * (d * d + (n - 1) * (n - 1))) * s.iv.sdd;
  left.rhs = s.iv.ag;
  finish(left, tol, s.cls.star || s.cls.complete);
  right.lhs = s.iv.ag;
  right.rhs = 0.5 * s.iv.sdd;
  finish(right, tol, s.cls.regular);
  return {left, right};
}

std::vector<RelationReport> verifyRelations(const Graph& g, double tol) {
  GraphStats s = graphStats(g);
  std::vector<RelationReport> out;
  auto [t7l, t7r] = relationT7(s, tol);
  out.push_back(t7l);
  out.push_back(t7r);
  out.push_back(relationC5(s, tol));
  auto [t9l, t9r] = relationT9(s, tol);
  out.push_back(t9l);
  out.push_back(t9r);
  auto [t10l, t10r] = relationT10(s, tol);
  out.push_back(t10l);
  out.push_back(t10r);
  out.push_back(abcRemark(s, tol));
  return out;
}

}  // namespace gti
