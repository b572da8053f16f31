#ifndef GTI_BOUNDS_HPP
#define GTI_BOUNDS_HPP

#include <string>
#include <vector>

#include "gti/graph.hpp"
#include "gti/indices.hpp"

namespace gti {

// Catalog of AG bounds. T1..T6 are the main bounds, C1..C4 their
// corollaries. Upper bounds: T1, T2, T3, C1, C2, C3; lower: T4, T5, T6, C4.
enum class BoundId { T1, C1, T2, C2, T3, C3, T4, C4, T5, T6 };

const char* toString(BoundId id);

struct BoundReport {
  BoundId id{};
  bool applicable = false;
  std::string reason;        // set when not applicable
  bool isLower = false;
  double lhs = 0.0;          // AG(G)
  double rhs = 0.0;
  bool holds = false;        // slack >= -tol
  double slack = 0.0;        // rhs-lhs for upper bounds, lhs-rhs for lower
  bool equality = false;     // |slack| <= tol
  bool extremalMatch = false;
  bool anomaly = false;      // equality/structure mismatch or bad radicand
  std::string note;
};

// Shared inputs so a sweep computes profile/indices/classification once.
struct GraphStats {
  DegreeProfile prof;
  IndexVector iv;
  GraphClass cls;
  long long pendantEdges = 0;  // = pendant vertex count except for K2
};

GraphStats graphStats(const Graph& g);

BoundReport boundT1(const GraphStats& s, double tol = 1e-9);
BoundReport boundC1(const GraphStats& s, double tol = 1e-9);
BoundReport boundT2(const GraphStats& s, double tol = 1e-9);
BoundReport boundC2(const GraphStats& s, double tol = 1e-9);
BoundReport boundT3(const GraphStats& s, double tol = 1e-9);
BoundReport boundC3(const GraphStats& s, double tol = 1e-9);
BoundReport boundT4(const GraphStats& s, double tol = 1e-9);
BoundReport boundC4(const GraphStats& s, double tol = 1e-9);
BoundReport boundT5(const GraphStats& s, double tol = 1e-9);
BoundReport boundT6(const GraphStats& s, double tol = 1e-9);

// One report per bound (not-applicable bounds included, flagged).
std::vector<BoundReport> verifyBounds(const Graph& g, double tol = 1e-9);

}  // namespace gti

#endif  // GTI_BOUNDS_HPP
