#ifndef GTI_INDICES_HPP
#define GTI_INDICES_HPP

#include <string>
#include <vector>

#include "gti/graph.hpp"

namespace gti {

// Degree-based topological indices of one graph. The integer-valued indices
// (M1, M2, F) are computed exactly; the radical ones in double precision
// with a fixed summation order (edge terms sorted by endpoint degrees) so
// results are reproducible run to run.
struct IndexVector {
  double ga = 0.0;   // Σ 2√(du·dv)/(du+dv)
  double ag = 0.0;   // Σ (du+dv)/(2√(du·dv))
  double abc = 0.0;  // Σ √((du+dv-2)/(du·dv))
  double sdd = 0.0;  // Σ du/dv + dv/du
  long long m1 = 0;  // Σ d², cross-checked against the edge form Σ(du+dv)
  long long m2 = 0;  // Σ_edges du·dv
  long long f = 0;   // Σ d³
};

struct EdgeTerm {
  Edge edge;
  int du = 0, dv = 0;
  double gaTerm = 0.0;
  double agTerm = 0.0;
  double abcTerm = 0.0;
  double sddTerm = 0.0;
};

IndexVector indexVector(const Graph& g);

// One term per edge, ordered by (min degree, max degree, edge).
std::vector<EdgeTerm> edgeTerms(const Graph& g);

// Closed forms for the supported families; matches indexVector(family(...))
// to 1e-10 relative. Families: K, Kpq, star, P, C, L (parameters as in
// familyByName).
IndexVector familyClosedForms(const std::string& name, int n, int k = 0);

}  // namespace gti

#endif  // GTI_INDICES_HPP
