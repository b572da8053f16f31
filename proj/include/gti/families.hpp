#ifndef GTI_FAMILIES_HPP
#define GTI_FAMILIES_HPP

#include <string>
#include <vector>

#include "gti/graph.hpp"

namespace gti {

Graph emptyGraph(int n);
Graph completeGraph(int n);                 // K_n
Graph completeBipartiteGraph(int p, int q); // K_{p,q}
Graph starGraph(int n);                     // K_{1,n-1}
Graph pathGraph(int n);                     // P_n
Graph cycleGraph(int n);                    // C_n, n >= 3

// L(n,k) = K_k joined with the empty graph on n-k vertices:
// k vertices of degree n-1 and n-k of degree k. Requires 1 <= k <= n-1.
Graph lnkGraph(int n, int k);

Graph joinGraphs(const Graph& a, const Graph& b);
Graph disjointUnion(const Graph& a, const Graph& b);

// Two adjacent centers with a and b pendants. doubleStar(3,3) is the tree
// obtained by joining the centers of two 4-vertex stars.
Graph doubleStar(int a, int b);

Graph petersenGraph();

// Dispatcher for CLI use. Names: K, Kpq, star, P, C, L.
Graph familyByName(const std::string& name, int n, int k);

}  // namespace gti

#endif  // GTI_FAMILIES_HPP
