#include "gti/families.hpp"

#include <stdexcept>

namespace gti {

Graph emptyGraph(int n) { return buildGraph(n, {}); }

Graph completeGraph(int n) {
  if (n < 1) throw std::invalid_argument("K_n: n >= 1 required");
  std::vector<Edge> es;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) es.emplace_back(u, v);
  return buildGraph(n, es);
}

Graph completeBipartiteGraph(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("K_{p,q}: p,q >= 1 required");
  std::vector<Edge> es;
  for (int u = 0; u < p; u++)
    for (int v = 0; v < q; v++) es.emplace_back(u, p + v);
  return buildGraph(p + q, es);
}

Graph starGraph(int n) {
  if (n < 2) throw std::invalid_argument("star: n >= 2 required");
  return completeBipartiteGraph(1, n - 1);
}

Graph pathGraph(int n) {
  if (n < 1) throw std::invalid_argument("P_n: n >= 1 required");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; v++) es.emplace_back(v, v + 1);
  return buildGraph(n, es);
}

Graph cycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("C_n: n >= 3 required");
  std::vector<Edge> es;
  for (int v = 0; v < n; v++) es.emplace_back(v, (v + 1) % n);
  return buildGraph(n, es);
}

Graph lnkGraph(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("L(n,k): 1 <= k <= n-1 required");
  return joinGraphs(completeGraph(k), emptyGraph(n - k));
}

Graph joinGraphs(const Graph& a, const Graph& b) {
  int na = a.n(), nb = b.n();
  std::vector<Edge> es = a.edges();
  for (const auto& [u, v] : b.edges()) es.emplace_back(na + u, na + v);
  for (int u = 0; u < na; u++)
    for (int v = 0; v < nb; v++) es.emplace_back(u, na + v);
  return buildGraph(na + nb, es);
}

Graph disjointUnion(const Graph& a, const Graph& b) {
  int na = a.n();
  std::vector<Edge> es = a.edges();
  for (const auto& [u, v] : b.edges()) es.emplace_back(na + u, na + v);
  return buildGraph(na + b.n(), es);
}

Graph doubleStar(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("doubleStar: a,b >= 1 required");
  std::vector<Edge> es{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; i++) es.emplace_back(0, next++);
  for (int i = 0; i < b; i++) es.emplace_back(1, next++);
  return buildGraph(next, es);
}

Graph petersenGraph() {
  std::vector<Edge> es;
  for (int v = 0; v < 5; v++) {
    es.emplace_back(v, (v + 1) % 5);      // outer cycle
    es.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    es.emplace_back(v, 5 + v);            // spokes
  }
  return buildGraph(10, es);
}

Graph familyByName(const std::string& name, int n, int k) {
  if (name == "K") return completeGraph(n);
  if (name == "Kpq") return completeBipartiteGraph(n, k);
  if (name == "star") return starGraph(n);
  if (name == "P") return pathGraph(n);
  if (name == "C") return cycleGraph(n);
  if (name == "L") return lnkGraph(n, k);
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace gti
