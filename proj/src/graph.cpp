#include "gti/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gti {

bool Graph::hasEdge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n(); u++)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph buildGraph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("buildGraph: negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("buildGraph: vertex out of range");
    if (u == v) throw std::invalid_argument("buildGraph: self-loop rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  long long m = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m += static_cast<long long>(a.size());
  }
  g.m_ = m / 2;
  return g;
}

DegreeProfile degreeProfile(const Graph& g) {
  DegreeProfile p;
  p.n = g.n();
  p.m = g.m();
  p.degreeSequence.reserve(p.n);
  for (int v = 0; v < p.n; v++) p.degreeSequence.push_back(g.degree(v));
  std::sort(p.degreeSequence.rbegin(), p.degreeSequence.rend());
  if (p.n > 0) {
    p.maxDeg = p.degreeSequence.front();
    p.minDeg = p.degreeSequence.back();
    p.avgDeg = 2.0 * static_cast<double>(p.m) / p.n;
  }
  int d1 = -1;
  for (int d : p.degreeSequence) {
    if (d == 1) p.pendantCount++;
    if (d >= 2) d1 = (d1 < 0) ? d : std::min(d1, d);
  }
  if (d1 >= 0) p.minNonPendant = d1;
  return p;
}

bool isConnected(const Graph& g) {
  int n = g.n();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        count++;
        stack.push_back(v);
      }
  }
  return count == n;
}

namespace {

// Proper 2-coloring producing the bipartition, or nullopt if odd cycle found.
std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.n();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; s++) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

GraphClass classify(const Graph& g) {
  GraphClass c;
  int n = g.n();
  if (n == 0) return c;
  DegreeProfile p = degreeProfile(g);
  c.connected = isConnected(g);

  c.regular = (p.maxDeg == p.minDeg);
  if (c.regular) c.regularDegree = p.maxDeg;

  if (!c.regular) {
    // exactly two distinct degree values?
    bool two = true;
    for (int d : p.degreeSequence)
      if (d != p.maxDeg && d != p.minDeg) {
        two = false;
        break;
      }
    if (two) {
      c.semiregular = true;
      c.semiS = p.maxDeg;
      c.semiR = p.minDeg;
    }
  }

  c.complete = (p.m == static_cast<long long>(n) * (n - 1) / 2);
  c.k3 = c.complete && n == 3;

  // star: degree sequence [n-1, 1, ..., 1], connected
  if (c.connected && n >= 2) {
    bool ok = p.degreeSequence[0] == n - 1;
    for (int i = 1; ok && i < n; i++) ok = p.degreeSequence[i] == 1;
    c.star = ok;
  } else if (c.connected && n == 1) {
    c.star = true;  // degenerate K_{1,0}
  }

  c.cycle = c.connected && n >= 3 && c.regular && c.regularDegree == 2;

  if (c.connected) {
    if (n <= 2) {
      c.path = true;
    } else {
      int ones = 0;
      bool ok = true;
      for (int d : p.degreeSequence) {
        if (d == 1)
          ones++;
        else if (d != 2)
          ok = false;
      }
      c.path = ok && ones == 2;
    }
  }

  if (c.connected && n >= 2) {
    if (auto col = bipartition(g)) {
      long long a = std::count(col->begin(), col->end(), 0);
      long long b = n - a;
      if (a > 0 && b > 0 && p.m == a * b) {
        c.completeBipartite = true;
        c.cbP = static_cast<int>(std::min(a, b));
        c.cbQ = static_cast<int>(std::max(a, b));
      }
    }
  }
  return c;
}

Graph deleteEdge(const Graph& g, int u, int v) {
  if (!g.hasEdge(u, v)) throw std::invalid_argument("deleteEdge: edge not present");
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(g.m()) - 1);
  for (const auto& [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) es.emplace_back(a, b);
  return buildGraph(g.n(), es);
}

Graph complementGraph(const Graph& g) {
  int n = g.n();
  std::vector<Edge> es;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (!g.hasEdge(u, v)) es.emplace_back(u, v);
  return buildGraph(n, es);
}

}  // namespace gti
