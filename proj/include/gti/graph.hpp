#ifndef GTI_GRAPH_HPP
#define GTI_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gti {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph. Vertices are 0..n-1, adjacency lists
// are kept sorted, no self-loops, no multi-edges. Safe to share across
// threads once constructed.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  bool hasEdge(int u, int v) const;

  // Edges as (u,v) with u < v, lexicographic.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  friend Graph buildGraph(int n, const std::vector<Edge>& edges);
  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

// Constructs a Graph from an edge list. Duplicate edges (in either
// orientation) are collapsed silently; self-loops and out-of-range vertices
// throw std::invalid_argument.
Graph buildGraph(int n, const std::vector<Edge>& edges);

struct DegreeProfile {
  int n = 0;
  long long m = 0;
  int maxDeg = 0;                     // Δ
  int minDeg = 0;                     // δ
  std::optional<int> minNonPendant;   // δ₁, absent when every degree ≤ 1
  int pendantCount = 0;               // p = #{v : deg(v) = 1}
  double avgDeg = 0.0;                // 2m/n
  std::vector<int> degreeSequence;    // sorted descending
};

DegreeProfile degreeProfile(const Graph& g);

// Structural classification used by the equality characterizations.
// Semiregular means exactly two distinct degrees (s > r), both classes
// nonempty; regular graphs are reported as regular, not semiregular.
struct GraphClass {
  bool connected = false;
  bool regular = false;
  int regularDegree = 0;
  bool semiregular = false;
  int semiS = 0, semiR = 0;
  bool star = false;
  bool complete = false;
  bool completeBipartite = false;
  int cbP = 0, cbQ = 0;
  bool cycle = false;
  bool path = false;
  bool k3 = false;
};

GraphClass classify(const Graph& g);

bool isConnected(const Graph& g);

// Returns a new graph with the edge removed; throws if uv is not an edge.
Graph deleteEdge(const Graph& g, int u, int v);

Graph complementGraph(const Graph& g);

}  // namespace gti

#endif  // GTI_GRAPH_HPP
