#include "gti/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gti/graph6.hpp"

namespace gti {

namespace {

// Adjacency as per-vertex bitmasks, n <= 10.
using MaskGraph = std::vector<uint16_t>;

struct CanonSearch {
  const MaskGraph& adj;
  int n;
  uint64_t best = ~0ULL;
  std::vector<int> placed;
  uint16_t placedMask = 0;

  explicit CanonSearch(const MaskGraph& a) : adj(a), n(static_cast<int>(a.size())) {}

  void run() {
    placed.reserve(n);
    descend(0, 0);
  }

  // acc holds the columns of already-placed positions.
  void descend(uint64_t acc, int depth) {
    if (depth == n) {
      best = std::min(best, acc);
      return;
    }
    // column bits for each unused vertex against the placed prefix
    uint32_t minCol = ~0U;
    int cand[10];
    int nc = 0;
    for (int v = 0; v < n; v++) {
      if (placedMask & (1 << v)) continue;
      uint32_t col = 0;
      for (int i = 0; i < depth; i++)
        col = (col << 1) | ((adj[v] >> placed[i]) & 1);
      if (col < minCol) {
        minCol = col;
        nc = 0;
      }
      if (col == minCol) cand[nc++] = v;
    }
    uint64_t acc2 = (acc << depth) | minCol;
    // prune against the best full string found so far
    int bitsDone = (depth + 1) * depth / 2;
    int total = n * (n - 1) / 2;
    if (best != ~0ULL && acc2 > (best >> (total - bitsDone))) return;

    for (int a = 0; a < nc; a++) {
      int v = cand[a];
      // skip if an earlier candidate is its twin (transposition automorphism)
      bool twin = false;
      for (int b = 0; b < a && !twin; b++) {
        int w = cand[b];
        uint16_t nv = adj[v] & static_cast<uint16_t>(~(1 << w));
        uint16_t nw = adj[w] & static_cast<uint16_t>(~(1 << v));
        twin = (nv == nw);
      }
      if (twin) continue;
      placed.push_back(v);
      placedMask |= static_cast<uint16_t>(1 << v);
      descend(acc2, depth + 1);
      placedMask &= static_cast<uint16_t>(~(1 << v));
      placed.pop_back();
    }
  }
};

uint64_t canonicalBits(const MaskGraph& adj) {
  if (adj.size() <= 1) return 0;
  CanonSearch s(adj);
  s.run();
  return s.best;
}

MaskGraph toMasks(const Graph& g) {
  MaskGraph adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= static_cast<uint16_t>(1 << v);
    adj[v] |= static_cast<uint16_t>(1 << u);
  }
  return adj;
}

Graph fromCanonicalBits(int n, uint64_t bits) {
  std::vector<Edge> es;
  int total = n * (n - 1) / 2;
  int pos = 0;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++, pos++)
      if (bits & (1ULL << (total - 1 - pos))) es.emplace_back(i, j);
  return buildGraph(n, es);
}

// All isomorphism classes on n vertices as canonical bitstrings, built by
// one-vertex augmentation. Parents must include disconnected graphs: a
// connected graph may lose connectivity when its last vertex is removed.
std::vector<uint64_t> classesUpTo(int n) {
  std::vector<uint64_t> level{0};  // single vertex
  for (int k = 2; k <= n; k++) {
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> next;
    for (uint64_t pbits : level) {
      MaskGraph parent = toMasks(fromCanonicalBits(k - 1, pbits));
      parent.push_back(0);
      for (uint32_t mask = 0; mask < (1U << (k - 1)); mask++) {
        MaskGraph child = parent;
        child[k - 1] = static_cast<uint16_t>(mask);
        for (int v = 0; v < k - 1; v++)
          if (mask & (1 << v)) child[v] |= static_cast<uint16_t>(1 << (k - 1));
        uint64_t c = canonicalBits(child);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

CanonicalForm canonicalForm(const Graph& g) {
  if (g.n() > 10) throw std::invalid_argument("canonicalForm: n <= 10 required");
  return {g.n(), canonicalBits(toMasks(g))};
}

std::vector<Graph> enumerateAll(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerateAll: 1 <= n <= 8 required");
  std::vector<Graph> out;
  for (uint64_t bits : classesUpTo(n)) out.push_back(fromCanonicalBits(n, bits));
  return out;
}

std::vector<Graph> enumerateConnected(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerateConnected: 1 <= n <= 8 required");
  std::vector<Graph> out;
  for (uint64_t bits : classesUpTo(n)) {
    Graph g = fromCanonicalBits(n, bits);
    if (isConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerateFromFile(const std::string& path, bool strict) {
  std::vector<Graph> out;
  for (auto& line : readGraph6File(path, strict)) out.push_back(std::move(line.graph));
  return out;
}

}  // namespace gti
