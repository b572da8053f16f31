#ifndef GTI_ENUMERATION_HPP
#define GTI_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gti/graph.hpp"

namespace gti {

// Lexicographically minimal upper-triangular adjacency bitstring (column
// order, the graph6 bit order) over all vertex permutations. Equal forms
// iff isomorphic. Bounded to n <= 10.
struct CanonicalForm {
  int n = 0;
  uint64_t bits = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonicalForm(const Graph& g);

// Exactly one representative per isomorphism class of connected graphs on
// n vertices (1 <= n <= 8), by one-vertex augmentation over all parent
// graphs (connected or not) with canonical deduplication.
std::vector<Graph> enumerateConnected(int n);

// All isomorphism classes on n vertices, connectivity not required.
std::vector<Graph> enumerateAll(int n);

std::vector<Graph> enumerateFromFile(const std::string& path, bool strict);

}  // namespace gti

#endif  // GTI_ENUMERATION_HPP
