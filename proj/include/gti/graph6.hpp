#ifndef GTI_GRAPH6_HPP
#define GTI_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gti/graph.hpp"

namespace gti {

// Malformed graph6 input; byteOffset points at the offending byte.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, size_t byteOffset)
      : std::runtime_error(what + " (byte " + std::to_string(byteOffset) + ")"),
        byteOffset(byteOffset) {}
  size_t byteOffset;
};

// graph6: 6-bit chunks of the upper-triangular adjacency in column order,
// bytes offset by 63. Short form for n <= 62, 3-byte long form up to 258047.
Graph parseGraph6(std::string_view text);
std::string writeGraph6(const Graph& g);

struct Graph6Line {
  Graph graph;
  int lineNumber;  // 1-based
};

// Reads one graph per line. In strict mode a malformed line throws with its
// line number; otherwise bad lines are collected into `errors` and skipped.
std::vector<Graph6Line> readGraph6File(const std::string& path, bool strict,
                                       std::vector<std::string>* errors = nullptr);

}  // namespace gti

#endif  // GTI_GRAPH6_HPP
