#include "gti/graph6.hpp"

#include <fstream>

namespace gti {

namespace {

constexpr int kOffset = 63;
constexpr int kLongMark = 126;  // '~'

inline int chunkAt(std::string_view s, size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kOffset || c > kLongMark)
    throw Graph6ParseError("graph6: byte out of range", i);
  return c - kOffset;
}

}  // namespace

Graph parseGraph6(std::string_view text) {
  if (text.empty()) throw Graph6ParseError("graph6: empty input", 0);
  size_t pos = 0;
  long long n;
  if (chunkAt(text, 0) == kLongMark - kOffset) {
    // 3-byte size: '~' then 18 bits
    if (text.size() >= 2 && chunkAt(text, 1) == kLongMark - kOffset)
      throw Graph6ParseError("graph6: 8-byte size form not supported", 1);
    if (text.size() < 4) throw Graph6ParseError("graph6: truncated size", text.size());
    n = (static_cast<long long>(chunkAt(text, 1)) << 12) |
        (static_cast<long long>(chunkAt(text, 2)) << 6) | chunkAt(text, 3);
    pos = 4;
  } else {
    n = chunkAt(text, 0);
    pos = 1;
  }
  long long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos < need)
    throw Graph6ParseError("graph6: body shorter than n requires", text.size());
  if (text.size() - pos > need)
    throw Graph6ParseError("graph6: trailing bytes after body", pos + need);

  std::vector<Edge> es;
  long long bit = 0;
  int cur = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++, bit++) {
      if (bit % 6 == 0) cur = chunkAt(text, pos + static_cast<size_t>(bit / 6));
      if (cur & (1 << (5 - bit % 6))) es.emplace_back(i, j);
    }
  }
  // padding bits must be zero for a bit-exact encoding
  if (bits % 6 != 0) {
    int pad = cur & ((1 << (6 - bits % 6)) - 1);
    if (pad != 0)
      throw Graph6ParseError("graph6: nonzero padding bits", pos + static_cast<size_t>((bits - 1) / 6));
  }
  return buildGraph(static_cast<int>(n), es);
}

std::string writeGraph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kLongMark));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  } else {
    throw std::invalid_argument("writeGraph6: graph too large");
  }
  long long bit = 0;
  int cur = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++, bit++) {
      if (g.hasEdge(i, j)) cur |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(cur + kOffset));
        cur = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(cur + kOffset));
  return out;
}

std::vector<Graph6Line> readGraph6File(const std::string& path, bool strict,
                                       std::vector<std::string>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph6Line> out;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    lineNo++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({parseGraph6(line), lineNo});
    } catch (const Graph6ParseError& e) {
      std::string msg = path + ":" + std::to_string(lineNo) + ": " + e.what();
      if (strict) throw std::runtime_error(msg);
      if (errors) errors->push_back(msg);
    }
  }
  return out;
}

}  // namespace gti
