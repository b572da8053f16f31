#ifndef GTI_RELATIONS_HPP
#define GTI_RELATIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "gti/bounds.hpp"
#include "gti/graph.hpp"

namespace gti {

// Sandwich relations between AG and GA / ABC / SDD. Each report states one
// inequality lhs <= rhs with slack = rhs - lhs.
enum class RelationId { T7L, T7R, C5, T9L, T9R, T10L, T10R, ABCRemark, Conjecture1 };

const char* toString(RelationId id);

struct RelationReport {
  RelationId id{};
  bool applicable = false;
  std::string reason;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;
  bool equality = false;
  bool extremalMatch = false;
  bool anomaly = false;
  std::string note;
};

// GA <= AG <= ((δ+n-1)²/(4δ(n-1)))·GA; left equality iff regular,
// right iff star or complete.
std::pair<RelationReport, RelationReport> relationT7(const GraphStats& s, double tol = 1e-9);

// AG <= (n²/(4(n-1)))·GA, equality iff star.
RelationReport relationC5(const GraphStats& s, double tol = 1e-9);

// (δ/√(2δ-2))·ABC <= AG <= ((n-1)/√(2n-4))·ABC for δ >= 2; left equality
// iff regular, right iff complete.
std::pair<RelationReport, RelationReport> relationT9(const GraphStats& s, double tol = 1e-9);

// √2·ABC <= AG for δ >= 2, strict unless the graph is a cycle.
RelationReport abcRemark(const GraphStats& s, double tol = 1e-9);

// left coefficient·SDD <= AG <= SDD/2; left equality iff star or complete,
// right iff regular.
std::pair<RelationReport, RelationReport> relationT10(const GraphStats& s, double tol = 1e-9);

std::vector<RelationReport> verifyRelations(const Graph& g, double tol = 1e-9);

}  // namespace gti

#endif  // GTI_RELATIONS_HPP
