#ifndef GTI_REPORT_HPP
#define GTI_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gti/graph.hpp"

namespace gti {

// One serialized check outcome. `kind` distinguishes assertion-class theorem
// checks from finding-class conjecture/search records.
struct ViolationRecord {
  std::string witnessGraph6;
  std::string checkId;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<Edge> edge;
  std::string note;

  bool operator==(const ViolationRecord&) const = default;
};

// 12-significant-digit rendering used by every CSV emitter.
std::string formatDouble(double x);

// Deterministic emission: records are sorted by (witness, checkId, edge).
void sortRecords(std::vector<ViolationRecord>& records);

void writeCsv(const std::vector<ViolationRecord>& records, std::ostream& out);
std::vector<ViolationRecord> parseCsv(std::istream& in);

std::string toJson(const std::vector<ViolationRecord>& records);
std::vector<ViolationRecord> fromJson(const std::string& text);

}  // namespace gti

#endif  // GTI_REPORT_HPP
