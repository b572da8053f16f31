#include "gti/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace gti {

std::string formatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void sortRecords(std::vector<ViolationRecord>& records) {
  std::sort(records.begin(), records.end(), [](const ViolationRecord& a, const ViolationRecord& b) {
    return std::tie(a.witnessGraph6, a.checkId, a.edge) < std::tie(b.witnessGraph6, b.checkId, b.edge);
  });
}

void writeCsv(const std::vector<ViolationRecord>& records, std::ostream& out) {
  out << "graph6,checkId,lhs,rhs,slack,edgeU,edgeV,note\n";
  for (const auto& r : records) {
    out << r.witnessGraph6 << ',' << r.checkId << ',' << formatDouble(r.lhs) << ','
        << formatDouble(r.rhs) << ',' << formatDouble(r.slack) << ',';
    if (r.edge) out << r.edge->first;
    out << ',';
    if (r.edge) out << r.edge->second;
    out << ',' << r.note << '\n';
  }
}

std::vector<ViolationRecord> parseCsv(std::istream& in) {
  std::vector<ViolationRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(tok);
    while (f.size() < 8) f.emplace_back();
    ViolationRecord r;
    r.witnessGraph6 = f[0];
    r.checkId = f[1];
    r.lhs = std::stod(f[2]);
    r.rhs = std::stod(f[3]);
    r.slack = std::stod(f[4]);
    if (!f[5].empty() && !f[6].empty()) r.edge = Edge{std::stoi(f[5]), std::stoi(f[6])};
    r.note = f[7];
    out.push_back(std::move(r));
  }
  return out;
}

std::string toJson(const std::vector<ViolationRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"graph6", r.witnessGraph6}, {"checkId", r.checkId}, {"lhs", r.lhs},
                     {"rhs", r.rhs},              {"slack", r.slack},     {"note", r.note}};
    if (r.edge) j["edge"] = {r.edge->first, r.edge->second};
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::vector<ViolationRecord> fromJson(const std::string& text) {
  std::vector<ViolationRecord> out;
  for (const auto& j : nlohmann::json::parse(text)) {
    ViolationRecord r;
    r.witnessGraph6 = j.at("graph6").get<std::string>();
    r.checkId = j.at("checkId").get<std::string>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.slack = j.at("slack").get<double>();
    r.note = j.value("note", "");
    if (j.contains("edge")) r.edge = Edge{j["edge"][0].get<int>(), j["edge"][1].get<int>()};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gti
