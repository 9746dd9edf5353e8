#include "theta/report.hpp"

#include <json.hpp>
#include <sstream>

namespace theta {

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const CheckResult& r : results) {
    if (r.status == "pass")
      ++s.pass;
    else if (r.status == "fail")
      ++s.fail;
    else
      ++s.skipped;
    if (r.resource_limit) s.resource_limit = true;
  }
  return s;
}

std::string report_json(const std::string& suite, const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["suite"] = suite;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["statement"] = r.statement;
    c["paper_ref"] = r.paper_ref;
    c["status"] = r.status;
    c["witness"] = r.witness;
    c["metrics"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metrics) c["metrics"][k] = v;
    doc["checks"].push_back(std::move(c));
  }
  const Summary s = summarize(results);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  return doc.dump(2) + "\n";
}

std::string report_text(const std::string& suite, const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const CheckResult& r : results) {
    const char* tag = r.status == "pass"  ? "pass"
                      : r.status == "fail" ? "FAIL"
                                           : "skip";
    os << "  " << tag << "  " << r.id << "  " << r.statement << "\n";
    if (r.status == "skipped-structural")
      os << "        skipped-structural (paper-proved, not machine-checked)\n";
    if (!r.witness.empty()) os << "        witness: " << r.witness << "\n";
  }
  const Summary s = summarize(results);
  os << "summary: pass=" << s.pass << " fail=" << s.fail << " skipped=" << s.skipped
     << "\n";
  return os.str();
}

int report_exit_code(const std::vector<CheckResult>& results) {
  const Summary s = summarize(results);
  if (s.resource_limit) return 3;
  return s.fail == 0 ? 0 : 1;
}

} // namespace theta
