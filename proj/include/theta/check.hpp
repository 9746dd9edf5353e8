#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "theta/polynomial.hpp"
#include "theta/tensor.hpp"

namespace theta {

// Outcome of one verification check.  `witness` carries the reduced residual
// (canonical text) whenever the check fails; `metrics` carries term counts and
// the wall-clock duration in milliseconds under the key "ms".
struct CheckResult {
  std::string id;
  std::string statement;
  std::string paper_ref;
  std::string status;  // "pass" | "fail" | "skipped-structural"
  std::string witness;
  std::map<std::string, long long> metrics;
  bool resource_limit = false;  // an internal reduction/completion limit fired
};

// Accumulates requirements and metrics while one check body runs.
class CheckContext {
 public:
  void metric(const std::string& key, long long value) { metrics_[key] = value; }
  void count(const std::string& key, const Poly& f) {
    metrics_[key] = static_cast<long long>(f.term_count());
  }
  void count(const std::string& key, const Tensor& t) {
    metrics_[key] = static_cast<long long>(t.term_count());
  }

  // Require a vanishing residual; on failure the residual itself is the witness.
  void zero(const Poly& f, const std::string& where);
  void zero(const Tensor& t, const std::string& where);
  // Require a stated fact whose witness is a description rather than a residual.
  void is_true(bool ok, const std::string& where, const std::string& detail = "");

  bool failed() const { return failed_; }
  const std::string& witness() const { return witness_; }
  const std::map<std::string, long long>& metrics() const { return metrics_; }

 private:
  void record_failure(const std::string& where, const std::string& detail);

  std::map<std::string, long long> metrics_;
  std::string witness_;
  int failures_ = 0;
  bool failed_ = false;
};

// One registered verification check.  A null body marks a statement the source
// establishes by a structural argument that is documented as out of scope for
// mechanical verification; it reports as "skipped-structural".
struct Check {
  std::string id;
  std::string statement;
  std::string paper_ref;
  std::vector<std::string> suites;
  std::function<void(CheckContext&)> body;
  bool stretch = false;  // only run when stretch checks are requested
};

class Registry {
 public:
  void add(Check c);

  // Every registered check, in registration order.
  const std::vector<Check>& checks() const { return checks_; }

  static const std::vector<std::string>& suite_names();
  static bool known_suite(const std::string& name);

  // Run every check of the suite ("all" selects each check once), fanning out
  // over `parallelism` worker threads; results are merged in id order.
  std::vector<CheckResult> run(const std::string& suite, int parallelism,
                               bool include_stretch = false) const;

 private:
  std::vector<Check> checks_;
};

// The fully populated registry (built on first use).
const Registry& registry();

// Per-module registration entry points.
void register_engine_checks(Registry& r);
void register_table_checks(Registry& r);
void register_hopf_checks(Registry& r);
void register_coaction_checks(Registry& r);
void register_family_checks(Registry& r);

// Runtime configuration shared by check bodies.
void set_fixture_dir(const std::string& dir);
const std::string& fixture_dir();
void set_completion_limit(int limit);
int completion_limit();

// Fixture access: tokenized non-comment lines, and the raw text with comment
// lines stripped and newlines joined by spaces.  Both throw std::runtime_error
// naming the missing file.
std::vector<std::vector<std::string>> fixture_rows(const std::string& filename);
std::string fixture_text(const std::string& filename);

} // namespace theta
