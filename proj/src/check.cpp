#include "theta/check.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "theta/expr.hpp"
#include "theta/rewrite.hpp"

namespace theta {

namespace {

std::string& fixture_dir_storage() {
  static std::string dir = [] {
    const char* env = std::getenv("THETA_FIXTURE_DIR");
    if (env) return std::string(env);
#ifdef THETA_FIXTURE_DIR
    return std::string(THETA_FIXTURE_DIR);
#else
    return std::string("fixtures");
#endif
  }();
  return dir;
}

int& completion_limit_storage() {
  static int limit = RewriteSystem::kDefaultCompletionLimit;
  return limit;
}

} // namespace

void set_fixture_dir(const std::string& dir) { fixture_dir_storage() = dir; }
const std::string& fixture_dir() { return fixture_dir_storage(); }
void set_completion_limit(int limit) { completion_limit_storage() = limit; }
int completion_limit() { return completion_limit_storage(); }

void CheckContext::record_failure(const std::string& where, const std::string& detail) {
  failed_ = true;
  ++failures_;
  if (failures_ <= 3) {
    if (!witness_.empty()) witness_ += "; ";
    witness_ += where + ": " + detail;
  } else if (failures_ == 4) {
    witness_ += "; further failures suppressed";
  }
}

void CheckContext::zero(const Poly& f, const std::string& where) {
  if (f.is_zero()) return;
  record_failure(where, "residual " + truncated(poly_str(f)) + " [" +
                            std::to_string(f.term_count()) + " terms]");
}

void CheckContext::zero(const Tensor& t, const std::string& where) {
  if (t.is_zero()) return;
  record_failure(where, "residual " + truncated(tensor_str(t)) + " [" +
                            std::to_string(t.term_count()) + " terms]");
}

void CheckContext::is_true(bool ok, const std::string& where, const std::string& detail) {
  if (ok) return;
  record_failure(where, detail.empty() ? "stated fact does not hold" : detail);
}

void Registry::add(Check c) {
  if (c.id.empty()) throw std::logic_error("check with empty id");
  for (const Check& other : checks_)
    if (other.id == c.id) throw std::logic_error("duplicate check id: " + c.id);
  if (c.suites.empty()) throw std::logic_error("check without suites: " + c.id);
  for (const std::string& s : c.suites)
    if (!known_suite(s) || s == "all")
      throw std::logic_error("unknown suite '" + s + "' on check " + c.id);
  checks_.push_back(std::move(c));
}

const std::vector<std::string>& Registry::suite_names() {
  static const std::vector<std::string> names = {
      "appendix-a", "determinant", "hopf",    "sp-ideal", "homogeneous",
      "coaction",   "so51",        "instanton", "family",   "mvn",
      "mtheta",     "boundary",    "oracle",  "star-consistency", "all"};
  return names;
}

bool Registry::known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> Registry::run(const std::string& suite, int parallelism,
                                       bool include_stretch) const {
  if (!known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);

  std::vector<const Check*> selected;
  for (const Check& c : checks_) {
    if (c.stretch && !include_stretch) continue;
    if (suite != "all" &&
        std::find(c.suites.begin(), c.suites.end(), suite) == c.suites.end())
      continue;
    selected.push_back(&c);
  }
  std::sort(selected.begin(), selected.end(),
            [](const Check* a, const Check* b) { return a->id < b->id; });

  std::vector<CheckResult> results(selected.size());
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const Check& c = *selected[i];
      CheckResult& r = results[i];
      r.id = c.id;
      r.statement = c.statement;
      r.paper_ref = c.paper_ref;
      const auto t0 = std::chrono::steady_clock::now();
      if (!c.body) {
        r.status = "skipped-structural";
      } else {
        CheckContext cx;
        try {
          c.body(cx);
          r.status = cx.failed() ? "fail" : "pass";
          r.witness = cx.witness();
        } catch (const ReductionLimitError& e) {
          r.status = "fail";
          r.witness = std::string("reduction limit exceeded: ") + e.what();
          r.resource_limit = true;
        } catch (const CompletionLimitError& e) {
          r.status = "fail";
          r.witness = std::string("completion limit exceeded: ") + e.what();
          r.resource_limit = true;
        } catch (const std::exception& e) {
          r.status = "fail";
          r.witness = std::string("exception: ") + e.what();
        }
        r.metrics = cx.metrics();
        if (r.status == "fail" && r.witness.empty()) r.witness = "identity failed";
        if (r.resource_limit) r.metrics["resource_limit"] = 1;
      }
      const auto t1 = std::chrono::steady_clock::now();
      r.metrics["ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
  };

  const int threads = std::max(1, parallelism);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return results;
}

const Registry& registry() {
  static const Registry* inst = [] {
    auto* r = new Registry();
    register_engine_checks(*r);
    register_table_checks(*r);
    register_hopf_checks(*r);
    register_coaction_checks(*r);
    register_family_checks(*r);
    return r;
  }();
  return *inst;
}

namespace {

std::vector<std::string> read_lines(const std::string& filename) {
  const std::string path = fixture_dir() + "/" + filename;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const size_t last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

} // namespace

std::vector<std::vector<std::string>> fixture_rows(const std::string& filename) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : read_lines(filename)) {
    std::istringstream is(line);
    std::vector<std::string> row;
    std::string tok;
    while (is >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::string fixture_text(const std::string& filename) {
  std::string all;
  for (const std::string& line : read_lines(filename)) {
    if (!all.empty()) all += ' ';
    all += line;
  }
  return all;
}

} // namespace theta
