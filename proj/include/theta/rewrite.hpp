#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta/polynomial.hpp"
#include "theta/tensor.hpp"

namespace theta {

struct ReductionLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompletionLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Oriented relation lc * lm -> rhs with every monomial of rhs below lm.
struct RewriteRule {
  std::string name;
  Monomial lm;
  PhaseCoefficient lc;
  Poly rhs;
  bool is_monomial = false;  // rhs == 0
  bool central = false;      // full relation graded-central (checked on input rules)
};

// Quotient by a two-sided ideal presented through oriented relations.  Input
// relations must be monomial or graded-central: for a non-central relation a
// one-sided rewrite would not be well defined against the twisted commutation.
// Rules derived during completion are sound regardless (left multiples of
// ideal members stay in the ideal) and are marked non-central.
class RewriteSystem {
 public:
  static constexpr long kDefaultStepLimit = 10'000'000;
  static constexpr int kDefaultCompletionLimit = 64;

  RewriteSystem() = default;
  RewriteSystem(const Presentation& P,
                std::vector<std::pair<std::string, Poly>> relations);

  const Presentation& pres() const { return *pres_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  Poly reduce(Poly f, long step_limit = kDefaultStepLimit) const;
  Tensor reduce_leg(Tensor t, int leg, long step_limit = kDefaultStepLimit) const;

  // Buchberger-style completion on overlapping leading monomials.  Throws
  // CompletionLimitError when more than max_new_rules consequences appear.
  RewriteSystem completed(int max_new_rules = kDefaultCompletionLimit,
                          long step_limit = kDefaultStepLimit) const;

 private:
  void append_oriented(const std::string& name, const Poly& rel, bool derived);
  const RewriteRule* find_rule(const Monomial& m) const;

  const Presentation* pres_ = nullptr;
  std::vector<RewriteRule> rules_;
};

} // namespace theta
