#pragma once

#include <set>
#include <vector>

#include "tccs/lts.hpp"

namespace tccs {

struct StateFacts {
  bool stable = false;         // converged: no tau step
  bool may_converge = false;   // a converged state is tau-reachable
  bool ctx_converge = false;   // a converged state is reachable by α-steps
  bool may_diverge = false;    // an infinite tau path exists
  bool reactive = false;       // nothing reachable may diverge
  std::set<Label> barbs;       // communications offered by tau-reachable converged states
};

/// Per-state predicates of a complete LTS, computed once on construction.
///
/// Contextual convergence is computed as reachability of a converged state
/// through communication and tau edges (tick excluded), which is equivalent
/// to the existence of a static context making the process converge.
class Analysis {
 public:
  /// Throws TruncatedLts.
  explicit Analysis(const Lts& lts);

  const StateFacts& facts(StateId s) const { return facts_[s]; }
  bool converged(StateId s) const { return facts_[s].stable; }
  bool may_converge(StateId s) const { return facts_[s].may_converge; }
  bool ctx_converge(StateId s) const { return facts_[s].ctx_converge; }
  bool may_diverge(StateId s) const { return facts_[s].may_diverge; }
  bool is_reactive(StateId s) const { return facts_[s].reactive; }
  const std::set<Label>& barbs(StateId s) const { return facts_[s].barbs; }

  std::size_t num_states() const { return facts_.size(); }

 private:
  std::vector<StateFacts> facts_;
};

}  // namespace tccs
