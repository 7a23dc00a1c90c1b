#include "tccs/analyses.hpp"

#include <algorithm>
#include <functional>

namespace tccs {
namespace {

using Graph = std::vector<std::vector<StateId>>;

// Marks every state that reaches a seed state in `forward` (searching the
// reversed graph `backward`).
std::vector<char> backward_reach(const Graph& backward, std::vector<char> seed) {
  std::vector<StateId> stack;
  for (StateId s = 0; s < seed.size(); ++s) {
    if (seed[s]) stack.push_back(s);
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId p : backward[s]) {
      if (!seed[p]) {
        seed[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seed;
}

// States lying on a tau cycle (Tarjan, iterative).
std::vector<char> on_tau_cycle(const Graph& tau) {
  const std::size_t n = tau.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0), cyclic(n, 0);
  std::vector<StateId> stack;
  int counter = 0;
  struct Frame {
    StateId v;
    std::size_t next;
  };
  for (StateId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < tau[f.v].size()) {
        const StateId w = tau[f.v][f.next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const StateId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<StateId> component;
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        component.push_back(w);
      } while (w != v);
      bool cycle = component.size() > 1;
      if (!cycle) {
        cycle = std::find(tau[v].begin(), tau[v].end(), v) != tau[v].end();
      }
      if (cycle) {
        for (StateId c : component) cyclic[c] = 1;
      }
    }
  }
  return cyclic;
}

}  // namespace

Analysis::Analysis(const Lts& lts) {
  lts.require_complete();
  const std::size_t n = lts.num_states();
  facts_.resize(n);

  Graph tau(n), tau_back(n), alpha_back(n), any_back(n);
  for (const auto& e : lts.edges()) {
    any_back[e.dst].push_back(e.src);
    if (e.label == Lts::kTick) continue;
    alpha_back[e.dst].push_back(e.src);
    if (e.label == Lts::kTau) {
      tau[e.src].push_back(e.dst);
      tau_back[e.dst].push_back(e.src);
    }
  }

  std::vector<char> stable(n);
  for (StateId s = 0; s < n; ++s) stable[s] = lts.stable(s) ? 1 : 0;
  const auto may_conv = backward_reach(tau_back, stable);
  const auto ctx_conv = backward_reach(alpha_back, stable);
  const auto diverge = backward_reach(tau_back, on_tau_cycle(tau));
  const auto unreactive = backward_reach(any_back, diverge);

  for (StateId s = 0; s < n; ++s) {
    auto& f = facts_[s];
    f.stable = stable[s];
    f.may_converge = may_conv[s];
    f.ctx_converge = ctx_conv[s];
    f.may_diverge = diverge[s];
    f.reactive = !unreactive[s];
  }

  // Barbs: propagate the ready sets of converged states backwards along tau.
  for (StateId s = 0; s < n; ++s) {
    if (!stable[s]) continue;
    std::set<Label> ready;
    for (const auto& e : lts.out(s)) {
      if (lts.label(e.label).is_comm()) ready.insert(lts.label(e.label));
    }
    if (ready.empty()) continue;
    std::vector<char> seen(n, 0);
    std::vector<StateId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const StateId v = stack.back();
      stack.pop_back();
      facts_[v].barbs.insert(ready.begin(), ready.end());
      for (StateId p : tau_back[v]) {
        if (!seen[p]) {
          seen[p] = 1;
          stack.push_back(p);
        }
      }
    }
  }
}

}  // namespace tccs
