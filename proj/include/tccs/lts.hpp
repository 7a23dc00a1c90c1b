#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tccs/process.hpp"

namespace tccs {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

inline constexpr std::size_t kDefaultBound = 10000;

struct Transition {
  Label label;
  Process target;  // canonical

  bool operator==(const Transition&) const = default;
};

/// Every strong transition of `p`, targets canonicalized, sorted by label
/// then target text, without duplicates. Tick transitions are derived only
/// where no tau transition exists. Throws UnboundIdentifier.
std::vector<Transition> step(const Process& p, const DefTable& defs);

/// The commitment predicate: the set L with p ↓ L, or nullopt when no rule
/// applies (in particular for every call).
std::optional<std::set<Label>> commitments(const Process& p,
                                           const DefTable& defs);

struct Edge {
  StateId src;
  LabelId label;
  StateId dst;
};

/// Finite rooted transition graph over canonical terms.
class Lts {
 public:
  static constexpr LabelId kTau = 0;
  static constexpr LabelId kTick = 1;

  std::span<const StateId> roots() const { return roots_; }
  std::size_t num_states() const { return terms_.size(); }
  const Process& term(StateId s) const { return terms_[s]; }
  /// pretty(term(s)); unique per state.
  const std::string& text(StateId s) const { return texts_[s]; }
  std::optional<StateId> find(const Process& canonical) const;

  bool truncated() const { return truncated_; }
  /// Successors of `s` were computed (false only on truncated graphs).
  bool expanded(StateId s) const { return s < expanded_count_; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Edge> out(StateId s) const;

  std::size_t num_labels() const { return labels_.size(); }
  const Label& label(LabelId l) const { return labels_[l]; }
  std::optional<LabelId> find_label(const Label& l) const;

  /// No tau edge leaves `s`.
  bool stable(StateId s) const { return stable_[s] != 0; }
  const std::optional<std::set<Label>>& commit_set(StateId s) const {
    return commit_[s];
  }

  const DefTable& defs() const { return *defs_; }

  /// Throws TruncatedLts.
  void require_complete() const;

 private:
  friend Lts build_lts(std::span<const Process>, const DefTable&, std::size_t);

  StateId intern(const Process& canonical, std::string text);
  LabelId intern_label(const Label& l);

  std::shared_ptr<const DefTable> defs_;
  std::vector<StateId> roots_;
  std::vector<Process> terms_;
  std::vector<std::string> texts_;
  std::unordered_map<std::string, StateId> index_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_begin_;  // size expanded_count_ + 1
  std::vector<char> stable_;
  std::vector<std::optional<std::set<Label>>> commit_;
  std::size_t expanded_count_ = 0;
  bool truncated_ = false;
};

/// Breadth-first closure of `step` from the canonicalized roots. Stops with
/// truncated() set once the state count would exceed `bound`; state ids are
/// assigned in discovery order, so the result is deterministic.
Lts build_lts(std::span<const Process> roots, const DefTable& defs,
              std::size_t bound = kDefaultBound);

struct LawViolation {
  StateId state;
  std::string law;
  std::string detail;
};

/// Checks, on every expanded state: tick iff no tau, at most one tick
/// successor, commitments defined iff stable and then equal to the ready
/// communication labels, and tick is the identity on CCS states.
/// An empty result means no violation.
std::vector<LawViolation> verify_lts_laws(const Lts& lts);

}  // namespace tccs
