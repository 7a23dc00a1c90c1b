#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tccs/analyses.hpp"
#include "tccs/lts.hpp"

namespace tccs {

/// Which equivalence to decide.
///
///  - Usual:        weak bisimulation over all labels, tick included.
///  - UsualUntimed: weak bisimulation over CCS actions; CCS inputs only.
///  - Conv:         convergence-sensitive labelled bisimulation. Communication
///                  challenges are only raised by contextually convergent
///                  states, and a move into a non-contextually-convergent
///                  state may be answered by internal steps. It coincides with
///                  the contextual equivalence built from reduction, tick and
///                  static contexts, and is decided here in that role.
///  - ConvDiv:      Conv restricted to pairs that agree on may-divergence.
///  - ConvUntimed:  Conv with the tick clause replaced by "may converge
///                  implies may converge"; CCS inputs only. Agrees with Conv
///                  on CCS and decides the untimed contextual equivalence.
enum class Mode { Usual, UsualUntimed, Conv, ConvDiv, ConvUntimed };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

/// Memoized weak transitions  =tau=> = (-tau->)*  and
/// =mu=> = (-tau->)* -mu-> (-tau->)*  over a complete LTS.
class WeakTransitions {
 public:
  /// Throws TruncatedLts.
  explicit WeakTransitions(const Lts& lts);

  /// Sorted; always contains `s`.
  std::span<const StateId> tau_closure(StateId s);
  /// Sorted targets of s =l=>. For tau this is tau_closure.
  std::span<const StateId> after(StateId s, LabelId l);

 private:
  const Lts& lts_;
  std::vector<std::optional<std::vector<StateId>>> closure_;
  std::unordered_map<std::uint64_t, std::vector<StateId>> weak_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// The relation =label=> as a list of (source, target) pairs, sorted.
/// An absent label yields the empty relation (or the closure, for tau).
std::vector<std::pair<StateId, StateId>> weak(const Lts& lts,
                                              const Label& label);

enum class Clause {
  RedTau,    // a tau move lacks a weak tau answer
  RedTick,   // a tick move lacks a weak tick answer
  Lab,       // a communication of a ctx-convergent state lacks an answer
  Diverge,   // one side may diverge, the other cannot
  Converge,  // one side may converge, the other cannot (ConvUntimed)
  Usual,     // a move of the usual bisimulation game lacks an answer
};

std::string_view to_string(Clause c);

struct Challenge {
  StateId src;
  LabelId label;
  StateId dst;
};

/// One eliminated pair. For challenge clauses, `challenge.src` is the
/// challenging member of the pair; the other member had no answer landing
/// in a pair still alive at that point.
struct CertificateEntry {
  std::array<StateId, 2> pair;
  Clause clause;
  std::optional<Challenge> challenge;
  int round;
};

struct EquivVerdict {
  bool related = false;
  Mode mode = Mode::Conv;
  std::array<StateId, 2> roots{};
  int rounds = 0;
  /// Elimination trace, in elimination order. Filter clauses come first
  /// with round 0.
  std::vector<CertificateEntry> certificate;
  /// Distinguishing static context, when one was searched for and found.
  std::optional<std::string> tester;
  std::shared_ptr<const Lts> lts;
};

/// Decides p ~ q in `mode` over build_lts({p, q}). Throws TruncatedLts if the
/// bound is hit, ModeError for untimed modes on non-CCS input.
EquivVerdict check(const Process& p, const Process& q, Mode mode,
                   const DefTable& defs, std::size_t bound = kDefaultBound);

/// Same game on two states of an existing LTS.
EquivVerdict check_states(std::shared_ptr<const Lts> lts, StateId s, StateId t,
                          Mode mode);

/// Conv on CCS processes with the tick clause replaced by may-convergence.
EquivVerdict check_ccs_equivalently(const Process& p, const Process& q,
                                    const DefTable& defs,
                                    std::size_t bound = kDefaultBound);

/// The largest relation of `mode` over all states of a complete LTS.
/// Symmetric and reflexive; meant for small graphs (quadratic in states).
struct Relation {
  Mode mode;
  std::vector<std::pair<StateId, StateId>> pairs;  // sorted, both orders

  bool contains(StateId s, StateId t) const;
};

Relation bisimilarity(const Lts& lts, Mode mode);

/// Re-runs the elimination recorded in a certificate against the verdict's
/// LTS: every entry must be justified by pairs eliminated before it, and
/// the root pair must end up eliminated.
bool replay_certificate(const EquivVerdict& v);

/// Game tree for a negative verdict. Throws std::logic_error if related.
std::string explain(const EquivVerdict& v);

}  // namespace tccs
