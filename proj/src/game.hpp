#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tccs/analyses.hpp"
#include "tccs/equiv.hpp"

namespace tccs::detail {

/// Pair-elimination engine shared by the checkers, certificate replay and
/// explain. Pairs are unordered; the diagonal is never stored and always
/// alive. A strong challenge from one member must be answered by a weak
/// move of the other into a live pair.
class Game {
 public:
  Game(const Lts& lts, Mode mode);

  const Lts& lts() const { return lts_; }
  const Analysis& analysis() const { return analysis_; }

  /// Clause under which edge `e` is a challenge, if it is one.
  std::optional<Clause> clause_for(const Edge& e) const;
  /// Weak answers of `responder` to challenge `e`.
  void responses(StateId responder, const Edge& e, Clause clause,
                 std::vector<StateId>& out);
  /// Static clause excluding the pair from the start.
  std::optional<Clause> filter(StateId s, StateId t) const;

  /// Adds the seeds and every pair reachable through challenge/answer.
  void explore(std::span<const std::array<StateId, 2>> seeds);
  /// Greatest fixed point; returns the last round that eliminated a pair.
  int solve(std::vector<CertificateEntry>& certificate);

  bool alive(StateId s, StateId t) const;
  void kill(StateId s, StateId t) {
    if (auto i = index(s, t)) alive_[*i] = 0;
  }

 private:
  static std::uint64_t key(StateId s, StateId t) {
    if (s > t) std::swap(s, t);
    return (static_cast<std::uint64_t>(s) << 32) | t;
  }
  std::optional<std::uint32_t> index(StateId s, StateId t) const;
  std::uint32_t add_pair(StateId s, StateId t);
  std::optional<CertificateEntry> violation(std::uint32_t i);

  const Lts& lts_;
  Analysis analysis_;
  WeakTransitions weak_;
  Mode mode_;
  std::vector<std::array<StateId, 2>> pairs_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> dependents_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

}  // namespace tccs::detail
