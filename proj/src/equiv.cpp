#include "tccs/equiv.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "game.hpp"
#include "tccs/errors.hpp"
#include "tccs/syntax.hpp"

namespace tccs {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Usual: return "usual";
    case Mode::UsualUntimed: return "usual-untimed";
    case Mode::Conv: return "conv";
    case Mode::ConvDiv: return "conv-div";
    case Mode::ConvUntimed: return "conv-untimed";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  for (Mode m : {Mode::Usual, Mode::UsualUntimed, Mode::Conv, Mode::ConvDiv,
                 Mode::ConvUntimed}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::RedTau: return "red-tau";
    case Clause::RedTick: return "red-tick";
    case Clause::Lab: return "lab";
    case Clause::Diverge: return "diverge";
    case Clause::Converge: return "converge";
    case Clause::Usual: return "usual";
  }
  return "?";
}

WeakTransitions::WeakTransitions(const Lts& lts)
    : lts_(lts), closure_(lts.num_states()), stamp_(lts.num_states(), 0) {
  lts.require_complete();
}

std::span<const StateId> WeakTransitions::tau_closure(StateId s) {
  auto& slot = closure_[s];
  if (!slot) {
    ++epoch_;
    std::vector<StateId> out{s};
    stamp_[s] = epoch_;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const auto& e : lts_.out(out[i])) {
        if (e.label == Lts::kTau && stamp_[e.dst] != epoch_) {
          stamp_[e.dst] = epoch_;
          out.push_back(e.dst);
        }
      }
    }
    std::sort(out.begin(), out.end());
    slot = std::move(out);
  }
  return *slot;
}

std::span<const StateId> WeakTransitions::after(StateId s, LabelId l) {
  if (l == Lts::kTau) return tau_closure(s);
  const std::uint64_t key =
      static_cast<std::uint64_t>(s) * lts_.num_labels() + l;
  if (auto it = weak_.find(key); it != weak_.end()) return it->second;
  std::vector<StateId> mid;
  for (StateId s1 : tau_closure(s)) {
    for (const auto& e : lts_.out(s1)) {
      if (e.label == l) mid.push_back(e.dst);
    }
  }
  std::sort(mid.begin(), mid.end());
  mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
  std::set<StateId> out;
  for (StateId s2 : mid) {
    auto c = tau_closure(s2);
    out.insert(c.begin(), c.end());
  }
  auto [it, _] = weak_.emplace(key, std::vector<StateId>(out.begin(), out.end()));
  return it->second;
}

std::vector<std::pair<StateId, StateId>> weak(const Lts& lts,
                                              const Label& label) {
  WeakTransitions w(lts);
  std::vector<std::pair<StateId, StateId>> out;
  const auto id = label.is_tau() ? std::optional<LabelId>(Lts::kTau)
                                 : lts.find_label(label);
  for (StateId s = 0; s < lts.num_states(); ++s) {
    if (!id) break;
    for (StateId t : w.after(s, *id)) out.emplace_back(s, t);
  }
  return out;
}

namespace detail {

Game::Game(const Lts& lts, Mode mode)
    : lts_(lts), analysis_(lts), weak_(lts), mode_(mode) {}

std::optional<Clause> Game::clause_for(const Edge& e) const {
  switch (mode_) {
    case Mode::Usual:
      return Clause::Usual;
    case Mode::UsualUntimed:
      if (e.label == Lts::kTick) return std::nullopt;
      return Clause::Usual;
    case Mode::Conv:
    case Mode::ConvDiv:
    case Mode::ConvUntimed:
      if (e.label == Lts::kTau) return Clause::RedTau;
      if (e.label == Lts::kTick) {
        if (mode_ == Mode::ConvUntimed) return std::nullopt;
        return Clause::RedTick;
      }
      if (!analysis_.ctx_converge(e.src)) return std::nullopt;
      return Clause::Lab;
  }
  return std::nullopt;
}

void Game::responses(StateId responder, const Edge& e, Clause clause,
                     std::vector<StateId>& out) {
  out.clear();
  auto weak_moves = weak_.after(responder, e.label);
  out.assign(weak_moves.begin(), weak_moves.end());
  if (clause == Clause::Lab && !analysis_.ctx_converge(e.dst)) {
    auto idle = weak_.tau_closure(responder);
    out.insert(out.end(), idle.begin(), idle.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
}

std::optional<Clause> Game::filter(StateId s, StateId t) const {
  if (mode_ == Mode::ConvDiv &&
      analysis_.may_diverge(s) != analysis_.may_diverge(t)) {
    return Clause::Diverge;
  }
  if (mode_ == Mode::ConvUntimed &&
      analysis_.may_converge(s) != analysis_.may_converge(t)) {
    return Clause::Converge;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> Game::index(StateId s, StateId t) const {
  auto it = index_.find(key(s, t));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Game::alive(StateId s, StateId t) const {
  if (s == t) return true;
  auto i = index(s, t);
  return !i || alive_[*i];
}

std::uint32_t Game::add_pair(StateId s, StateId t) {
  auto [it, inserted] =
      index_.emplace(key(s, t), static_cast<std::uint32_t>(pairs_.size()));
  if (inserted) {
    pairs_.push_back({s, t});
    alive_.push_back(1);
    dependents_.emplace_back();
  }
  return it->second;
}

void Game::explore(std::span<const std::array<StateId, 2>> seeds) {
  std::size_t first_new = pairs_.size();
  for (const auto& [s, t] : seeds) {
    if (s != t) add_pair(s, t);
  }
  std::vector<StateId> resp;
  for (std::size_t i = first_new; i < pairs_.size(); ++i) {
    const auto [a, b] = pairs_[i];
    for (int dir = 0; dir < 2; ++dir) {
      const StateId x = dir == 0 ? a : b;
      const StateId y = dir == 0 ? b : a;
      for (const auto& e : lts_.out(x)) {
        auto clause = clause_for(e);
        if (!clause) continue;
        responses(y, e, *clause, resp);
        for (StateId y2 : resp) {
          if (e.dst == y2) continue;
          const std::uint32_t j = add_pair(e.dst, y2);
          auto& deps = dependents_[j];
          if (deps.empty() || deps.back() != i) deps.push_back(static_cast<std::uint32_t>(i));
        }
      }
    }
  }
}

std::optional<CertificateEntry> Game::violation(std::uint32_t i) {
  const auto [a, b] = pairs_[i];
  std::vector<StateId> resp;
  for (int dir = 0; dir < 2; ++dir) {
    const StateId x = dir == 0 ? a : b;
    const StateId y = dir == 0 ? b : a;
    for (const auto& e : lts_.out(x)) {
      auto clause = clause_for(e);
      if (!clause) continue;
      responses(y, e, *clause, resp);
      const bool answered = std::any_of(resp.begin(), resp.end(), [&](StateId y2) {
        return alive(e.dst, y2);
      });
      if (!answered) {
        return CertificateEntry{{a, b}, *clause, Challenge{e.src, e.label, e.dst}, 0};
      }
    }
  }
  return std::nullopt;
}

int Game::solve(std::vector<CertificateEntry>& certificate) {
  for (std::uint32_t i = 0; i < pairs_.size(); ++i) {
    if (auto c = filter(pairs_[i][0], pairs_[i][1])) {
      alive_[i] = 0;
      certificate.push_back({pairs_[i], *c, std::nullopt, 0});
    }
  }
  std::vector<std::uint32_t> current(pairs_.size());
  for (std::uint32_t i = 0; i < current.size(); ++i) current[i] = i;
  int round = 0;
  int last_effective = 0;
  while (!current.empty()) {
    ++round;
    std::set<std::uint32_t> next;
    for (std::uint32_t i : current) {
      if (!alive_[i]) continue;
      if (auto entry = violation(i)) {
        alive_[i] = 0;
        entry->round = round;
        certificate.push_back(*entry);
        last_effective = round;
        for (std::uint32_t d : dependents_[i]) {
          if (alive_[d]) next.insert(d);
        }
      }
    }
    current.assign(next.begin(), next.end());
  }
  return last_effective;
}

}  // namespace detail

namespace {

bool is_ccs_state(const Lts& lts, StateId s) {
  return classify(lts.term(s), lts.defs()).is_ccs;
}

void require_ccs_if_untimed(const Lts& lts, StateId s, StateId t, Mode mode) {
  if (mode != Mode::UsualUntimed && mode != Mode::ConvUntimed) return;
  if (!is_ccs_state(lts, s) || !is_ccs_state(lts, t)) {
    throw ModeError(std::string(to_string(mode)) +
                    " requires CCS processes (no else_next)");
  }
}

}  // namespace

EquivVerdict check_states(std::shared_ptr<const Lts> lts, StateId s, StateId t,
                          Mode mode) {
  lts->require_complete();
  require_ccs_if_untimed(*lts, s, t, mode);
  EquivVerdict v;
  v.mode = mode;
  v.roots = {s, t};
  v.lts = lts;
  if (s == t) {
    v.related = true;
    return v;
  }
  detail::Game game(*lts, mode);
  const std::array<StateId, 2> root{s, t};
  game.explore(std::span(&root, 1));
  v.rounds = game.solve(v.certificate);
  v.related = game.alive(s, t);
  return v;
}

EquivVerdict check(const Process& p, const Process& q, Mode mode,
                   const DefTable& defs, std::size_t bound) {
  const std::array<Process, 2> roots{p, q};
  auto lts = std::make_shared<const Lts>(build_lts(roots, defs, bound));
  lts->require_complete();
  return check_states(lts, lts->roots()[0],
                      lts->roots()[lts->roots().size() > 1 ? 1 : 0], mode);
}

EquivVerdict check_ccs_equivalently(const Process& p, const Process& q,
                                    const DefTable& defs, std::size_t bound) {
  if (!classify(p, defs).is_ccs || !classify(q, defs).is_ccs) {
    throw ModeError("check_ccs_equivalently requires CCS processes");
  }
  return check(p, q, Mode::ConvUntimed, defs, bound);
}

bool Relation::contains(StateId s, StateId t) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(s, t));
}

Relation bisimilarity(const Lts& lts, Mode mode) {
  lts.require_complete();
  detail::Game game(lts, mode);
  std::vector<std::array<StateId, 2>> seeds;
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (StateId t = s + 1; t < lts.num_states(); ++t) seeds.push_back({s, t});
  }
  game.explore(seeds);
  std::vector<CertificateEntry> scratch;
  game.solve(scratch);
  Relation r{mode, {}};
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (StateId t = 0; t < lts.num_states(); ++t) {
      if (game.alive(s, t)) r.pairs.emplace_back(s, t);
    }
  }
  return r;
}

bool replay_certificate(const EquivVerdict& v) {
  if (!v.lts || v.related) return false;
  const Lts& lts = *v.lts;
  detail::Game game(lts, v.mode);
  game.explore(std::span(&v.roots, 1));
  std::vector<StateId> resp;
  for (const auto& entry : v.certificate) {
    const auto [a, b] = entry.pair;
    if (a == b || !game.alive(a, b)) return false;
    if (!entry.challenge) {
      if (game.filter(a, b) != entry.clause) return false;
    } else {
      const Challenge& c = *entry.challenge;
      if (c.src != a && c.src != b) return false;
      const StateId responder = c.src == a ? b : a;
      const auto out = lts.out(c.src);
      auto it = std::find_if(out.begin(), out.end(), [&](const Edge& e) {
        return e.label == c.label && e.dst == c.dst;
      });
      if (it == out.end() || game.clause_for(*it) != entry.clause) return false;
      game.responses(responder, *it, entry.clause, resp);
      for (StateId y2 : resp) {
        if (game.alive(c.dst, y2)) return false;
      }
    }
    game.kill(a, b);
  }
  return !game.alive(v.roots[0], v.roots[1]);
}

}  // namespace tccs
