#include "tccs/lts.hpp"

#include <algorithm>
#include <deque>

#include "tccs/errors.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

struct RawStep {
  Label label;
  Process target;
};

struct Moves {
  std::vector<RawStep> actions;  // α-transitions
  std::optional<Process> tick;   // only when no tau among actions

  bool has_tau() const {
    return std::any_of(actions.begin(), actions.end(),
                       [](const RawStep& s) { return s.label.is_tau(); });
  }
};

Process unfold(const Process& call, const DefTable& defs) {
  const Definition& def = defs.at(call.ident());
  std::map<Name, Name> renaming;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    renaming.emplace(def.params[i], call.args()[i]);
  }
  return substitute(def.body, renaming);
}

// Bottom-up: the α-moves of each operator first, then its tick move, which
// exists exactly when the operator has no tau move.
Moves moves(const Process& p, const DefTable& defs) {
  Moves m;
  switch (p.kind()) {
    case Process::Kind::Nil:
      m.tick = p;
      return m;
    case Process::Kind::Prefix:
      m.actions.push_back({p.polarity() == Polarity::In ? Label::in(p.name())
                                                        : Label::out(p.name()),
                           p.cont()});
      m.tick = p;
      return m;
    case Process::Kind::Sum: {
      Moves l = moves(p.left(), defs);
      Moves r = moves(p.right(), defs);
      m.actions = std::move(l.actions);
      m.actions.insert(m.actions.end(), r.actions.begin(), r.actions.end());
      if (l.tick && r.tick) m.tick = Process::sum(*l.tick, *r.tick);
      return m;
    }
    case Process::Kind::Par: {
      Moves l = moves(p.left(), defs);
      Moves r = moves(p.right(), defs);
      for (const auto& s : l.actions) {
        m.actions.push_back({s.label, Process::par(s.target, p.right())});
      }
      for (const auto& s : r.actions) {
        m.actions.push_back({s.label, Process::par(p.left(), s.target)});
      }
      for (const auto& s : l.actions) {
        if (!s.label.is_comm()) continue;
        const Label co = s.label.co();
        for (const auto& t : r.actions) {
          if (t.label == co) {
            m.actions.push_back({Label::tau(), Process::par(s.target, t.target)});
          }
        }
      }
      if (!m.has_tau() && l.tick && r.tick) {
        m.tick = Process::par(*l.tick, *r.tick);
      }
      return m;
    }
    case Process::Kind::Restrict: {
      Moves inner = moves(p.body(), defs);
      for (auto& s : inner.actions) {
        if (s.label.is_comm() && s.label.name() == p.name()) continue;
        m.actions.push_back({s.label, Process::restrict(p.name(), s.target)});
      }
      if (inner.tick) m.tick = Process::restrict(p.name(), *inner.tick);
      return m;
    }
    case Process::Kind::Call:
      m.actions.push_back({Label::tau(), unfold(p, defs)});
      return m;
    case Process::Kind::ElseNext: {
      Moves now = moves(p.now(), defs);
      m.actions = std::move(now.actions);
      if (!m.has_tau()) m.tick = p.later();
      return m;
    }
  }
  return m;
}

// Successors keyed by their canonical text, sorted and deduplicated.
std::vector<std::pair<std::string, Transition>> keyed_step(const Process& p,
                                                          const DefTable& defs) {
  Moves m = moves(p, defs);
  std::vector<std::pair<std::string, Transition>> keyed;
  keyed.reserve(m.actions.size() + 1);
  auto add = [&](const Label& l, const Process& target) {
    Process c = canonicalize(target);
    std::string text = pretty(c);
    keyed.emplace_back(std::move(text), Transition{l, std::move(c)});
  };
  for (const auto& s : m.actions) add(s.label, s.target);
  if (m.tick) add(Label::tick(), *m.tick);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.label != b.second.label) return a.second.label < b.second.label;
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) {
                            return a.second.label == b.second.label &&
                                   a.first == b.first;
                          }),
              keyed.end());
  return keyed;
}

}  // namespace

std::vector<Transition> step(const Process& p, const DefTable& defs) {
  auto keyed = keyed_step(p, defs);
  std::vector<Transition> out;
  out.reserve(keyed.size());
  for (auto& [text, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::optional<std::set<Label>> commitments(const Process& p,
                                           const DefTable& defs) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return std::set<Label>{};
    case Process::Kind::Prefix:
      return std::set<Label>{p.polarity() == Polarity::In ? Label::in(p.name())
                                                          : Label::out(p.name())};
    case Process::Kind::Sum: {
      auto l = commitments(p.left(), defs);
      auto r = commitments(p.right(), defs);
      if (!l || !r) return std::nullopt;
      l->insert(r->begin(), r->end());
      return l;
    }
    case Process::Kind::ElseNext:
      return commitments(p.now(), defs);
    case Process::Kind::Restrict: {
      auto l = commitments(p.body(), defs);
      if (!l) return std::nullopt;
      std::erase_if(*l, [&](const Label& x) { return x.name() == p.name(); });
      return l;
    }
    case Process::Kind::Par: {
      auto l = commitments(p.left(), defs);
      auto r = commitments(p.right(), defs);
      if (!l || !r) return std::nullopt;
      for (const auto& x : *l) {
        if (r->contains(x.co())) return std::nullopt;
      }
      l->insert(r->begin(), r->end());
      return l;
    }
    case Process::Kind::Call:
      // No rule; the identifier must still be bound.
      defs.at(p.ident());
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<StateId> Lts::find(const Process& canonical) const {
  auto it = index_.find(pretty(canonical));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Edge> Lts::out(StateId s) const {
  if (s >= expanded_count_) return {};
  return std::span<const Edge>(edges_).subspan(
      out_begin_[s], out_begin_[s + 1] - out_begin_[s]);
}

std::optional<LabelId> Lts::find_label(const Label& l) const {
  for (LabelId i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == l) return i;
  }
  return std::nullopt;
}

void Lts::require_complete() const {
  if (truncated_) throw TruncatedLts();
}

StateId Lts::intern(const Process& canonical, std::string text) {
  auto [it, inserted] =
      index_.emplace(text, static_cast<StateId>(terms_.size()));
  if (inserted) {
    terms_.push_back(canonical);
    texts_.push_back(std::move(text));
    stable_.push_back(0);
    commit_.emplace_back();
  }
  return it->second;
}

LabelId Lts::intern_label(const Label& l) {
  if (auto id = find_label(l)) return *id;
  labels_.push_back(l);
  return static_cast<LabelId>(labels_.size() - 1);
}

Lts build_lts(std::span<const Process> roots, const DefTable& defs,
              std::size_t bound) {
  Lts lts;
  lts.defs_ = std::make_shared<const DefTable>(defs);
  lts.labels_ = {Label::tau(), Label::tick()};
  lts.out_begin_.push_back(0);
  for (const auto& r : roots) {
    Process c = canonicalize(r);
    std::string text = pretty(c);
    if (lts.index_.find(text) == lts.index_.end() && lts.terms_.size() >= bound) {
      lts.truncated_ = true;
      break;
    }
    lts.roots_.push_back(lts.intern(c, std::move(text)));
  }
  // States are expanded in id order; ids are handed out breadth-first.
  for (StateId s = 0; s < lts.terms_.size() && !lts.truncated_; ++s) {
    const Process term = lts.terms_[s];
    auto succ = keyed_step(term, defs);
    std::vector<Edge> pending;
    pending.reserve(succ.size());
    bool overflow = false;
    for (auto& [text, t] : succ) {
      if (lts.index_.find(text) == lts.index_.end() && lts.terms_.size() >= bound) {
        overflow = true;
        break;
      }
      const StateId dst = lts.intern(t.target, std::move(text));
      pending.push_back(Edge{s, lts.intern_label(t.label), dst});
    }
    if (overflow) {
      lts.truncated_ = true;
      break;
    }
    bool has_tau = false;
    for (const auto& e : pending) has_tau |= e.label == Lts::kTau;
    lts.stable_[s] = has_tau ? 0 : 1;
    lts.commit_[s] = commitments(term, defs);
    lts.edges_.insert(lts.edges_.end(), pending.begin(), pending.end());
    lts.out_begin_.push_back(lts.edges_.size());
    lts.expanded_count_ = s + 1;
  }
  return lts;
}

std::vector<LawViolation> verify_lts_laws(const Lts& lts) {
  std::vector<LawViolation> out;
  for (StateId s = 0; s < lts.num_states(); ++s) {
    if (!lts.expanded(s)) continue;
    std::size_t ticks = 0;
    bool has_tau = false;
    std::set<Label> ready;
    std::optional<StateId> tick_target;
    for (const auto& e : lts.out(s)) {
      const Label& l = lts.label(e.label);
      if (l.is_tick()) {
        ++ticks;
        tick_target = e.dst;
      } else if (l.is_tau()) {
        has_tau = true;
      } else {
        ready.insert(l);
      }
    }
    if ((ticks > 0) == has_tau) {
      out.push_back({s, "tick-iff-stable",
                     has_tau ? "tick and tau both enabled"
                             : "neither tick nor tau enabled"});
    }
    if (ticks > 1) {
      out.push_back({s, "tick-determinism",
                     std::to_string(ticks) + " tick successors"});
    }
    const auto& commit = lts.commit_set(s);
    if (commit.has_value() == has_tau) {
      out.push_back({s, "commitment-iff-stable",
                     commit ? "commitment defined on an unstable state"
                            : "no commitment on a stable state"});
    } else if (commit && *commit != ready) {
      out.push_back({s, "commitment-ready-set",
                     "commitment set differs from enabled communications"});
    }
    if (tick_target && *tick_target != s &&
        classify(lts.term(s), lts.defs()).is_ccs) {
      out.push_back({s, "ccs-tick-identity",
                     "CCS state ticks to " + lts.text(*tick_target)});
    }
  }
  return out;
}

}  // namespace tccs
