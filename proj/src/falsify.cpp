#include "tccs/falsify.hpp"

#include <array>
#include <set>

#include "tccs/analyses.hpp"
#include "tccs/equiv.hpp"
#include "tccs/errors.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

struct Observation {
  bool converge;
  std::set<Label> barbs;
  bool operator==(const Observation&) const = default;
};

std::string show(const std::set<Label>& labels) {
  std::string out = "{";
  for (const auto& l : labels) {
    if (out.size() > 1) out += ",";
    out += l.to_string();
  }
  return out + "}";
}

// Some state in `from_p` has no observationally equal partner in `from_q`.
std::optional<StateId> unmatched(std::span<const StateId> from_p,
                                 std::span<const StateId> from_q,
                                 const Analysis& an) {
  for (StateId x : from_p) {
    const Observation ox{an.may_converge(x), an.barbs(x)};
    bool matched = false;
    for (StateId y : from_q) {
      if (ox == Observation{an.may_converge(y), an.barbs(y)}) {
        matched = true;
        break;
      }
    }
    if (!matched) return x;
  }
  return std::nullopt;
}

std::optional<Discrepancy> compare(const Lts& lts) {
  const StateId cp = lts.roots()[0];
  const StateId cq = lts.roots()[lts.roots().size() > 1 ? 1 : 0];
  if (cp == cq) return std::nullopt;
  const Analysis an(lts);
  if (an.may_converge(cp) != an.may_converge(cq)) {
    return Discrepancy{Discrepancy::Kind::Convergence,
                       lts.text(an.may_converge(cp) ? cp : cq) +
                           " may converge, " +
                           lts.text(an.may_converge(cp) ? cq : cp) + " cannot"};
  }
  if (an.barbs(cp) != an.barbs(cq)) {
    return Discrepancy{Discrepancy::Kind::Barbs,
                       "barbs " + show(an.barbs(cp)) + " vs " + show(an.barbs(cq))};
  }
  WeakTransitions weak(lts);
  for (int dir = 0; dir < 2; ++dir) {
    const StateId x = dir == 0 ? cp : cq;
    const StateId y = dir == 0 ? cq : cp;
    for (LabelId l : {Lts::kTau, Lts::kTick}) {
      auto xs = weak.after(x, l);
      std::vector<StateId> from_x(xs.begin(), xs.end());
      auto ys = weak.after(y, l);
      if (auto bad = unmatched(from_x, ys, an)) {
        const bool tick = l == Lts::kTick;
        return Discrepancy{
            tick ? Discrepancy::Kind::AfterTick : Discrepancy::Kind::AfterReduction,
            lts.text(x) + (tick ? " =tick=> " : " ==> ") + lts.text(*bad) +
                " (converge=" + (an.may_converge(*bad) ? "true" : "false") +
                ", barbs=" + show(an.barbs(*bad)) + ") is not matched by " +
                lts.text(y)};
      }
    }
  }
  return std::nullopt;
}

Name unused_name(const std::string& stem, const std::set<Name>& taken) {
  Name n(stem);
  for (int i = 1; taken.contains(n); ++i) n = Name(stem + std::to_string(i));
  return n;
}

// Testers offer the co-action of something p or q can actually do; a
// prefix nobody can synchronise with is inert in every context.
std::vector<Process> testers(const std::set<Label>& actions,
                             const std::set<Name>& names, DefTable& defs) {
  std::set<Name> taken = names;
  const Name b = unused_name("fb", taken);
  taken.insert(b);
  const Name c = unused_name("fc", taken);
  const Process choice = internal_choice(
      internal_choice(Process::prefix(Polarity::In, b, Process()), Process()),
      Process::prefix(Polarity::In, c, Process()));
  const std::array<Process, 3> tails{Process(), omega(defs), choice};
  std::vector<Process> out;
  for (const auto& l : actions) {
    const Polarity pol = l.kind() == Label::Kind::In ? Polarity::Out : Polarity::In;
    for (const auto& tail : tails) out.push_back(Process::prefix(pol, l.name(), tail));
  }
  return out;
}

// Communication labels reachable from p or q, on user names. Falls back to
// both polarities of every name when the joint graph is too large.
std::set<Label> observed_actions(const Process& p, const Process& q,
                                 const std::set<Name>& names,
                                 const DefTable& defs, std::size_t bound) {
  std::set<Label> out;
  const std::array<Process, 2> roots{p, q};
  const Lts lts = build_lts(roots, defs, bound);
  if (lts.truncated()) {
    for (const auto& n : names) {
      out.insert(Label::in(n));
      out.insert(Label::out(n));
    }
    return out;
  }
  for (const auto& e : lts.edges()) {
    const Label& l = lts.label(e.label);
    if (l.is_comm() && names.contains(l.name())) out.insert(l);
  }
  return out;
}

}  // namespace

std::optional<Discrepancy> observe_discrepancy(const Process& p,
                                               const Process& q,
                                               const StaticContext& context,
                                               const DefTable& defs,
                                               std::size_t bound) {
  const std::array<Process, 2> roots{context.plug(p), context.plug(q)};
  Lts lts = build_lts(roots, defs, bound);
  lts.require_complete();
  return compare(lts);
}

std::optional<Falsification> falsify_with_context(const Process& p,
                                                  const Process& q,
                                                  const DefTable& defs_in,
                                                  int depth, std::size_t bound,
                                                  FalsifyStats* stats) {
  DefTable defs = defs_in;
  std::set<Name> names;
  for (const auto& n : free_names(p)) {
    if (!n.is_fresh()) names.insert(n);
  }
  for (const auto& n : free_names(q)) {
    if (!n.is_fresh()) names.insert(n);
  }
  const std::set<Label> actions = observed_actions(p, q, names, defs, bound);
  const std::vector<Process> pool = testers(actions, names, defs);
  std::set<Name> used;
  for (const auto& l : actions) used.insert(l.name());
  const std::vector<Name> binders(used.begin(), used.end());
  FalsifyStats local;
  FalsifyStats& st = stats ? *stats : local;

  auto attempt = [&](const StaticContext& ctx) -> std::optional<Falsification> {
    ++st.contexts_tried;
    try {
      if (auto d = observe_discrepancy(p, q, ctx, defs, bound)) {
        return Falsification{ctx, *d};
      }
    } catch (const TruncatedLts&) {
      ++st.truncated;
    }
    return std::nullopt;
  };

  // Size-ordered enumeration: m testers (non-decreasing pool index) under
  // k restrictions (increasing binder index), k + m = size.
  for (int size = 0; size <= depth; ++size) {
    for (int k = 0; k <= size; ++k) {
      const int m = size - k;
      if (k > static_cast<int>(binders.size())) continue;
      if (m > 0 && pool.empty()) continue;
      std::vector<std::size_t> ti(m, 0);
      for (;;) {
        std::vector<std::size_t> bi(k);
        for (int i = 0; i < k; ++i) bi[i] = i;
        for (;;) {
          StaticContext ctx;
          for (std::size_t t : ti) ctx = ctx.par_with(pool[t]);
          for (std::size_t b : bi) ctx = ctx.restrict(binders[b]);
          if (auto hit = attempt(ctx)) return hit;
          // next k-combination of binders
          int i = k - 1;
          while (i >= 0 && bi[i] == binders.size() - k + i) --i;
          if (i < 0) break;
          ++bi[i];
          for (int j = i + 1; j < k; ++j) bi[j] = bi[j - 1] + 1;
        }
        // next non-decreasing m-tuple of testers
        int i = m - 1;
        while (i >= 0 && ti[i] == pool.size() - 1) --i;
        if (i < 0) break;
        ++ti[i];
        for (int j = i + 1; j < m; ++j) ti[j] = ti[i];
      }
    }
  }
  return std::nullopt;
}

}  // namespace tccs
