#include "generators.hpp"

#include <algorithm>
#include <functional>

#include "tccs/syntax.hpp"

namespace tccs::testgen {
namespace {

struct Sig {
  std::string ident;
  std::size_t arity;
};

std::vector<Sig> signatures(const DefTable& defs) {
  std::vector<Sig> out;
  for (const auto& [ident, def] : defs) {
    if (ident.front() == '#' || ident == "emit") continue;
    out.push_back({ident, def.params.size()});
  }
  return out;
}

std::size_t size_of(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Nil:
    case Process::Kind::Call:
      return 1;
    case Process::Kind::Prefix:
      return 1 + size_of(p.cont());
    case Process::Kind::Restrict:
      return 1 + size_of(p.body());
    case Process::Kind::Sum:
    case Process::Kind::Par:
      return 1 + size_of(p.left()) + size_of(p.right());
    case Process::Kind::ElseNext:
      return 1 + size_of(p.now()) + size_of(p.later());
  }
  return 1;
}

}  // namespace

Generator::Generator(std::uint64_t seed, GenConfig cfg)
    : rng_(seed), cfg_(std::move(cfg)) {}

int Generator::below(int n) {
  return n <= 1 ? 0 : std::uniform_int_distribution<int>(0, n - 1)(rng_);
}

bool Generator::chance(double p) {
  return std::bernoulli_distribution(p)(rng_);
}

Name Generator::pick(const std::vector<Name>& names) {
  return names[below(static_cast<int>(names.size()))];
}

Process Generator::gen_call(const Scope& scope, DefTable& defs) {
  std::vector<Sig> ok;
  const auto& pool = scope.in_body ? scope.params : scope.names;
  for (const auto& s : signatures(defs)) {
    if (s.arity == 0 || !pool.empty()) ok.push_back(s);
  }
  if (ok.empty()) return Process();
  const Sig& s = ok[below(static_cast<int>(ok.size()))];
  std::vector<Name> args;
  for (std::size_t i = 0; i < s.arity; ++i) args.push_back(pick(pool));
  return Process::call(s.ident, args);
}

Process Generator::gen(int depth, const Scope& scope, DefTable& defs) {
  const bool calls = !signatures(defs).empty() && !(scope.in_body && scope.under_par);
  const bool names = !scope.names.empty();
  enum Choice { Nil, In, Out, Tau, Sum, Par, New, Call, Else, Tick, Omega };
  std::vector<std::pair<Choice, int>> menu{{Nil, 3}};
  if (names) menu.insert(menu.end(), {{In, 4}, {Out, 4}});
  if (calls) menu.push_back({Call, 2});
  if (depth > 0) {
    menu.insert(menu.end(), {{Tau, 2}, {Sum, 2}, {Par, 2}, {New, 1}, {Omega, 1}});
    if (!cfg_.ccs) menu.insert(menu.end(), {{Else, 2}, {Tick, 1}});
  }
  int total = 0;
  for (auto& [c, w] : menu) total += w;
  int r = below(total);
  Choice choice = Nil;
  for (auto& [c, w] : menu) {
    if (r < w) {
      choice = c;
      break;
    }
    r -= w;
  }
  const int d = depth - 1;
  switch (choice) {
    case Nil:
      return Process();
    case In:
      return Process::prefix(Polarity::In, pick(scope.names), gen(d, scope, defs));
    case Out:
      return Process::prefix(Polarity::Out, pick(scope.names), gen(d, scope, defs));
    case Tau:
      return tau_prefix(gen(d, scope, defs));
    case Sum:
      return Process::sum(gen(d, scope, defs), gen(d, scope, defs));
    case Par: {
      Scope inner = scope;
      inner.under_par = true;
      return Process::par(gen(d, inner, defs), gen(d, inner, defs));
    }
    case New: {
      const Name a(cfg_.names[below(static_cast<int>(cfg_.names.size()))]);
      Scope inner = scope;
      if (std::find(inner.names.begin(), inner.names.end(), a) == inner.names.end()) {
        inner.names.push_back(a);
      }
      std::erase(inner.params, a);
      return Process::restrict(a, gen(d, inner, defs));
    }
    case Call:
      return gen_call(scope, defs);
    case Else:
      return Process::else_next(gen(d, scope, defs), gen(d, scope, defs));
    case Tick:
      return tick_prefix(gen(d, scope, defs));
    case Omega:
      return omega(defs);
  }
  return Process();
}

void Generator::gen_defs(DefTable& defs) {
  const int k = below(cfg_.max_defs + 1);
  struct Pending {
    std::string ident;
    std::vector<Name> params;
  };
  std::vector<Pending> pending;
  for (int i = 0; i < k; ++i) {
    Pending p{"G" + std::to_string(++def_counter_), {}};
    for (const auto& n : cfg_.names) {
      if (chance(0.4)) p.params.emplace_back(n);
    }
    pending.push_back(std::move(p));
  }
  // Bodies may call any definition of this batch, so signatures go in first.
  DefTable sigs = defs;
  for (const auto& p : pending) sigs.define(p.ident, Definition{p.params, Process()});
  std::vector<Process> bodies;
  for (const auto& p : pending) {
    Scope scope{p.params, p.params, true, false};
    bodies.push_back(gen(3, scope, sigs));
  }
  for (const auto& [ident, def] : sigs) {
    if (!def.body.is_nil() || ident.front() == '#') defs.define(ident, def);
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    defs.define(pending[i].ident, Definition{pending[i].params, bodies[i]});
  }
}

Sample Generator::sample() {
  Sample s;
  gen_defs(s.defs);
  s.term = term_over(s.defs, cfg_.depth);
  return s;
}

Process Generator::term_over(DefTable& defs, int depth) {
  std::vector<Name> names(cfg_.names.begin(), cfg_.names.end());
  Scope scope{names, names, false, false};
  return gen(depth, scope, defs);
}

Process Generator::perturb(const Process& p, DefTable& defs) {
  const std::size_t n = size_of(p);
  std::size_t target = static_cast<std::size_t>(below(static_cast<int>(n)));
  std::size_t counter = 0;
  // `safe`: inserting a tau here preserves weak bisimilarity of the whole.
  std::function<Process(const Process&, bool)> go = [&](const Process& t,
                                                       bool safe) -> Process {
    if (counter++ == target) {
      std::vector<int> options{0, 1, 2};
      if (safe) options.push_back(3);
      if (safe && t.kind() == Process::Kind::Call) options.push_back(4);
      switch (options[below(static_cast<int>(options.size()))]) {
        case 0:
          return chance(0.5) ? Process::par(t, Process()) : Process::par(Process(), t);
        case 1: {
          const auto used = all_names(t);
          Name x("z");
          for (int i = 1; used.contains(x); ++i) x = Name("z" + std::to_string(i));
          return Process::restrict(x, t);
        }
        case 2:
          return Process::sum(t, t);
        case 3:
          return tau_prefix(t);
        case 4: {
          const Definition& def = defs.at(t.ident());
          std::map<Name, Name> ren;
          for (std::size_t i = 0; i < def.params.size(); ++i) ren[def.params[i]] = t.args()[i];
          return substitute(def.body, ren);
        }
      }
    }
    switch (t.kind()) {
      case Process::Kind::Nil:
      case Process::Kind::Call:
        return t;
      case Process::Kind::Prefix:
        return Process::prefix(t.polarity(), t.name(), go(t.cont(), true));
      case Process::Kind::Restrict:
        return Process::restrict(t.name(), go(t.body(), safe));
      case Process::Kind::Sum: {
        Process l = go(t.left(), false);
        return Process::sum(l, go(t.right(), false));
      }
      case Process::Kind::Par: {
        Process l = go(t.left(), safe);
        return Process::par(l, go(t.right(), safe));
      }
      case Process::Kind::ElseNext: {
        Process now = go(t.now(), false);
        return Process::else_next(now, go(t.later(), true));
      }
    }
    return t;
  };
  return go(p, true);
}

Process Generator::mutate(const Process& p, DefTable& defs) {
  const std::size_t n = size_of(p);
  const std::size_t target = static_cast<std::size_t>(below(static_cast<int>(n)));
  std::size_t counter = 0;
  std::function<Process(const Process&)> go = [&](const Process& t) -> Process {
    if (counter++ == target) return term_over(defs, 2);
    switch (t.kind()) {
      case Process::Kind::Nil:
      case Process::Kind::Call:
        return t;
      case Process::Kind::Prefix:
        return Process::prefix(t.polarity(), t.name(), go(t.cont()));
      case Process::Kind::Restrict:
        return Process::restrict(t.name(), go(t.body()));
      case Process::Kind::Sum: {
        Process l = go(t.left());
        return Process::sum(l, go(t.right()));
      }
      case Process::Kind::Par: {
        Process l = go(t.left());
        return Process::par(l, go(t.right()));
      }
      case Process::Kind::ElseNext: {
        Process now = go(t.now());
        return Process::else_next(now, go(t.later()));
      }
    }
    return t;
  };
  return go(p);
}

SamplePair Generator::related_pair() {
  Sample s = sample();
  SamplePair out{s.defs, s.term, s.term};
  const int rounds = 1 + below(3);
  for (int i = 0; i < rounds; ++i) out.q = perturb(out.q, out.defs);
  if (chance(0.5)) std::swap(out.p, out.q);
  return out;
}

SamplePair Generator::pair() {
  switch (below(4)) {
    case 0:
    case 1:
      return related_pair();
    case 2: {
      Sample s = sample();
      Process q = mutate(s.term, s.defs);
      return {s.defs, s.term, q};
    }
    default: {
      Sample s = sample();
      Process q = term_over(s.defs, std::max(1, cfg_.depth - 2));
      return {s.defs, s.term, q};
    }
  }
}

Sample Generator::sl_sample() {
  Sample s;
  DefTable& defs = s.defs;
  // Signatures, then bodies; calls only in else branches, never under |.
  const int k = below(3);
  std::vector<std::pair<std::string, std::vector<Name>>> sigs;
  for (int i = 0; i < k; ++i) {
    std::vector<Name> params;
    for (const auto& n : cfg_.names) {
      if (chance(0.5)) params.emplace_back(n);
    }
    sigs.emplace_back("S" + std::to_string(++def_counter_), params);
  }
  // `may_call`: a call may appear here; `quiet`: never (body under |).
  std::function<Process(int, const std::vector<Name>&, const std::vector<Name>&, bool,
                        bool, bool)>
      go = [&](int depth, const std::vector<Name>& names,
               const std::vector<Name>& params, bool body, bool may_call,
               bool quiet) -> Process {
    std::vector<int> menu{0};
    if (!names.empty()) menu.insert(menu.end(), {1, 1, 2, 2});
    if (depth > 0) menu.insert(menu.end(), {3, 4});
    if (may_call && !sigs.empty()) menu.insert(menu.end(), {5, 5});
    switch (menu[below(static_cast<int>(menu.size()))]) {
      case 1:
        return emit(pick(names), defs);
      case 2: {
        const Name a = pick(names);
        Process then_branch = go(depth - 1, names, params, body, false, quiet);
        Process else_branch = go(depth - 1, names, params, body, !quiet, quiet);
        return present(a, then_branch, else_branch);
      }
      case 3: {
        const bool q = quiet || body;
        return Process::par(go(depth - 1, names, params, body, may_call && !q, q),
                            go(depth - 1, names, params, body, may_call && !q, q));
      }
      case 4: {
        const Name a(cfg_.names[below(static_cast<int>(cfg_.names.size()))]);
        std::vector<Name> inner = names;
        if (std::find(inner.begin(), inner.end(), a) == inner.end()) inner.push_back(a);
        std::vector<Name> inner_params = params;
        std::erase(inner_params, a);
        return Process::restrict(a, go(depth - 1, inner, inner_params, body, may_call, quiet));
      }
      case 5: {
        const auto& [ident, ps] = sigs[below(static_cast<int>(sigs.size()))];
        const auto& pool = body ? params : names;
        if (!ps.empty() && pool.empty()) return Process();
        std::vector<Name> args;
        for (std::size_t i = 0; i < ps.size(); ++i) args.push_back(pick(pool));
        return Process::call(ident, args);
      }
      default:
        return Process();
    }
  };
  for (const auto& [ident, params] : sigs) {
    defs.define(ident, Definition{params, go(3, params, params, true, false, false)});
  }
  std::vector<Name> names(cfg_.names.begin(), cfg_.names.end());
  Process top = go(3, names, names, false, true, false);
  for (int i = below(3); i > 0; --i) {
    top = Process::par(top, go(2, names, names, false, true, false));
  }
  s.term = top;
  return s;
}

std::vector<Process> enumerate_terms(int size, bool ccs, DefTable& defs) {
  if (!defs.contains("D")) {
    defs.define("D", Definition{{}, Process::sum(tau_prefix(Process::call("D", {})),
                                                 tau_prefix(Process()))});
  }
  const Name a("a"), b("b");
  std::vector<std::vector<Process>> by_size(size + 1);
  if (size >= 1) by_size[1] = {Process(), omega(defs), Process::call("D", {})};
  for (int s = 2; s <= size; ++s) {
    auto& out = by_size[s];
    for (const auto& p : by_size[s - 1]) {
      for (const auto& n : {a, b}) {
        out.push_back(Process::prefix(Polarity::In, n, p));
        out.push_back(Process::prefix(Polarity::Out, n, p));
      }
      out.push_back(tau_prefix(p));
      if (!ccs) out.push_back(tick_prefix(p));
      out.push_back(Process::restrict(a, p));
    }
    for (int l = 1; l + 1 < s; ++l) {
      const int r = s - 1 - l;
      for (const auto& p : by_size[l]) {
        for (const auto& q : by_size[r]) {
          out.push_back(Process::sum(p, q));
          out.push_back(Process::par(p, q));
          if (!ccs) out.push_back(Process::else_next(p, q));
        }
      }
    }
  }
  return size >= 1 ? by_size[size] : std::vector<Process>{};
}

}  // namespace tccs::testgen
