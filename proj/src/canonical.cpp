#include <algorithm>
#include <set>

#include "syntax_detail.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

void collect_operands(const Process& p, Process::Kind kind,
                      std::vector<Process>& out) {
  if (p.kind() == kind) {
    collect_operands(p.left(), kind, out);
    collect_operands(p.right(), kind, out);
  } else {
    out.push_back(p);
  }
}

bool same(const Process& a, const Process& b) { return a.node_id() == b.node_id(); }

// Left-nested chain of `kind` whose operands are exactly `ops`, in order.
bool is_chain(const Process& p, Process::Kind kind, const std::vector<Process>& ops) {
  const Process* cur = &p;
  for (std::size_t i = ops.size(); i-- > 1;) {
    if (cur->kind() != kind || !same(cur->right(), ops[i])) return false;
    cur = &cur->left();
  }
  return same(*cur, ops[0]);
}

// Structural normalization. Bound names are left as they are; sorting
// uses binder-invariant keys so the final renumbering cannot reorder.
// Unchanged subterms are returned as is, which keeps sharing.
Process normalize(const Process& p, std::vector<Name>& env) {
  switch (p.kind()) {
    case Process::Kind::Nil:
    case Process::Kind::Call:
      return p;
    case Process::Kind::Prefix: {
      Process cont = normalize(p.cont(), env);
      if (same(cont, p.cont())) return p;
      return Process::prefix(p.polarity(), p.name(), std::move(cont));
    }
    case Process::Kind::ElseNext: {
      Process now = normalize(p.now(), env);
      Process later = normalize(p.later(), env);
      if (same(now, p.now()) && same(later, p.later())) return p;
      return Process::else_next(std::move(now), std::move(later));
    }
    case Process::Kind::Restrict: {
      if (!detail::occurs_free(p.name(), p.body())) {
        return normalize(p.body(), env);
      }
      env.push_back(p.name());
      Process body = normalize(p.body(), env);
      env.pop_back();
      if (same(body, p.body())) return p;
      return Process::restrict(p.name(), std::move(body));
    }
    case Process::Kind::Sum:
    case Process::Kind::Par: {
      const auto kind = p.kind();
      std::vector<Process> operands;
      collect_operands(normalize(p.left(), env), kind, operands);
      collect_operands(normalize(p.right(), env), kind, operands);
      if (kind == Process::Kind::Par) {
        std::erase_if(operands, [](const Process& x) { return x.is_nil(); });
        if (operands.empty()) return Process::nil();
      }
      std::vector<std::pair<std::string, Process>> keyed;
      keyed.reserve(operands.size());
      for (auto& x : operands) {
        keyed.emplace_back(detail::binder_invariant_key(x, env), std::move(x));
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      operands.clear();
      for (const auto& k : keyed) operands.push_back(k.second);
      if (is_chain(p, kind, operands)) return p;
      Process out = keyed.front().second;
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        out = kind == Process::Kind::Sum ? Process::sum(out, keyed[i].second)
                                         : Process::par(out, keyed[i].second);
      }
      return out;
    }
  }
  return p;
}

class Renumber {
 public:
  explicit Renumber(std::set<Name> skip) : skip_(std::move(skip)) {}

  Process run(const Process& p) {
    switch (p.kind()) {
      case Process::Kind::Nil:
        return p;
      case Process::Kind::Prefix: {
        Name n = lookup(p.name());
        Process cont = run(p.cont());
        if (n == p.name() && same(cont, p.cont())) return p;
        return Process::prefix(p.polarity(), std::move(n), std::move(cont));
      }
      case Process::Kind::Sum:
      case Process::Kind::Par: {
        Process l = run(p.left());
        Process r = run(p.right());
        if (same(l, p.left()) && same(r, p.right())) return p;
        return p.kind() == Process::Kind::Sum ? Process::sum(std::move(l), std::move(r))
                                              : Process::par(std::move(l), std::move(r));
      }
      case Process::Kind::ElseNext: {
        Process now = run(p.now());
        Process later = run(p.later());
        if (same(now, p.now()) && same(later, p.later())) return p;
        return Process::else_next(std::move(now), std::move(later));
      }
      case Process::Kind::Call: {
        std::vector<Name> args;
        args.reserve(p.args().size());
        bool changed = false;
        for (const auto& a : p.args()) {
          args.push_back(lookup(a));
          changed = changed || args.back() != a;
        }
        if (!changed) return p;
        return Process::call(p.ident(), std::move(args));
      }
      case Process::Kind::Restrict: {
        Name fresh = next();
        scope_.emplace_back(p.name(), fresh);
        Process body = run(p.body());
        scope_.pop_back();
        if (fresh == p.name() && same(body, p.body())) return p;
        return Process::restrict(std::move(fresh), std::move(body));
      }
    }
    return p;
  }

 private:
  Name lookup(const Name& n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    return n;
  }

  Name next() {
    for (;;) {
      Name n = Name::fresh(counter_++);
      if (!skip_.contains(n)) return n;
    }
  }

  std::set<Name> skip_;
  std::vector<std::pair<Name, Name>> scope_;
  unsigned counter_ = 1;
};

}  // namespace

Process canonicalize(const Process& p) {
  std::vector<Name> env;
  Process normal = normalize(p, env);
  std::set<Name> skip;
  for (const auto& n : free_names(normal)) {
    if (n.is_fresh()) skip.insert(n);
  }
  return Renumber(std::move(skip)).run(normal);
}

}  // namespace tccs
