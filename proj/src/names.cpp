#include <algorithm>
#include <set>

#include "syntax_detail.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

void collect_free(const Process& p, std::vector<Name>& bound,
                  std::set<Name>& out) {
  auto add = [&](const Name& n) {
    for (const auto& b : bound) {
      if (b == n) return;
    }
    out.insert(n);
  };
  switch (p.kind()) {
    case Process::Kind::Nil:
      return;
    case Process::Kind::Prefix:
      add(p.name());
      collect_free(p.cont(), bound, out);
      return;
    case Process::Kind::Sum:
    case Process::Kind::Par:
      collect_free(p.left(), bound, out);
      collect_free(p.right(), bound, out);
      return;
    case Process::Kind::Restrict:
      bound.push_back(p.name());
      collect_free(p.body(), bound, out);
      bound.pop_back();
      return;
    case Process::Kind::Call:
      for (const auto& a : p.args()) add(a);
      return;
    case Process::Kind::ElseNext:
      collect_free(p.now(), bound, out);
      collect_free(p.later(), bound, out);
      return;
  }
}

void collect_all(const Process& p, std::set<Name>& out) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return;
    case Process::Kind::Prefix:
      out.insert(p.name());
      collect_all(p.cont(), out);
      return;
    case Process::Kind::Sum:
    case Process::Kind::Par:
      collect_all(p.left(), out);
      collect_all(p.right(), out);
      return;
    case Process::Kind::Restrict:
      out.insert(p.name());
      collect_all(p.body(), out);
      return;
    case Process::Kind::Call:
      out.insert(p.args().begin(), p.args().end());
      return;
    case Process::Kind::ElseNext:
      collect_all(p.now(), out);
      collect_all(p.later(), out);
      return;
  }
}

Name rename(const std::map<Name, Name>& m, const Name& n) {
  auto it = m.find(n);
  return it == m.end() ? n : it->second;
}

Process subst(const Process& p, const std::map<Name, Name>& m,
              const std::set<Name>& taken_outer) {
  if (m.empty()) return p;
  switch (p.kind()) {
    case Process::Kind::Nil:
      return p;
    case Process::Kind::Prefix:
      return Process::prefix(p.polarity(), rename(m, p.name()),
                             subst(p.cont(), m, taken_outer));
    case Process::Kind::Sum:
      return Process::sum(subst(p.left(), m, taken_outer),
                          subst(p.right(), m, taken_outer));
    case Process::Kind::Par:
      return Process::par(subst(p.left(), m, taken_outer),
                          subst(p.right(), m, taken_outer));
    case Process::Kind::ElseNext:
      return Process::else_next(subst(p.now(), m, taken_outer),
                                subst(p.later(), m, taken_outer));
    case Process::Kind::Call: {
      std::vector<Name> args;
      args.reserve(p.args().size());
      for (const auto& a : p.args()) args.push_back(rename(m, a));
      return Process::call(p.ident(), std::move(args));
    }
    case Process::Kind::Restrict: {
      const Name& b = p.name();
      std::map<Name, Name> inner = m;
      inner.erase(b);
      bool capture = false;
      for (const auto& x : free_names(p.body())) {
        if (x == b) continue;
        auto it = inner.find(x);
        if (it != inner.end() && it->second == b) {
          capture = true;
          break;
        }
      }
      if (!capture) return Process::restrict(b, subst(p.body(), inner, taken_outer));
      std::set<Name> taken = taken_outer;
      for (const auto& [from, to] : m) {
        taken.insert(from);
        taken.insert(to);
      }
      const Name fresh = detail::smallest_fresh(taken);
      inner[b] = fresh;
      return Process::restrict(fresh, subst(p.body(), inner, taken_outer));
    }
  }
  return p;
}

}  // namespace

std::set<Name> free_names(const Process& p) {
  std::set<Name> out;
  std::vector<Name> bound;
  collect_free(p, bound, out);
  return out;
}

bool detail::occurs_free(const Name& n, const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return false;
    case Process::Kind::Prefix:
      return p.name() == n || occurs_free(n, p.cont());
    case Process::Kind::Sum:
    case Process::Kind::Par:
      return occurs_free(n, p.left()) || occurs_free(n, p.right());
    case Process::Kind::Restrict:
      return p.name() != n && occurs_free(n, p.body());
    case Process::Kind::Call:
      return std::find(p.args().begin(), p.args().end(), n) != p.args().end();
    case Process::Kind::ElseNext:
      return occurs_free(n, p.now()) || occurs_free(n, p.later());
  }
  return false;
}

std::set<Name> all_names(const Process& p) {
  std::set<Name> out;
  collect_all(p, out);
  return out;
}

Process substitute(const Process& p, const std::map<Name, Name>& renaming) {
  std::map<Name, Name> m;
  for (const auto& [from, to] : renaming) {
    if (from != to) m.emplace(from, to);
  }
  if (m.empty()) return p;
  return subst(p, m, all_names(p));
}

namespace detail {

Name smallest_fresh(const std::set<Name>& taken) {
  for (unsigned k = 1;; ++k) {
    Name n = Name::fresh(k);
    if (!taken.contains(n)) return n;
  }
}

}  // namespace detail
}  // namespace tccs
