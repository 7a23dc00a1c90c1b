#include <set>

#include "tccs/syntax.hpp"

namespace tccs {
namespace {

bool ccs_closure(const Process& p, const DefTable& defs,
                 std::set<std::string>& visited) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return true;
    case Process::Kind::ElseNext:
      return false;
    case Process::Kind::Prefix:
      return ccs_closure(p.cont(), defs, visited);
    case Process::Kind::Restrict:
      return ccs_closure(p.body(), defs, visited);
    case Process::Kind::Sum:
    case Process::Kind::Par:
      return ccs_closure(p.left(), defs, visited) &&
             ccs_closure(p.right(), defs, visited);
    case Process::Kind::Call:
      if (!visited.insert(p.ident()).second) return true;
      return ccs_closure(defs.at(p.ident()).body, defs, visited);
  }
  return false;
}

bool sl_closure(const Process& p, const DefTable& defs,
                std::set<std::string>& visited) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return true;
    case Process::Kind::Par:
      return sl_closure(p.left(), defs, visited) &&
             sl_closure(p.right(), defs, visited);
    case Process::Kind::Restrict:
      return sl_closure(p.body(), defs, visited);
    case Process::Kind::ElseNext:
      // present a {P} else {Q}
      return p.now().kind() == Process::Kind::Prefix &&
             p.now().polarity() == Polarity::In &&
             sl_closure(p.now().cont(), defs, visited) &&
             sl_closure(p.later(), defs, visited);
    case Process::Kind::Call:
      if (p.ident() == kEmitIdent && p.args().size() == 1) return true;
      if (!visited.insert(p.ident()).second) return true;
      return sl_closure(defs.at(p.ident()).body, defs, visited);
    case Process::Kind::Prefix:
    case Process::Kind::Sum:
      return false;
  }
  return false;
}

}  // namespace

Classification classify(const Process& p, const DefTable& defs) {
  std::set<std::string> seen_ccs;
  std::set<std::string> seen_sl;
  return Classification{ccs_closure(p, defs, seen_ccs),
                        sl_closure(p, defs, seen_sl)};
}

}  // namespace tccs
