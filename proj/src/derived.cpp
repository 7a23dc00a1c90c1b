#include "syntax_detail.hpp"
#include "tccs/syntax.hpp"

namespace tccs {

namespace detail {

Process tau_prefix_with(const Name& fresh, const Process& p) {
  return Process::restrict(
      fresh, Process::par(Process::prefix(Polarity::In, fresh, p),
                          Process::prefix(Polarity::Out, fresh, Process())));
}

}  // namespace detail

Process tau_prefix(const Process& p) {
  return detail::tau_prefix_with(detail::smallest_fresh(all_names(p)), p);
}

Process tick_prefix(const Process& p) {
  return Process::else_next(Process::nil(), p);
}

Process internal_choice(const Process& p, const Process& q) {
  return Process::sum(tau_prefix(p), tau_prefix(q));
}

bool install_builtin(std::string_view ident, DefTable& defs) {
  if (ident == kOmegaIdent) {
    if (!defs.contains(ident)) {
      defs.define(std::string(kOmegaIdent),
                  Definition{{}, tau_prefix(Process::call(std::string(kOmegaIdent), {}))});
    }
    return true;
  }
  if (ident == kEmitIdent) {
    if (!defs.contains(ident)) {
      const Name a("a");
      defs.define(std::string(kEmitIdent),
                  Definition{{a},
                             Process::else_next(
                                 Process::prefix(Polarity::Out, a,
                                                 Process::call(std::string(kEmitIdent), {a})),
                                 Process::nil())});
    }
    return true;
  }
  return false;
}

Process omega(DefTable& defs) {
  install_builtin(kOmegaIdent, defs);
  return Process::call(std::string(kOmegaIdent), {});
}

Process emit(const Name& signal, DefTable& defs) {
  install_builtin(kEmitIdent, defs);
  return Process::call(std::string(kEmitIdent), {signal});
}

Process present(const Name& signal, const Process& then_branch,
                const Process& else_branch) {
  return Process::else_next(
      Process::prefix(Polarity::In, signal, then_branch), else_branch);
}

}  // namespace tccs
