#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tccs/errors.hpp"
#include "tccs/process.hpp"

namespace tccs {

/// Identifiers of the generated definitions behind `Omega` and `emit(a)`.
inline constexpr std::string_view kOmegaIdent = "#Omega";
inline constexpr std::string_view kEmitIdent = "emit";

/// Result of parsing a program: the definition table plus the processes
/// declared as `NAME = proc;`, in source order.
struct Program {
  DefTable defs;
  std::vector<std::pair<std::string, Process>> processes;

  const Process* find(std::string_view name) const;
};

/// Parses a whole program. Throws ParseError (with position) on lexical or
/// syntax errors, unbound identifiers, arity mismatches, duplicate
/// definitions and definitions whose body has free names outside the
/// parameter list.
Program parse(std::string_view src);

/// Parses a single process expression against an existing table. Generated
/// definitions (Omega, emit) are added to `defs` when used.
Process parse_process(std::string_view src, DefTable& defs);

std::string pretty(const Process& p);

std::set<Name> free_names(const Process& p);
/// Every name occurring in `p`, bound or free.
std::set<Name> all_names(const Process& p);

/// Capture-avoiding simultaneous renaming of free names. Names outside the
/// map's domain are left unchanged. A binder is renamed (to the smallest
/// `#k` not occurring in the term or the map) only if it would capture.
Process substitute(const Process& p, const std::map<Name, Name>& renaming);

/// Normal form used as state identity: `|` flattened, sorted, 0 dropped;
/// `+` flattened and sorted with 0 kept; restrictions of unused names
/// dropped; bound names renumbered #1, #2, ... in binding order.
/// Idempotent, and the result is strongly bisimilar to the input.
Process canonicalize(const Process& p);

struct Classification {
  bool is_ccs = false;
  bool is_sl = false;
};

/// is_ccs: no else_next in `p` nor in any transitively called body.
/// is_sl: `p` and called bodies are built from 0, emit, present, |, new and
/// calls only.
Classification classify(const Process& p, const DefTable& defs);

// Derived forms.

/// tau.P, encoded as new x. (x.P | 'x.0) with x fresh for P.
Process tau_prefix(const Process& p);
/// tick.P = {0} else P.
Process tick_prefix(const Process& p);
/// P (+) Q = tau.P + tau.Q.
Process internal_choice(const Process& p, const Process& q);
/// The diverging process; installs `#Omega() = tau.#Omega()` in `defs`.
Process omega(DefTable& defs);
/// Signal emission; installs `emit(a) = {'a.emit(a)} else 0` in `defs`.
Process emit(const Name& signal, DefTable& defs);
/// present a {P} else {Q} = {a.P} else Q.
Process present(const Name& signal, const Process& then_branch,
                const Process& else_branch);

/// Installs the body of a generated identifier if `ident` names one.
/// Returns false for ordinary identifiers.
bool install_builtin(std::string_view ident, DefTable& defs);

}  // namespace tccs
