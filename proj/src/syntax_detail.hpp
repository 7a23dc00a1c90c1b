#pragma once

#include <set>
#include <string>
#include <vector>

#include "tccs/process.hpp"

namespace tccs::detail {

/// Rendering of `p` in which names bound by `env` (innermost last) or by
/// restrictions inside `p` print as de Bruijn indices. Invariant under
/// renaming of bound names; used as the sort key of canonical forms.
std::string binder_invariant_key(const Process& p,
                                 const std::vector<Name>& env);

bool occurs_free(const Name& n, const Process& p);

/// Smallest `#k` (k >= 1) not in `taken`.
Name smallest_fresh(const std::set<Name>& taken);

Process tau_prefix_with(const Name& fresh, const Process& p);

}  // namespace tccs::detail
