#pragma once

#include <optional>
#include <string>

#include "tccs/lts.hpp"
#include "tccs/process.hpp"

namespace tccs {

struct Discrepancy {
  enum class Kind {
    Convergence,     // C[p] and C[q] differ on may-convergence
    Barbs,           // ... on stable barbs
    AfterReduction,  // some C[p] ==> P' has no C[q] ==> Q' with equal observables
    AfterTick,       // same through a weak tick
  };
  Kind kind;
  std::string detail;
};

struct Falsification {
  StaticContext context;
  Discrepancy discrepancy;
};

struct FalsifyStats {
  std::size_t contexts_tried = 0;
  std::size_t truncated = 0;  // contexts skipped because the bound was hit
};

/// Bounded search for a static context separating p and q.
///
/// Contexts have the shape  new x1..xk. ([ ] | T1 | ... | Tm)  with
/// k + m <= depth. The xi and the testers Ti range over the free names
/// p or q actually communicate on: each Ti is the co-prefix of such an
/// action followed by 0, Omega, or ((b (+) 0) (+) c) with b, c fresh. Observables are may-convergence and barbs, at the root and after
/// one weak tau or tick step. A returned context is a sound witness of
/// inequivalence; nullopt never claims equivalence.
std::optional<Falsification> falsify_with_context(
    const Process& p, const Process& q, const DefTable& defs, int depth,
    std::size_t bound = kDefaultBound, FalsifyStats* stats = nullptr);

/// Re-checks a single context; used to validate falsifier output.
std::optional<Discrepancy> observe_discrepancy(const Process& p,
                                               const Process& q,
                                               const StaticContext& context,
                                               const DefTable& defs,
                                               std::size_t bound = kDefaultBound);

}  // namespace tccs
