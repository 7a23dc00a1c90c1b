#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tccs/process.hpp"

namespace tccs::testgen {

struct Sample {
  DefTable defs;
  Process term;
};

struct SamplePair {
  DefTable defs;
  Process p, q;
};

struct GenConfig {
  int depth = 6;
  int max_defs = 4;
  bool ccs = false;  // no else_next, no tick
  std::vector<std::string> names{"a", "b", "c"};
};

/// Seeded random terms. Recursive definitions never grow the state space:
/// calls inside bodies pass only the body's own parameters, and bodies put
/// no call under a parallel composition.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, GenConfig cfg = {});

  Sample sample();
  /// A pair over one definition table: half perturbations of a common
  /// term that preserve weak bisimilarity, the rest mutations or unrelated.
  SamplePair pair();
  /// p ~ q by construction (weak bisimilarity preserving rewrites).
  SamplePair related_pair();
  /// A random closed term over an existing table, for building contexts.
  Process term_over(DefTable& defs, int depth);

  /// Programs of the synchronous-language fragment: emit, present, |, new,
  /// 0 and calls, with recursion only in else branches.
  Sample sl_sample();

  std::mt19937_64& rng() { return rng_; }
  int below(int n);
  bool chance(double p);

 private:
  struct Scope {
    std::vector<Name> names;   // names usable here
    std::vector<Name> params;  // names a recursive call may pass
    bool in_body = false;
    bool under_par = false;
  };

  Process gen(int depth, const Scope& scope, DefTable& defs);
  Process gen_call(const Scope& scope, DefTable& defs);
  void gen_defs(DefTable& defs);
  Process perturb(const Process& p, DefTable& defs);
  Process mutate(const Process& p, DefTable& defs);
  Name pick(const std::vector<Name>& names);

  std::mt19937_64 rng_;
  GenConfig cfg_;
  int def_counter_ = 0;
};

/// Every term of exactly `size` constructors over names {a, b}, atoms
/// 0, Omega and D (D = tau.D + tau.0), and the operators prefix, tau.,
/// tick., +, |, new and else_next (the last two only when !ccs). Installs
/// the definitions it uses in `defs`.
std::vector<Process> enumerate_terms(int size, bool ccs, DefTable& defs);

}  // namespace tccs::testgen
