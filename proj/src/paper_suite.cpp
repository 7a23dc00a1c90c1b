#include "tccs/paper_suite.hpp"

#include <functional>
#include <stdexcept>

#include "tccs/analyses.hpp"
#include "tccs/equiv.hpp"
#include "tccs/export.hpp"
#include "tccs/falsify.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

constexpr std::string_view kCorpus = R"(// bundled examples
AO = a.0 | Omega;
O = Omega;
Z = 0;
T0 = tau.0;
E0 = {0} else b.0;
ET = {tau.0} else b.0;
A = tau.A + tau.0;
R1 = a.(b.0 + c.0) | 'a.(d.0 + Omega);
R2 = (a.b.0 + a.c.0) | 'a.(d.0 + Omega);
S = (a.0 + b.0) | 'a.Omega;
// untimed testing equivalent, bisimilar in no mode
HP = a.(b.0 + c.b.0) + a.(d.0 + c.d.0);
HQ = a.(b.0 + c.d.0) + a.(d.0 + c.b.0);
SYNC = a.0 | 'a.0;
SL = emit(a) | present a {0} else {emit(b)};
)";

using Item = std::pair<std::string, std::function<SuiteResult()>>;

const Program& corpus() {
  static const Program prog = parse(kCorpus);
  return prog;
}

const Process& get(std::string_view name) {
  const Process* p = corpus().find(name);
  if (p == nullptr) throw std::logic_error("corpus lacks " + std::string(name));
  return *p;
}

SuiteResult verdict(const std::string& p, const std::string& q, Mode mode,
                    bool expect) {
  const bool got = check(get(p), get(q), mode, corpus().defs).related;
  return {"", got == expect,
          std::string(got ? "related" : "not related") + " in " +
              std::string(to_string(mode))};
}

SuiteResult ccs_verdict(const std::string& p, const std::string& q, bool expect) {
  const bool got = check_ccs_equivalently(get(p), get(q), corpus().defs).related;
  return {"", got == expect, got ? "related" : "not related"};
}

SuiteResult predicate(const std::string& p,
                      const std::function<bool(const StateFacts&)>& pred,
                      const std::string& what) {
  const Process ps[] = {get(p)};
  const Lts lts = build_lts(ps, corpus().defs);
  const Analysis an(lts);
  const StateFacts& f = an.facts(lts.roots()[0]);
  return {"", pred(f), what.empty() ? facts_line(f) : what};
}

std::vector<Item> items() {
  std::vector<Item> out;
  auto pair = [&](std::string p, std::string q, Mode m, bool expect) {
    out.emplace_back(p + " vs " + q + " " + std::string(to_string(m)) +
                         (expect ? " related" : " not related"),
                     [=] { return verdict(p, q, m, expect); });
  };
  pair("AO", "O", Mode::Conv, true);
  pair("AO", "O", Mode::Usual, false);
  pair("Z", "O", Mode::Conv, false);
  pair("Z", "O", Mode::UsualUntimed, true);
  pair("Z", "O", Mode::Usual, false);
  pair("Z", "T0", Mode::Conv, true);
  pair("Z", "T0", Mode::Usual, true);
  pair("E0", "ET", Mode::Conv, false);
  pair("Z", "A", Mode::Conv, true);
  pair("Z", "A", Mode::ConvDiv, false);
  pair("R1", "R2", Mode::Conv, false);
  for (Mode m : {Mode::Usual, Mode::UsualUntimed, Mode::Conv, Mode::ConvDiv,
                 Mode::ConvUntimed}) {
    pair("HP", "HQ", m, false);
  }

  out.emplace_back("AO vs O ccs-equivalently related",
                   [] { return ccs_verdict("AO", "O", true); });
  out.emplace_back("Z vs O ccs-equivalently not related",
                   [] { return ccs_verdict("Z", "O", false); });

  out.emplace_back("S converge=false ctxconv=true diverge=true", [] {
    return predicate("S", [](const StateFacts& f) {
      return !f.may_converge && f.ctx_converge && f.may_diverge;
    }, "");
  });
  out.emplace_back("SYNC not converged", [] {
    return predicate("SYNC", [](const StateFacts& f) { return !f.stable; }, "");
  });
  out.emplace_back("T0 not converged", [] {
    return predicate("T0", [](const StateFacts& f) { return !f.stable; }, "");
  });
  out.emplace_back("O diverges and cannot converge", [] {
    return predicate("O", [](const StateFacts& f) {
      return f.may_diverge && !f.may_converge && !f.reactive;
    }, "");
  });
  out.emplace_back("AO cannot converge", [] {
    return predicate("AO", [](const StateFacts& f) { return !f.may_converge; }, "");
  });
  out.emplace_back("A may diverge and may converge", [] {
    return predicate("A", [](const StateFacts& f) {
      return f.may_diverge && f.may_converge;
    }, "");
  });

  out.emplace_back("E0 ticks to b.0", [] {
    const auto ts = step(get("E0"), corpus().defs);
    bool ok = false;
    for (const auto& t : ts) {
      if (t.label.is_tick()) ok = pretty(t.target) == "b.0";
    }
    return SuiteResult{"", ok, std::to_string(ts.size()) + " transitions"};
  });
  out.emplace_back("SL is SL and not CCS", [] {
    const auto c = classify(get("SL"), corpus().defs);
    return SuiteResult{"", c.is_sl && !c.is_ccs,
                       std::string("is_ccs=") + (c.is_ccs ? "true" : "false") +
                           " is_sl=" + (c.is_sl ? "true" : "false")};
  });
  out.emplace_back("O is CCS", [] {
    const auto c = classify(get("O"), corpus().defs);
    return SuiteResult{"", c.is_ccs && !c.is_sl, ""};
  });

  out.emplace_back("Z vs O falsified by the empty context", [] {
    auto f = falsify_with_context(get("Z"), get("O"), corpus().defs, 1);
    const bool ok = f && f->context.is_hole() &&
                    f->discrepancy.kind == Discrepancy::Kind::Convergence;
    return SuiteResult{"", ok, f ? f->context.to_string() : "none"};
  });
  out.emplace_back("AO vs O not falsified", [] {
    auto f = falsify_with_context(get("AO"), get("O"), corpus().defs, 2);
    return SuiteResult{"", !f, f ? f->context.to_string() : "none"};
  });
  return out;
}

}  // namespace

std::string_view suite_corpus() { return kCorpus; }

std::vector<SuiteResult> run_paper_suite() {
  std::vector<SuiteResult> results;
  for (auto& [name, run] : items()) {
    SuiteResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {"", false, e.what()};
    }
    r.name = name;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tccs
