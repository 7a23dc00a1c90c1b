#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tccs/analyses.hpp"
#include "tccs/equiv.hpp"
#include "tccs/errors.hpp"
#include "tccs/export.hpp"
#include "tccs/falsify.hpp"
#include "tccs/paper_suite.hpp"
#include "tccs/syntax.hpp"

namespace tccs::cli {
namespace {

struct Options {
  std::string file;
  std::string p, q;
  std::string rel = "conv";
  std::size_t bound = kDefaultBound;
  std::string format = "text";
  int depth = 3;
  bool falsify = false;
  bool all_states = false;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A selector is the name of a process in the file or, failing that, a
// process expression over the file's definitions.
Process select(Program& prog, const std::string& sel, const char* flag) {
  if (sel.empty()) throw Usage(std::string("missing ") + flag);
  if (const Process* p = prog.find(sel)) return *p;
  try {
    return parse_process(sel, prog.defs);
  } catch (const ParseError& e) {
    throw Usage(std::string(flag) + " '" + sel +
                "' is neither a process name in the input nor a valid expression (" +
                e.what() + ")");
  }
}

void print_lts_text(const Lts& lts, std::ostream& out) {
  out << lts.num_states() << " states, " << lts.edges().size() << " transitions\n";
  for (StateId s = 0; s < lts.num_states(); ++s) {
    out << s << ": " << lts.text(s) << (lts.expanded(s) && lts.stable(s) ? "  [stable]" : "")
        << "\n";
    if (!lts.expanded(s)) continue;
    for (const auto& e : lts.out(s)) {
      out << "    --" << lts.label(e.label).to_string() << "--> " << e.dst << "\n";
    }
  }
}

int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
  const Program prog = parse(slurp(o.file, in));
  if (o.format == "json") {
    nlohmann::json defs = nlohmann::json::array();
    for (const auto& [ident, def] : prog.defs) {
      nlohmann::json params = nlohmann::json::array();
      for (const auto& n : def.params) params.push_back(n.text());
      defs.push_back({{"ident", ident}, {"params", params}, {"body", pretty(def.body)}});
    }
    nlohmann::json procs = nlohmann::json::array();
    for (const auto& [name, p] : prog.processes) {
      const auto c = classify(p, prog.defs);
      procs.push_back({{"name", name}, {"term", pretty(p)}, {"is_ccs", c.is_ccs},
                       {"is_sl", c.is_sl}});
    }
    out << nlohmann::json{{"definitions", defs}, {"processes", procs}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [ident, def] : prog.defs) {
    out << ident << "(";
    for (std::size_t i = 0; i < def.params.size(); ++i) {
      out << (i ? ", " : "") << def.params[i].text();
    }
    out << ") = " << pretty(def.body) << ";\n";
  }
  for (const auto& [name, p] : prog.processes) {
    const auto c = classify(p, prog.defs);
    out << name << " = " << pretty(p) << ";"
        << (c.is_ccs ? "  // ccs" : "") << (c.is_sl ? "  // sl" : "") << "\n";
  }
  return kOk;
}

std::vector<Process> roots_of(Program& prog, const Options& o) {
  std::vector<Process> roots;
  if (!o.p.empty()) roots.push_back(select(prog, o.p, "-p"));
  if (!o.q.empty()) roots.push_back(select(prog, o.q, "-q"));
  if (roots.empty()) {
    for (const auto& [name, p] : prog.processes) roots.push_back(p);
  }
  if (roots.empty()) throw Usage("no process to explore");
  return roots;
}

int cmd_lts(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Program prog = parse(slurp(o.file, in));
  const auto roots = roots_of(prog, o);
  const Lts lts = build_lts(roots, prog.defs, o.bound);
  if (o.format == "json") {
    out << to_json(lts).dump(2) << "\n";
  } else if (o.format == "dot") {
    out << to_dot(lts);
  } else {
    print_lts_text(lts, out);
    for (const auto& v : verify_lts_laws(lts)) {
      out << "law " << v.law << " violated at " << v.state << ": " << v.detail << "\n";
    }
  }
  if (lts.truncated()) {
    err << "error: state bound " << o.bound << " exceeded\n";
    return kBound;
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  Program prog = parse(slurp(o.file, in));
  const auto roots = roots_of(prog, o);
  const Lts lts = build_lts(roots, prog.defs, o.bound);
  const Analysis an(lts);
  std::vector<StateId> shown;
  if (o.all_states) {
    for (StateId s = 0; s < lts.num_states(); ++s) shown.push_back(s);
  } else {
    shown.assign(lts.roots().begin(), lts.roots().end());
  }
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (StateId s : shown) {
      nlohmann::json j = to_json(an.facts(s));
      j["id"] = s;
      j["term"] = lts.text(s);
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else {
    for (StateId s : shown) {
      if (shown.size() > 1) out << s << ": " << lts.text(s) << "\n  ";
      out << facts_line(an.facts(s)) << "\n";
    }
  }
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const auto mode = parse_mode(o.rel);
  if (!mode) throw Usage("unknown relation '" + o.rel + "'");
  Program prog = parse(slurp(o.file, in));
  const Process p = select(prog, o.p, "-p");
  const Process q = select(prog, o.q, "-q");
  EquivVerdict v = check(p, q, *mode, prog.defs, o.bound);
  std::optional<Falsification> witness;
  if (o.falsify && !v.related) {
    witness = falsify_with_context(p, q, prog.defs, o.depth, o.bound);
    if (witness) v.tester = witness->context.to_string();
  }
  if (o.format == "json") {
    out << to_json(v).dump(2) << "\n";
  } else if (v.related) {
    out << "related\n";
  } else {
    out << "not related\n" << explain(v);
    if (o.falsify) {
      if (witness) {
        out << "distinguishing context: " << witness->context.to_string() << "\n"
            << "  " << witness->discrepancy.detail << "\n";
      } else {
        out << "no distinguishing context up to depth " << o.depth << "\n";
      }
    }
  }
  return v.related ? kOk : kNotRelated;
}

int cmd_step(const Options& o, std::istream& in, std::ostream& out) {
  if (o.file == "-") throw Usage("step reads commands from stdin; give an input file");
  Program prog = parse(slurp(o.file, in));
  Process cur = canonicalize(select(prog, o.p, "-p"));
  int instant = 0;
  for (;;) {
    out << "[instant " << instant << "] " << pretty(cur) << "\n";
    const auto ts = step(cur, prog.defs);
    if (ts.empty()) {
      out << "no transitions\n";
      return kOk;
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out << "  " << i << ": --" << ts[i].label.to_string() << "--> "
          << pretty(ts[i].target) << "\n";
    }
    out << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line) || line == "q" || line == "quit") {
      out << "\n";
      return kOk;
    }
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(line, &used);
      if (used != line.size()) throw std::invalid_argument(line);
    } catch (const std::exception&) {
      out << "enter a transition index or q\n";
      continue;
    }
    if (idx >= ts.size()) {
      out << "no transition " << idx << "\n";
      continue;
    }
    if (ts[idx].label.is_tick()) ++instant;
    cur = ts[idx].target;
  }
}

int cmd_suite(std::ostream& out) {
  int failed = 0;
  const auto results = run_paper_suite();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.pass) ++failed;
    out << (r.pass ? "pass " : "FAIL ") << i + 1 << ". " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
  out << results.size() - failed << "/" << results.size() << " passed\n";
  return failed == 0 ? kOk : kNotRelated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Timed CCS workbench", "tccs"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "program file, or - for stdin")->required();
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "maximum number of states")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse and pretty-print a program");
  add_input(parse_cmd);
  add_format(parse_cmd, {"text", "json"});

  auto* lts_cmd = app.add_subcommand("lts", "build the transition system");
  add_input(lts_cmd);
  lts_cmd->add_option("-p", o.p, "root process (default: every named process)");
  lts_cmd->add_option("-q", o.q, "second root");
  add_bound(lts_cmd);
  add_format(lts_cmd, {"text", "json", "dot"});

  auto* an_cmd = app.add_subcommand("analyze", "convergence, divergence and barbs");
  add_input(an_cmd);
  an_cmd->add_option("-p", o.p, "process name or expression");
  an_cmd->add_flag("--all", o.all_states, "report every reachable state");
  add_bound(an_cmd);
  add_format(an_cmd, {"text", "json"});

  auto* check_cmd = app.add_subcommand("check", "decide an equivalence");
  add_input(check_cmd);
  check_cmd->add_option("-p", o.p, "left process")->required();
  check_cmd->add_option("-q", o.q, "right process")->required();
  check_cmd->add_option("--rel", o.rel, "usual|usual-untimed|conv|conv-div|conv-untimed");
  check_cmd->add_option("--depth", o.depth, "falsifier context size")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--falsify", o.falsify, "search for a distinguishing context");
  add_bound(check_cmd);
  add_format(check_cmd, {"text", "json"});

  auto* step_cmd = app.add_subcommand("step", "interactive stepper");
  add_input(step_cmd);
  step_cmd->add_option("-p", o.p, "process to run")->required();

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the bundled example corpus");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o, in, out);
    if (lts_cmd->parsed()) return cmd_lts(o, in, out, err);
    if (an_cmd->parsed()) return cmd_analyze(o, in, out);
    if (check_cmd->parsed()) return cmd_check(o, in, out);
    if (step_cmd->parsed()) return cmd_step(o, in, out);
    if (suite_cmd->parsed()) return cmd_suite(out);
  } catch (const ParseError& e) {
    err << o.file << ":" << e.what() << "\n";
    return kUsage;
  } catch (const TruncatedLts& e) {
    err << "error: " << e.what() << " (bound " << o.bound << ")\n";
    return kBound;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tccs::cli
