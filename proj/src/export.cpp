#include "tccs/export.hpp"

#include <sstream>

namespace tccs {
namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

nlohmann::json to_json(const Lts& lts) {
  nlohmann::json states = nlohmann::json::array();
  for (StateId s = 0; s < lts.num_states(); ++s) {
    nlohmann::json commit = nullptr;
    if (lts.expanded(s) && lts.commit_set(s)) {
      commit = nlohmann::json::array();
      for (const auto& l : *lts.commit_set(s)) commit.push_back(l.to_string());
    }
    states.push_back({{"id", s},
                      {"term", lts.text(s)},
                      {"stable", lts.expanded(s) && lts.stable(s)},
                      {"commit", commit}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : lts.edges()) {
    edges.push_back({e.src, lts.label(e.label).to_string(), e.dst});
  }
  nlohmann::json roots = nlohmann::json::array();
  for (StateId r : lts.roots()) roots.push_back(r);
  return {{"states", states},
          {"edges", edges},
          {"roots", roots},
          {"truncated", lts.truncated()}};
}

std::string to_dot(const Lts& lts) {
  std::ostringstream out;
  out << "digraph lts {\n";
  for (StateId s = 0; s < lts.num_states(); ++s) {
    out << "  s" << s << " [label=\"" << s << ": " << dot_escape(lts.text(s))
        << "\"";
    if (lts.expanded(s) && lts.stable(s)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& e : lts.edges()) {
    out << "  s" << e.src << " -> s" << e.dst << " [label=\""
        << dot_escape(lts.label(e.label).to_string()) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const EquivVerdict& v) {
  nlohmann::json cert = nlohmann::json::array();
  for (const auto& e : v.certificate) {
    nlohmann::json challenge = nullptr;
    if (e.challenge) {
      challenge = {e.challenge->src,
                   v.lts ? v.lts->label(e.challenge->label).to_string()
                         : std::to_string(e.challenge->label),
                   e.challenge->dst};
    }
    cert.push_back({{"pair", {e.pair[0], e.pair[1]}},
                    {"clause", std::string(to_string(e.clause))},
                    {"challenge", challenge},
                    {"round", e.round}});
  }
  return {{"related", v.related},
          {"mode", std::string(to_string(v.mode))},
          {"roots", {v.roots[0], v.roots[1]}},
          {"rounds", v.rounds},
          {"certificate", cert},
          {"tester", v.tester ? nlohmann::json(*v.tester) : nlohmann::json(nullptr)}};
}

std::string facts_line(const StateFacts& f) {
  std::ostringstream out;
  out << "stable=" << flag(f.stable) << " converge=" << flag(f.may_converge)
      << " ctxconv=" << flag(f.ctx_converge) << " diverge=" << flag(f.may_diverge)
      << " reactive=" << flag(f.reactive) << " barbs={";
  bool first = true;
  for (const auto& l : f.barbs) {
    if (!first) out << ",";
    first = false;
    out << l.to_string();
  }
  out << "}";
  return out.str();
}

nlohmann::json to_json(const StateFacts& f) {
  nlohmann::json barbs = nlohmann::json::array();
  for (const auto& l : f.barbs) barbs.push_back(l.to_string());
  return {{"stable", f.stable},          {"converge", f.may_converge},
          {"ctxconv", f.ctx_converge},   {"diverge", f.may_diverge},
          {"reactive", f.reactive},      {"barbs", barbs}};
}

}  // namespace tccs
