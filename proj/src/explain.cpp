#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "game.hpp"
#include "tccs/equiv.hpp"

namespace tccs {
namespace {

constexpr int kMaxDepth = 6;

class Explainer {
 public:
  explicit Explainer(const EquivVerdict& v)
      : v_(v), lts_(*v.lts), game_(*v.lts, v.mode) {
    for (std::size_t k = 0; k < v.certificate.size(); ++k) {
      auto [a, b] = v.certificate[k].pair;
      by_pair_.emplace(ordered(a, b), k);
    }
  }

  std::string run() {
    const auto [p, q] = v_.roots;
    out_ << lts_.text(p) << "  vs  " << lts_.text(q) << ": not related ("
         << to_string(v_.mode) << ")\n";
    node(p, q, 1);
    return out_.str();
  }

 private:
  static std::pair<StateId, StateId> ordered(StateId a, StateId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  void indent(int depth) { out_ << std::string(2 * depth, ' '); }

  void node(StateId s, StateId t, int depth) {
    auto it = by_pair_.find(ordered(s, t));
    if (it == by_pair_.end()) {
      indent(depth);
      out_ << "(pair not eliminated)\n";
      return;
    }
    const CertificateEntry& e = v_.certificate[it->second];
    if (!visited_.insert(it->second).second) {
      indent(depth);
      out_ << "(see elimination #" << it->second << " above)\n";
      return;
    }
    const auto [a, b] = e.pair;
    indent(depth);
    out_ << "[" << to_string(e.clause) << ", round " << e.round << "] ";
    if (!e.challenge) {
      const auto& an = game_.analysis();
      const bool diverge = e.clause == Clause::Diverge;
      const bool first = diverge ? an.may_diverge(a) : an.may_converge(a);
      const StateId yes = first ? a : b;
      const StateId no = first ? b : a;
      const char* what = diverge ? "may diverge" : "may converge";
      out_ << lts_.text(yes) << " " << what << ", " << lts_.text(no)
           << " cannot\n";
      return;
    }
    const Challenge& c = *e.challenge;
    const StateId responder = c.src == a ? b : a;
    const std::string label = lts_.label(c.label).to_string();
    out_ << lts_.text(c.src) << " --" << label << "--> " << lts_.text(c.dst)
         << "\n";
    Edge edge{c.src, c.label, c.dst};
    std::vector<StateId> resp;
    game_.responses(responder, edge, e.clause, resp);
    if (resp.empty()) {
      indent(depth + 1);
      out_ << lts_.text(responder) << " has no weak " << label;
      if (e.clause == Clause::Lab && !game_.analysis().ctx_converge(c.dst)) {
        out_ << " or tau";
      }
      out_ << " answer\n";
      return;
    }
    for (StateId r : resp) {
      indent(depth + 1);
      out_ << lts_.text(responder) << " ==> " << lts_.text(r) << ":\n";
      if (depth >= kMaxDepth) {
        indent(depth + 2);
        out_ << "...\n";
        continue;
      }
      node(c.dst, r, depth + 2);
    }
  }

  const EquivVerdict& v_;
  const Lts& lts_;
  detail::Game game_;
  std::map<std::pair<StateId, StateId>, std::size_t> by_pair_;
  std::set<std::size_t> visited_;
  std::ostringstream out_;
};

}  // namespace

std::string explain(const EquivVerdict& v) {
  if (v.related) throw std::logic_error("explain: processes are related");
  if (!v.lts) throw std::logic_error("explain: verdict carries no LTS");
  return Explainer(v).run();
}

}  // namespace tccs
