#include <set>

#include "syntax_detail.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

enum Level { kPar = 0, kSum = 1, kPre = 2 };

class Printer {
 public:
  explicit Printer(bool debruijn, std::vector<Name> env = {})
      : debruijn_(debruijn), env_(std::move(env)) {}

  std::string take() { return std::move(out_); }

  void print(const Process& p, int level) {
    switch (p.kind()) {
      case Process::Kind::Nil:
        out_ += '0';
        return;
      case Process::Kind::Prefix:
        if (p.polarity() == Polarity::Out) out_ += '\'';
        name(p.name());
        out_ += '.';
        print(p.cont(), kPre);
        return;
      case Process::Kind::Sum: {
        const bool paren = level > kSum;
        if (paren) out_ += '(';
        print(p.left(), kSum);
        out_ += " + ";
        print(p.right(), kPre);
        if (paren) out_ += ')';
        return;
      }
      case Process::Kind::Par: {
        const bool paren = level > kPar;
        if (paren) out_ += '(';
        print(p.left(), kPar);
        out_ += " | ";
        print(p.right(), kSum);
        if (paren) out_ += ')';
        return;
      }
      case Process::Kind::Restrict:
        out_ += "new ";
        out_ += debruijn_ ? std::string("_") : p.name().text();
        out_ += ". ";
        env_.push_back(p.name());
        print(p.body(), kPre);
        env_.pop_back();
        return;
      case Process::Kind::Call: {
        out_ += p.ident();
        out_ += '(';
        bool first = true;
        for (const auto& a : p.args()) {
          if (!first) out_ += ", ";
          first = false;
          name(a);
        }
        out_ += ')';
        return;
      }
      case Process::Kind::ElseNext:
        out_ += '{';
        print(p.now(), kPar);
        out_ += "} else ";
        print(p.later(), kPre);
        return;
    }
  }

 private:
  void name(const Name& n) {
    if (debruijn_) {
      for (std::size_t i = env_.size(); i-- > 0;) {
        if (env_[i] == n) {
          out_ += '^';
          out_ += std::to_string(env_.size() - 1 - i);
          return;
        }
      }
    }
    out_ += n.text();
  }

  bool debruijn_;
  std::vector<Name> env_;
  std::string out_;
};

}  // namespace

std::string pretty(const Process& p) {
  Printer printer(false);
  printer.print(p, kPar);
  return printer.take();
}

namespace detail {

std::string binder_invariant_key(const Process& p,
                                 const std::vector<Name>& env) {
  Printer printer(true, env);
  printer.print(p, kPar);
  return printer.take();
}

}  // namespace detail
}  // namespace tccs
