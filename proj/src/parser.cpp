#include <cctype>
#include <map>
#include <set>

#include "syntax_detail.hpp"
#include "tccs/syntax.hpp"

namespace tccs {
namespace {

enum class Tok {
  Name,     // a, b1, #3
  Ident,    // A, Buf, #Omega
  Zero,     // 0
  KwNew,
  KwElse,
  KwTau,
  KwTick,
  KwOmega,
  KwEmit,
  KwPresent,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Dot,
  Bar,
  Plus,
  Quote,
  Equals,
  Semi,
  Comma,
  IntChoice,  // (+)
  End,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::KwNew: return "'new'";
    case Tok::KwElse: return "'else'";
    case Tok::KwTau: return "'tau'";
    case Tok::KwTick: return "'tick'";
    case Tok::KwOmega: return "'Omega'";
    case Tok::KwEmit: return "'emit'";
    case Tok::KwPresent: return "'present'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Dot: return "'.'";
    case Tok::Bar: return "'|'";
    case Tok::Plus: return "'+'";
    case Tok::Quote: return "'''";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::IntChoice: return "'(+)'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool is_word(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view src) {
  static const std::map<std::string, Tok, std::less<>> keywords = {
      {"new", Tok::KwNew},       {"else", Tok::KwElse},
      {"tau", Tok::KwTau},       {"tick", Tok::KwTick},
      {"Omega", Tok::KwOmega},   {"emit", Tok::KwEmit},
      {"present", Tok::KwPresent}};
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (static_cast<unsigned char>(c) > 127) {
      throw ParseError({line, col}, "non-ASCII character");
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    if (src.substr(i, 3) == "(+)") {
      out.push_back({Tok::IntChoice, "(+)", pos});
      advance(3);
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c)) ||
        std::isupper(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && is_word(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = std::islower(static_cast<unsigned char>(c)) ? Tok::Name
                                                               : Tok::Ident;
      if (auto kw = keywords.find(word); kw != keywords.end()) kind = kw->second;
      out.push_back({kind, std::move(word), pos});
      advance(j - i);
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        out.push_back({Tok::Name, std::string(src.substr(i, j - i)), pos});
      } else if (j < src.size() && std::isupper(static_cast<unsigned char>(src[j]))) {
        while (j < src.size() && is_word(src[j])) ++j;
        out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      } else {
        throw ParseError(pos, "'#' must be followed by digits or an identifier");
      }
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '0': kind = Tok::Zero; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '.': kind = Tok::Dot; break;
      case '|': kind = Tok::Bar; break;
      case '+': kind = Tok::Plus; break;
      case '\'': kind = Tok::Quote; break;
      case '=': kind = Tok::Equals; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    if (kind == Tok::Zero && i + 1 < src.size() && is_word(src[i + 1])) {
      throw ParseError(pos, "names must start with a lowercase letter");
    }
    out.push_back({kind, std::string(1, c), pos});
    advance(1);
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

unsigned max_fresh_index(const std::vector<Token>& toks) {
  unsigned best = 0;
  for (const auto& t : toks) {
    if (t.kind == Tok::Name && t.text.front() == '#') {
      best = std::max(best, static_cast<unsigned>(std::stoul(t.text.substr(1))));
    }
  }
  return best;
}

struct CallSite {
  std::string ident;
  std::size_t arity;
  SourcePos pos;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks)
      : toks_(std::move(toks)), next_fresh_(max_fresh_index(toks_) + 1) {}

  struct RawDef {
    std::string ident;
    std::optional<std::vector<Name>> params;  // nullopt: `NAME = proc;`
    Process body;
    SourcePos pos;
  };

  std::vector<RawDef> program() {
    std::vector<RawDef> defs;
    while (peek().kind != Tok::End) defs.push_back(definition());
    return defs;
  }

  Process lone_process() {
    Process p = proc();
    expect(Tok::End);
    return p;
  }

  const std::vector<CallSite>& calls() const { return calls_; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) {
      throw ParseError(peek().pos, "expected " + describe(k) + ", found " +
                                       describe(peek().kind));
    }
    return take();
  }

  Name fresh() { return Name::fresh(next_fresh_++); }

  RawDef definition() {
    const Token& id = expect(Tok::Ident);
    RawDef def{id.text, std::nullopt, Process(), id.pos};
    if (accept(Tok::LParen)) def.params = names_until_rparen();
    expect(Tok::Equals);
    def.body = proc();
    expect(Tok::Semi);
    return def;
  }

  std::vector<Name> names_until_rparen() {
    std::vector<Name> names;
    if (!accept(Tok::RParen)) {
      do {
        names.emplace_back(expect(Tok::Name).text);
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    return names;
  }

  Process proc() {
    Process p = sum();
    while (accept(Tok::Bar)) p = Process::par(std::move(p), sum());
    return p;
  }

  Process sum() {
    Process p = pre();
    while (accept(Tok::Plus)) p = Process::sum(std::move(p), pre());
    return p;
  }

  Process pre() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero:
        take();
        return Process::nil();
      case Tok::Name: {
        Name a(take().text);
        expect(Tok::Dot);
        return Process::prefix(Polarity::In, std::move(a), pre());
      }
      case Tok::Quote: {
        take();
        Name a(expect(Tok::Name).text);
        expect(Tok::Dot);
        return Process::prefix(Polarity::Out, std::move(a), pre());
      }
      case Tok::KwTau: {
        take();
        expect(Tok::Dot);
        Name x = fresh();
        return detail::tau_prefix_with(x, pre());
      }
      case Tok::KwTick:
        take();
        expect(Tok::Dot);
        return tick_prefix(pre());
      case Tok::KwNew: {
        take();
        Name a(expect(Tok::Name).text);
        expect(Tok::Dot);
        return Process::restrict(std::move(a), pre());
      }
      case Tok::LBrace: {
        take();
        Process now = proc();
        expect(Tok::RBrace);
        expect(Tok::KwElse);
        return Process::else_next(std::move(now), pre());
      }
      case Tok::Ident: {
        const Token& id = take();
        std::vector<Name> args;
        if (accept(Tok::LParen)) args = names_until_rparen();
        calls_.push_back({id.text, args.size(), id.pos});
        return Process::call(id.text, std::move(args));
      }
      case Tok::LParen: {
        take();
        Process p = proc();
        if (accept(Tok::IntChoice)) {
          Name x = fresh();
          Name y = fresh();
          Process q = proc();
          expect(Tok::RParen);
          return Process::sum(detail::tau_prefix_with(x, p),
                              detail::tau_prefix_with(y, q));
        }
        expect(Tok::RParen);
        return p;
      }
      case Tok::KwOmega:
        calls_.push_back({std::string(kOmegaIdent), 0, t.pos});
        take();
        return Process::call(std::string(kOmegaIdent), {});
      case Tok::KwEmit: {
        const SourcePos pos = take().pos;
        expect(Tok::LParen);
        Name a(expect(Tok::Name).text);
        expect(Tok::RParen);
        calls_.push_back({std::string(kEmitIdent), 1, pos});
        return Process::call(std::string(kEmitIdent), {std::move(a)});
      }
      case Tok::KwPresent: {
        take();
        Name a(expect(Tok::Name).text);
        expect(Tok::LBrace);
        Process then_branch = proc();
        expect(Tok::RBrace);
        expect(Tok::KwElse);
        expect(Tok::LBrace);
        Process else_branch = proc();
        expect(Tok::RBrace);
        return present(a, then_branch, else_branch);
      }
      default:
        throw ParseError(t.pos, "expected a process, found " + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  unsigned next_fresh_;
  std::vector<CallSite> calls_;
};

std::string join(const std::set<Name>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n.text();
  }
  return out;
}

// Checks every call site against `defs`, pulling in generated definitions and
// closed named processes (`named`) referenced as zero-ary calls.
void resolve_calls(const std::vector<CallSite>& calls, DefTable& defs,
                   const std::map<std::string, std::pair<Process, SourcePos>>& named) {
  for (const auto& call : calls) {
    install_builtin(call.ident, defs);
    if (!defs.contains(call.ident)) {
      if (auto it = named.find(call.ident); it != named.end()) {
        const auto fn = free_names(it->second.first);
        if (!fn.empty()) {
          throw ParseError(call.pos, "'" + call.ident +
                                         "' is called but its body has free names {" +
                                         join(fn) + "} not among parameters");
        }
        defs.define(call.ident, Definition{{}, it->second.first});
      }
    }
    const Definition* def = defs.find(call.ident);
    if (def == nullptr) {
      throw ParseError(call.pos, "unbound identifier '" + call.ident + "'");
    }
    if (def->params.size() != call.arity) {
      throw ParseError(call.pos, "'" + call.ident + "' expects " +
                                     std::to_string(def->params.size()) +
                                     " argument(s), got " +
                                     std::to_string(call.arity));
    }
  }
}

}  // namespace

const Process* Program::find(std::string_view name) const {
  for (const auto& [n, p] : processes) {
    if (n == name) return &p;
  }
  return nullptr;
}

Program parse(std::string_view src) {
  Parser parser(lex(src));
  auto raw = parser.program();
  Program out;
  std::map<std::string, std::pair<Process, SourcePos>> named;
  std::set<std::string> seen;
  for (auto& def : raw) {
    if (!seen.insert(def.ident).second || def.ident == kOmegaIdent) {
      throw ParseError(def.pos, "duplicate definition of '" + def.ident + "'");
    }
    if (!def.params) {
      named.emplace(def.ident, std::make_pair(def.body, def.pos));
      out.processes.emplace_back(def.ident, def.body);
      continue;
    }
    std::set<Name> params(def.params->begin(), def.params->end());
    if (params.size() != def.params->size()) {
      throw ParseError(def.pos, "repeated parameter in '" + def.ident + "'");
    }
    std::set<Name> stray;
    for (const auto& n : free_names(def.body)) {
      if (!params.contains(n)) stray.insert(n);
    }
    if (!stray.empty()) {
      throw ParseError(def.pos, "free name(s) {" + join(stray) + "} in '" +
                                    def.ident + "' not among parameters");
    }
    out.defs.define(def.ident, Definition{*def.params, def.body});
    // A zero-ary equation is also selectable as a process.
    if (def.params->empty()) {
      out.processes.emplace_back(def.ident, Process::call(def.ident, {}));
    }
  }
  resolve_calls(parser.calls(), out.defs, named);
  return out;
}

Process parse_process(std::string_view src, DefTable& defs) {
  Parser parser(lex(src));
  Process p = parser.lone_process();
  resolve_calls(parser.calls(), defs, {});
  return p;
}

}  // namespace tccs
