#pragma once

#include <stdexcept>
#include <string>

namespace tccs {

struct SourcePos {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical, syntactic or well-formedness error in program text.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& what)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
              ": " + what),
        pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class UnboundIdentifier : public Error {
 public:
  explicit UnboundIdentifier(const std::string& ident)
      : Error("unbound process identifier '" + ident + "'") {}
};

/// Raised by every consumer that needs the full reachable state space.
class TruncatedLts : public Error {
 public:
  TruncatedLts()
      : Error("state space exceeds the bound; result would be unsound") {}
};

/// A checker was asked to run outside its domain (e.g. untimed on TCCS).
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace tccs
