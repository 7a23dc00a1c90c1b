#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tccs/name.hpp"

namespace tccs {

enum class Polarity : std::uint8_t { In, Out };

/// Immutable TCCS term. Copies share structure; equality is structural.
///
///   P ::= 0 | a.P | 'a.P | P+P | P|P | new a. P | A(a,...) | {P} else P
///
/// Derived forms (tau., tick., Omega, emit, present, internal choice)
/// are expanded into these seven constructors when built.
class Process {
 public:
  enum class Kind : std::uint8_t {
    Nil,
    Prefix,
    Sum,
    Par,
    Restrict,
    Call,
    ElseNext
  };

  Process();  // 0

  static Process nil() { return Process(); }
  static Process prefix(Polarity pol, Name channel, Process cont);
  static Process sum(Process left, Process right);
  static Process par(Process left, Process right);
  static Process restrict(Name bound, Process body);
  static Process call(std::string ident, std::vector<Name> args);
  static Process else_next(Process now, Process later);

  Kind kind() const;
  bool is_nil() const { return kind() == Kind::Nil; }

  // Prefix
  Polarity polarity() const;
  /// Channel of a Prefix, bound name of a Restrict.
  const Name& name() const;
  const Process& cont() const;
  // Sum, Par
  const Process& left() const;
  const Process& right() const;
  // Restrict
  const Process& body() const;
  // Call
  const std::string& ident() const;
  const std::vector<Name>& args() const;
  // ElseNext
  const Process& now() const;
  const Process& later() const;

  bool operator==(const Process& other) const;
  bool operator!=(const Process& other) const { return !(*this == other); }

  /// Identity of the shared node; equal ids imply structural equality.
  const void* node_id() const { return node_.get(); }

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct Definition {
  std::vector<Name> params;
  Process body;
};

/// Process identifier -> defining equation. One equation per identifier.
class DefTable {
 public:
  /// Adds an equation; returns false if the identifier is already defined.
  bool define(std::string ident, Definition def);
  const Definition* find(std::string_view ident) const;
  /// Throws UnboundIdentifier.
  const Definition& at(std::string_view ident) const;
  bool contains(std::string_view ident) const {
    return find(ident) != nullptr;
  }
  std::size_t size() const { return entries_.size(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<std::string, Definition, std::less<>> entries_;
};

/// One-hole static context  C ::= [ ] | C | P | new a. C
class StaticContext {
 public:
  StaticContext() = default;  // [ ]

  StaticContext par_with(Process p) const;
  StaticContext restrict(Name a) const;

  /// Capture-permitting: restrictions may bind free names of `p`.
  Process plug(const Process& p) const;
  std::string to_string() const;
  bool is_hole() const { return layers_.empty(); }

 private:
  struct Layer {
    bool is_restrict;
    Name name;
    Process proc;
  };
  // Innermost first.
  std::vector<Layer> layers_;
};

}  // namespace tccs
