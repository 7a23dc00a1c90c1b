#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace tccs {

/// Channel name. Two names are equal iff their texts are equal.
/// Machine-fresh names render as `#n`, which the user namespace
/// ([a-z][a-zA-Z0-9_]*) can never produce.
class Name {
 public:
  Name() = default;
  explicit Name(std::string text) : text_(std::move(text)) {}

  static Name fresh(unsigned index) {
    return Name("#" + std::to_string(index));
  }

  const std::string& text() const { return text_; }
  bool is_fresh() const { return !text_.empty() && text_.front() == '#'; }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

 private:
  std::string text_;
};

/// Transition label: input `a`, output `'a`, `tau` or `tick`.
class Label {
 public:
  enum class Kind : std::uint8_t { In, Out, Tau, Tick };

  static Label in(Name n) { return Label(Kind::In, std::move(n)); }
  static Label out(Name n) { return Label(Kind::Out, std::move(n)); }
  static Label tau() { return Label(Kind::Tau, Name()); }
  static Label tick() { return Label(Kind::Tick, Name()); }

  Kind kind() const { return kind_; }
  const Name& name() const { return name_; }

  bool is_comm() const { return kind_ == Kind::In || kind_ == Kind::Out; }
  bool is_tau() const { return kind_ == Kind::Tau; }
  bool is_tick() const { return kind_ == Kind::Tick; }
  /// CCS action (communication or tau); excludes tick.
  bool is_action() const { return kind_ != Kind::Tick; }

  /// Co-action of a communication label.
  Label co() const {
    return Label(kind_ == Kind::In ? Kind::Out : Kind::In, name_);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::In: return name_.text();
      case Kind::Out: return "'" + name_.text();
      case Kind::Tau: return "tau";
      case Kind::Tick: return "tick";
    }
    return {};
  }

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;

 private:
  Label(Kind k, Name n) : kind_(k), name_(std::move(n)) {}

  Kind kind_ = Kind::Tau;
  Name name_;
};

}  // namespace tccs
