#include "tccs/process.hpp"

#include <cassert>

#include "tccs/errors.hpp"
#include "tccs/syntax.hpp"

namespace tccs {

struct Process::Node {
  Kind kind = Kind::Nil;
  Polarity polarity = Polarity::In;
  Name name;
  std::string ident;
  std::vector<Name> args;
  // Prefix: cont in `left`; Restrict: body in `left`;
  // ElseNext: now/later in left/right.
  Process left;
  Process right;

  Node() = default;
  // Constructor for non-Nil nodes; children default to the shared Nil node.
  explicit Node(Kind k) : kind(k) {}
};

Process::Process() : node_(nullptr) {}

Process::Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Process Process::prefix(Polarity pol, Name channel, Process cont) {
  auto n = std::make_shared<Node>(Kind::Prefix);
  n->polarity = pol;
  n->name = std::move(channel);
  n->left = std::move(cont);
  return Process(std::move(n));
}

Process Process::sum(Process left, Process right) {
  auto n = std::make_shared<Node>(Kind::Sum);
  n->left = std::move(left);
  n->right = std::move(right);
  return Process(std::move(n));
}

Process Process::par(Process left, Process right) {
  auto n = std::make_shared<Node>(Kind::Par);
  n->left = std::move(left);
  n->right = std::move(right);
  return Process(std::move(n));
}

Process Process::restrict(Name bound, Process body) {
  auto n = std::make_shared<Node>(Kind::Restrict);
  n->name = std::move(bound);
  n->left = std::move(body);
  return Process(std::move(n));
}

Process Process::call(std::string ident, std::vector<Name> args) {
  auto n = std::make_shared<Node>(Kind::Call);
  n->ident = std::move(ident);
  n->args = std::move(args);
  return Process(std::move(n));
}

Process Process::else_next(Process now, Process later) {
  auto n = std::make_shared<Node>(Kind::ElseNext);
  n->left = std::move(now);
  n->right = std::move(later);
  return Process(std::move(n));
}

// A null node pointer stands for 0, so Nil never allocates.
Process::Kind Process::kind() const {
  return node_ ? node_->kind : Kind::Nil;
}

Polarity Process::polarity() const {
  assert(kind() == Kind::Prefix);
  return node_->polarity;
}

const Name& Process::name() const {
  assert(kind() == Kind::Prefix || kind() == Kind::Restrict);
  return node_->name;
}

const Process& Process::cont() const {
  assert(kind() == Kind::Prefix);
  return node_->left;
}

const Process& Process::left() const {
  assert(kind() == Kind::Sum || kind() == Kind::Par);
  return node_->left;
}

const Process& Process::right() const {
  assert(kind() == Kind::Sum || kind() == Kind::Par);
  return node_->right;
}

const Process& Process::body() const {
  assert(kind() == Kind::Restrict);
  return node_->left;
}

const std::string& Process::ident() const {
  assert(kind() == Kind::Call);
  return node_->ident;
}

const std::vector<Name>& Process::args() const {
  assert(kind() == Kind::Call);
  return node_->args;
}

const Process& Process::now() const {
  assert(kind() == Kind::ElseNext);
  return node_->left;
}

const Process& Process::later() const {
  assert(kind() == Kind::ElseNext);
  return node_->right;
}

bool Process::operator==(const Process& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Nil:
      return true;
    case Kind::Prefix:
      return polarity() == other.polarity() && name() == other.name() &&
             cont() == other.cont();
    case Kind::Sum:
    case Kind::Par:
      return left() == other.left() && right() == other.right();
    case Kind::Restrict:
      return name() == other.name() && body() == other.body();
    case Kind::Call:
      return ident() == other.ident() && args() == other.args();
    case Kind::ElseNext:
      return now() == other.now() && later() == other.later();
  }
  return false;
}

bool DefTable::define(std::string ident, Definition def) {
  return entries_.emplace(std::move(ident), std::move(def)).second;
}

const Definition* DefTable::find(std::string_view ident) const {
  auto it = entries_.find(ident);
  return it == entries_.end() ? nullptr : &it->second;
}

const Definition& DefTable::at(std::string_view ident) const {
  if (const auto* d = find(ident)) return *d;
  throw UnboundIdentifier(std::string(ident));
}

StaticContext StaticContext::par_with(Process p) const {
  StaticContext c = *this;
  c.layers_.push_back(Layer{false, Name(), std::move(p)});
  return c;
}

StaticContext StaticContext::restrict(Name a) const {
  StaticContext c = *this;
  c.layers_.push_back(Layer{true, std::move(a), Process()});
  return c;
}

Process StaticContext::plug(const Process& p) const {
  Process out = p;
  for (const auto& layer : layers_) {
    out = layer.is_restrict ? Process::restrict(layer.name, out)
                            : Process::par(out, layer.proc);
  }
  return out;
}

std::string StaticContext::to_string() const {
  std::string out = "[]";
  for (const auto& layer : layers_) {
    if (layer.is_restrict) {
      out = "new " + layer.name.text() + ". (" + out + ")";
    } else {
      out = out + " | " + pretty(layer.proc);
    }
  }
  return out;
}

}  // namespace tccs
