#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argex/arg_set.hpp"

namespace argex {

using Attack = std::pair<std::string, std::string>;

// An abstract argumentation framework: a finite set of named arguments and an
// attack relation over them. Immutable once built.
//
// Arguments are stored sorted by name, so ArgIndex order is name order and
// every derived output is deterministic.
class Framework {
 public:
  Framework() = default;

  // Throws UnknownArgument when an attack endpoint is not in `args` and
  // InvalidConfig when a name is not a non-empty [A-Za-z0-9_] token.
  // Duplicate arguments and attacks collapse.
  Framework(std::vector<std::string> args, const std::vector<Attack>& attacks);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(ArgIndex a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<ArgIndex> find(std::string_view name) const;
  // Throws UnknownArgument.
  ArgIndex index_of(std::string_view name) const;
  // Throws UnknownArgument when a is out of range.
  void require(ArgIndex a) const;
  void require(const ArgSet& s) const;

  bool attacks(ArgIndex from, ArgIndex to) const { return matrix_[from * size() + to] != 0; }
  bool self_attacking(ArgIndex a) const { return attacks(a, a); }

  std::span<const ArgIndex> attackers_of(ArgIndex a) const { return attackers_[a]; }
  std::span<const ArgIndex> targets_of(ArgIndex a) const { return targets_[a]; }

  std::size_t attack_count() const noexcept { return edges_.size(); }
  // Attacks as index pairs, sorted by (attacker, target).
  const std::vector<std::pair<ArgIndex, ArgIndex>>& edges() const noexcept { return edges_; }

  ArgSet all() const;
  std::string format(const ArgSet& s) const;
  std::vector<std::string> names_of(const ArgSet& s) const;
  // Resolves names; throws UnknownArgument.
  ArgSet set_of(const std::vector<std::string>& names) const;

  // Same argument names and attacks.
  bool operator==(const Framework& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<ArgIndex, ArgIndex>> edges_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
  std::vector<char> matrix_;
};

bool is_valid_name(std::string_view name);

// Re-expresses a set of `from` in the indices of `to`, by name. Members whose
// name is absent from `to` are dropped.
ArgSet translate(const ArgSet& s, const Framework& from, const Framework& to);

}  // namespace argex
