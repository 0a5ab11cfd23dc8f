#pragma once

#include <vector>

#include "argex/arg_set.hpp"
#include "argex/framework.hpp"

namespace argex {

// Whether some attack-edge walk of odd length (attacks) or of even length
// >= 2 (defends) leads from one argument to another. Both can hold.
struct RelationSummary {
  bool attacks = false;
  bool defends = false;

  bool operator==(const RelationSummary&) const = default;
};

// A simple directed path along attack edges, at least one edge long.
struct AttackPath {
  std::vector<ArgIndex> nodes;

  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
  bool is_attack() const noexcept { return length() % 2 == 1; }

  bool operator==(const AttackPath&) const = default;
};

// Direct set attack: some member of s attacks a.
bool set_attacks(const Framework& fw, const ArgSet& s, ArgIndex a);
// s attacks every direct attacker of a (vacuous when a is unattacked).
bool set_defends(const Framework& fw, const ArgSet& s, ArgIndex a);

// Walk-parity reachability over (argument, parity) states, so cycles are
// accounted for without enumerating paths.
RelationSummary indirect_relation(const Framework& fw, ArgIndex from, ArgIndex to);

// Parity reachability from one source to every argument at once. Entry i
// describes the relation of `from` to argument i.
std::vector<RelationSummary> relations_from(const Framework& fw, ArgIndex from);
// Relation of every argument to `to`.
std::vector<RelationSummary> relations_to(const Framework& fw, ArgIndex to);

// from (in)directly attacks or defends to, and does not attack itself.
bool is_relevant(const Framework& fw, ArgIndex from, ArgIndex to);
ArgSet relevant_args(const Framework& fw, ArgIndex to);
bool is_relevant_set(const Framework& fw, const ArgSet& s, ArgIndex to);

// The framework with x and its incident attacks removed. Remaining arguments
// keep their names; their indices may shift (see translate()).
Framework subframework_without(const Framework& fw, ArgIndex x);

// All simple attack-edge paths from -> to, shortest first, then
// lexicographically by node names.
std::vector<AttackPath> attack_paths(const Framework& fw, ArgIndex from, ArgIndex to);

}  // namespace argex
