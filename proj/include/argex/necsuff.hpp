#pragma once

#include <vector>

#include "argex/arg_set.hpp"
#include "argex/framework.hpp"
#include "argex/relations.hpp"
#include "argex/semantics.hpp"

namespace argex {

enum class QueryMode { acceptance, non_acceptance };
enum class MinimalityOrder { cardinality, set_inclusion };

struct SufficiencyMode {
  QueryMode mode = QueryMode::acceptance;
  // Acceptance only: additionally require s and s + {a} to be admissible.
  bool strict = false;
};

struct NecSuffOptions {
  // Sufficiency families enumerate subsets of the relevant arguments; more
  // relevant arguments than this raises TooLarge.
  std::size_t subset_cap = 22;
  EnumerationOptions enumeration;
};

// One contested intermediate of an odd attack path, with the attackers that
// contest it (its path predecessor excluded).
struct ContestPoint {
  ArgIndex contested;
  ArgSet attackers;

  bool operator==(const ContestPoint&) const = default;
};

struct ContestReport {
  AttackPath path;
  bool contested = false;
  std::vector<ContestPoint> points;
};

// --- acceptance ---

// s is non-empty, relevant for a, conflict-free and directly attacks every
// direct attacker of a. Strict mode also requires s and s + {a} admissible.
bool is_sufficient_acc(const Framework& fw, const ArgSet& s, ArgIndex a, bool strict = false);
SetFamily sufficient_sets_acc(const Framework& fw, ArgIndex a, bool strict = false,
                              const NecSuffOptions& options = {});

// b is relevant for a and every admissible set lacking b also lacks a.
bool is_necessary_acc(const Framework& fw, ArgIndex b, ArgIndex a);
ArgSet necessary_args_acc(const Framework& fw, ArgIndex a);

// --- non-acceptance ---

// Inspects the even-position intermediates C2, C4, ... of an odd attack path.
// Throws InvalidPath for even parity, missing edges or repeated nodes.
ContestReport classify_attack(const Framework& fw, const AttackPath& path);

// s is non-empty, relevant for a, and some member attacks a directly, along
// an uncontested odd path, or along an odd path all of whose contesting
// attackers are in turn made non-accepted by a subset of s. Throws
// SelfAttacker when a attacks itself.
bool is_sufficient_nonacc(const Framework& fw, const ArgSet& s, ArgIndex a);
SetFamily sufficient_sets_nonacc(const Framework& fw, ArgIndex a,
                                 const NecSuffOptions& options = {});

// b != a is relevant for a and a is accepted in the framework without b. Throws
// NoExtensions when that framework has no extensions.
bool is_necessary_nonacc(const Framework& fw, ArgIndex b, ArgIndex a, SemanticsKind sem,
                         Strategy strategy, const EnumerationOptions& options = {});
ArgSet necessary_args_nonacc(const Framework& fw, ArgIndex a, SemanticsKind sem,
                             Strategy strategy, const EnumerationOptions& options = {});

// --- minimality ---

// Order-minimal members of a family: inclusion-minimal members, or all
// members of least cardinality.
SetFamily minimal_sets(const SetFamily& family, MinimalityOrder order);

SetFamily minimal_sufficient_sets(const Framework& fw, ArgIndex a, SufficiencyMode mode,
                                  MinimalityOrder order, const NecSuffOptions& options = {});

}  // namespace argex
