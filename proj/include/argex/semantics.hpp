#pragma once

#include <optional>
#include <string_view>

#include "argex/arg_set.hpp"
#include "argex/framework.hpp"

namespace argex {

enum class SemanticsKind { admissible, complete, grounded, preferred, stable };
enum class Strategy { skeptical, credulous };
enum class SetProperty { conflict_free, admissible, complete, stable };
enum class AcceptanceStatus { accepted, non_accepted };

inline constexpr SemanticsKind kAllSemantics[] = {
    SemanticsKind::admissible, SemanticsKind::complete, SemanticsKind::grounded,
    SemanticsKind::preferred, SemanticsKind::stable};

std::string_view to_string(SemanticsKind k);
std::string_view to_string(Strategy s);
std::string_view to_string(AcceptanceStatus s);
// Accepts the short forms adm/cmp/grd/prf/stb as well as the full names.
std::optional<SemanticsKind> semantics_from_name(std::string_view name);
std::optional<Strategy> strategy_from_name(std::string_view name);

struct EnumerationOptions {
  // Frameworks up to this many arguments are enumerated by filtering all
  // subsets; larger ones use the labelling search.
  std::size_t subset_threshold = 20;
};

struct ExtensionPartition {
  SetFamily with_a;
  SetFamily without_a;
};

bool check_set(const Framework& fw, const ArgSet& s, SetProperty property);

// Least fixed point of S -> {a | S defends a}, starting from the empty set.
ArgSet grounded_extension(const Framework& fw);

// All extensions in canonical order. Grounded yields exactly one; stable may
// yield none.
SetFamily enumerate_extensions(const Framework& fw, SemanticsKind sem,
                               const EnumerationOptions& options = {});

ExtensionPartition partition_extensions(const Framework& fw, SemanticsKind sem, ArgIndex a,
                                        const EnumerationOptions& options = {});

// Throws NoExtensions when the family is empty.
AcceptanceStatus acceptance_status(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                   ArgIndex a, const EnumerationOptions& options = {});
AcceptanceStatus acceptance_status(const SetFamily& extensions, Strategy strategy, ArgIndex a);

// The subset-inclusion-maximal members of a family, canonically ordered.
SetFamily maximal_sets(const SetFamily& family);

}  // namespace argex
