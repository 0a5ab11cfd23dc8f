#include "argex/explain.hpp"

#include <algorithm>

#include "argex/errors.hpp"
#include "argex/relations.hpp"

namespace argex {
namespace {

struct DepthName {
  DepthKind depth;
  std::string_view name;
};

constexpr DepthName kDepthNames[] = {
    {DepthKind::def_by, "defby"},
    {DepthKind::not_def, "notdef"},
    {DepthKind::suff, "suff"},
    {DepthKind::nec, "nec"},
    {DepthKind::suff_not, "suffnot"},
    {DepthKind::nec_not, "necnot"},
    {DepthKind::min_suff_card, "minsuff-card"},
    {DepthKind::min_suff_set, "minsuff-set"},
    {DepthKind::min_suff_not_card, "minsuffnot-card"},
    {DepthKind::min_suff_not_set, "minsuffnot-set"},
};

// Extensions the query ranges over, checking the acceptance precondition.
SetFamily checked_extensions(const Framework& fw, SemanticsKind sem, Strategy strategy,
                             ArgIndex a, QueryMode mode, DepthKind depth,
                             const NecSuffOptions& options) {
  fw.require(a);
  if (!depth_allowed(mode, depth))
    throw InvalidConfig("depth '" + std::string(to_string(depth)) + "' does not apply to " +
                        (mode == QueryMode::acceptance ? "acceptance" : "non-acceptance"));
  SetFamily exts = enumerate_extensions(fw, sem, options.enumeration);
  const AcceptanceStatus expected = mode == QueryMode::acceptance
                                        ? AcceptanceStatus::accepted
                                        : AcceptanceStatus::non_accepted;
  if (acceptance_status(exts, strategy, a) != expected)
    throw StatusMismatch("argument '" + fw.name(a) + "' is not " +
                         (mode == QueryMode::acceptance ? "" : "non-") + "accepted under " +
                         std::string(to_string(sem)) + "/" + std::string(to_string(strategy)));
  return exts;
}

// Extensions whose per-extension value enters the explanation.
SetFamily ranged_extensions(const SetFamily& exts, Strategy strategy, ArgIndex a,
                            QueryMode mode) {
  SetFamily out;
  for (const auto& e : exts) {
    const bool keep = mode == QueryMode::acceptance
                          ? (strategy == Strategy::skeptical || e.contains(a))
                          : (strategy == Strategy::credulous || !e.contains(a));
    if (keep) out.push_back(e);
  }
  return out;
}

bool is_per_extension(DepthKind depth) {
  return depth == DepthKind::def_by || depth == DepthKind::not_def;
}

// Value of an extension-independent depth selector, as a family of
// candidate sets (for single-set selectors, a family of one).
SetFamily constant_depth(const Framework& fw, SemanticsKind sem, Strategy strategy, ArgIndex a,
                         DepthKind depth, const NecSuffOptions& options) {
  switch (depth) {
    case DepthKind::suff: return sufficient_sets_acc(fw, a, false, options);
    case DepthKind::nec: return {necessary_args_acc(fw, a)};
    case DepthKind::suff_not: return sufficient_sets_nonacc(fw, a, options);
    case DepthKind::nec_not:
      return {necessary_args_nonacc(fw, a, sem, strategy, options.enumeration)};
    case DepthKind::min_suff_card:
      return minimal_sufficient_sets(fw, a, {QueryMode::acceptance, false},
                                     MinimalityOrder::cardinality, options);
    case DepthKind::min_suff_set:
      return minimal_sufficient_sets(fw, a, {QueryMode::acceptance, false},
                                     MinimalityOrder::set_inclusion, options);
    case DepthKind::min_suff_not_card:
      return minimal_sufficient_sets(fw, a, {QueryMode::non_acceptance, false},
                                     MinimalityOrder::cardinality, options);
    case DepthKind::min_suff_not_set:
      return minimal_sufficient_sets(fw, a, {QueryMode::non_acceptance, false},
                                     MinimalityOrder::set_inclusion, options);
    case DepthKind::def_by:
    case DepthKind::not_def: break;
  }
  throw InvalidConfig("depth selector depends on the extension");
}

ArgSet per_extension(const Framework& fw, ArgIndex a, DepthKind depth, const ArgSet& e) {
  return depth == DepthKind::def_by ? def_by(fw, a, e) : not_def(fw, a, e);
}

ExplanationResult explain(const Framework& fw, SemanticsKind sem, Strategy strategy, ArgIndex a,
                          DepthKind depth, QueryMode mode, const NecSuffOptions& options) {
  const SetFamily exts = checked_extensions(fw, sem, strategy, a, mode, depth, options);
  ExplanationResult r;
  r.mode = mode;
  r.strategy = strategy;
  r.semantics = sem;
  r.depth = depth;

  if (!is_per_extension(depth)) {
    r.family = constant_depth(fw, sem, strategy, a, depth, options);
    const bool single_set = depth == DepthKind::nec || depth == DepthKind::nec_not;
    r.kind = single_set ? ResultKind::single : ResultKind::candidates;
    // Necessity for non-acceptance is evaluated in subframeworks under the
    // queried semantics, so only that selector varies with it.
    r.semantics_independent = depth != DepthKind::nec_not;
    return r;
  }

  const SetFamily ranged = ranged_extensions(exts, strategy, a, mode);
  if (mode == QueryMode::acceptance && strategy == Strategy::credulous) {
    r.kind = ResultKind::candidates;
    for (const auto& e : ranged) r.family.push_back(per_extension(fw, a, depth, e));
    canonicalize(r.family);
  } else {
    r.kind = ResultKind::single;
    ArgSet acc;
    for (const auto& e : ranged) acc = set_union(acc, per_extension(fw, a, depth, e));
    r.family = {acc};
  }
  return r;
}

}  // namespace

std::string_view to_string(DepthKind d) {
  for (const auto& [depth, name] : kDepthNames)
    if (depth == d) return name;
  return "?";
}

std::optional<DepthKind> depth_from_name(std::string_view name) {
  for (const auto& [depth, n] : kDepthNames)
    if (n == name) return depth;
  return std::nullopt;
}

bool depth_allowed(QueryMode mode, DepthKind depth) {
  switch (depth) {
    case DepthKind::def_by:
    case DepthKind::suff:
    case DepthKind::nec:
    case DepthKind::min_suff_card:
    case DepthKind::min_suff_set: return mode == QueryMode::acceptance;
    default: return mode == QueryMode::non_acceptance;
  }
}

ArgSet def_by(const Framework& fw, ArgIndex a, const std::optional<ArgSet>& within) {
  const auto rel = relations_to(fw, a);
  if (within) fw.require(*within);
  ArgSet out;
  for (ArgIndex b = 0; b < fw.size(); ++b)
    if (rel[b].defends && (!within || within->contains(b))) out.insert(b);
  return out;
}

ArgSet not_def(const Framework& fw, ArgIndex a, const ArgSet& ext) {
  const auto rel = relations_to(fw, a);
  fw.require(ext);
  ArgSet out;
  for (ArgIndex b = 0; b < fw.size(); ++b)
    if (rel[b].attacks && !set_attacks(fw, ext, b)) out.insert(b);
  return out;
}

ExplanationResult acc_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                  ArgIndex a, DepthKind depth, const NecSuffOptions& options) {
  return explain(fw, sem, strategy, a, depth, QueryMode::acceptance, options);
}

ExplanationResult not_acc_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                      ArgIndex a, DepthKind depth,
                                      const NecSuffOptions& options) {
  return explain(fw, sem, strategy, a, depth, QueryMode::non_acceptance, options);
}

SetFamily minimal_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                              ArgIndex a, DepthKind depth, MinimalityOrder order, QueryMode mode,
                              const NecSuffOptions& options) {
  const SetFamily exts = checked_extensions(fw, sem, strategy, a, mode, depth, options);
  SetFamily candidates;
  if (is_per_extension(depth)) {
    for (const auto& e : ranged_extensions(exts, strategy, a, mode))
      candidates.push_back(per_extension(fw, a, depth, e));
  } else {
    candidates = constant_depth(fw, sem, strategy, a, depth, options);
  }
  canonicalize(candidates);
  return minimal_sets(candidates, order);
}

}  // namespace argex
