#pragma once

#include <optional>
#include <string_view>

#include "argex/arg_set.hpp"
#include "argex/framework.hpp"
#include "argex/necsuff.hpp"
#include "argex/semantics.hpp"

namespace argex {

// How far an explanation looks from the queried argument.
enum class DepthKind {
  def_by,
  not_def,
  suff,
  nec,
  suff_not,
  nec_not,
  min_suff_card,
  min_suff_set,
  min_suff_not_card,
  min_suff_not_set,
};

enum class ResultKind {
  single,      // one determined set
  candidates,  // any member of the family is a valid explanation
};

struct ExplanationResult {
  QueryMode mode = QueryMode::acceptance;
  Strategy strategy = Strategy::skeptical;
  SemanticsKind semantics = SemanticsKind::preferred;
  DepthKind depth = DepthKind::def_by;
  ResultKind kind = ResultKind::single;
  SetFamily family;
  // The value does not depend on the extensions, so it is reported once.
  bool semantics_independent = false;

  // The explanation set of a `single` result.
  const ArgSet& set() const { return family.front(); }
};

std::string_view to_string(DepthKind d);
std::optional<DepthKind> depth_from_name(std::string_view name);
bool depth_allowed(QueryMode mode, DepthKind depth);

// Arguments that (in)directly defend a, optionally restricted to `within`.
ArgSet def_by(const Framework& fw, ArgIndex a, const std::optional<ArgSet>& within = std::nullopt);
// (In)direct attackers of a that ext does not directly attack.
ArgSet not_def(const Framework& fw, ArgIndex a, const ArgSet& ext);

// Throws StatusMismatch unless a is accepted (resp. non-accepted), and
// NoExtensions when the semantics yields no extension. A depth selector that
// does not belong to the mode raises InvalidConfig.
ExplanationResult acc_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                  ArgIndex a, DepthKind depth, const NecSuffOptions& options = {});
ExplanationResult not_acc_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                      ArgIndex a, DepthKind depth,
                                      const NecSuffOptions& options = {});

// The order-minimal values of the depth function over the extensions the
// mode/strategy pair ranges over: all extensions for skeptical acceptance
// and credulous non-acceptance, those with a for credulous acceptance, those
// without a for skeptical non-acceptance.
SetFamily minimal_explanation(const Framework& fw, SemanticsKind sem, Strategy strategy,
                              ArgIndex a, DepthKind depth, MinimalityOrder order, QueryMode mode,
                              const NecSuffOptions& options = {});

}  // namespace argex
