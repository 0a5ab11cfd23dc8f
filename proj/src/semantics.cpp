#include "argex/semantics.hpp"

#include <algorithm>
#include <cstdint>

#include "argex/errors.hpp"
#include "argex/relations.hpp"

namespace argex {
namespace {

// Bitset encoding for frameworks that fit in one machine word.
struct MaskFramework {
  std::size_t n = 0;
  std::vector<std::uint64_t> attackers;
  std::vector<std::uint64_t> targets;

  explicit MaskFramework(const Framework& fw) : n(fw.size()), attackers(n, 0), targets(n, 0) {
    for (const auto& [from, to] : fw.edges()) {
      attackers[to] |= std::uint64_t{1} << from;
      targets[from] |= std::uint64_t{1} << to;
    }
  }

  std::uint64_t full() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  std::uint64_t attacked_by(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (s >> a & 1U) out |= targets[a];
    return out;
  }

  bool conflict_free(std::uint64_t s) const {
    for (std::size_t a = 0; a < n; ++a)
      if ((s >> a & 1U) && (attackers[a] & s)) return false;
    return true;
  }

  std::uint64_t defended_by(std::uint64_t s) const {
    const std::uint64_t hit = attacked_by(s);
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n; ++a)
      if ((attackers[a] & ~hit) == 0) out |= std::uint64_t{1} << a;
    return out;
  }
};

SetFamily filter_subsets(const Framework& fw, SemanticsKind sem) {
  const MaskFramework mf(fw);
  std::vector<ArgIndex> universe(fw.size());
  for (ArgIndex i = 0; i < fw.size(); ++i) universe[i] = i;

  SetFamily out;
  const std::uint64_t limit = std::uint64_t{1} << fw.size();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!mf.conflict_free(s)) continue;
    bool keep = false;
    if (sem == SemanticsKind::stable) {
      keep = (s | mf.attacked_by(s)) == mf.full();
    } else {
      const std::uint64_t defended = mf.defended_by(s);
      if ((s & ~defended) != 0) continue;
      keep = sem == SemanticsKind::admissible || (defended & ~s) == 0;
    }
    if (keep) out.push_back(ArgSet::from_mask(s, universe));
  }
  return out;
}

// Depth-first labelling search. Each argument is in turn labelled in or out
// of the candidate set; unvisited arguments are undecided. Partial labellings
// that can no longer be completed to an admissible (resp. complete, stable)
// set are pruned.
class LabellingSearch {
 public:
  LabellingSearch(const Framework& fw, SemanticsKind sem)
      : fw_(fw), sem_(sem), label_(fw.size(), Label::undecided) {}

  SetFamily run() {
    visit(0);
    return std::move(found_);
  }

 private:
  enum class Label : char { undecided, in, out };

  bool attacked_by_in(ArgIndex x) const {
    for (ArgIndex y : fw_.attackers_of(x))
      if (label_[y] == Label::in) return true;
    return false;
  }

  bool may_be_attacked(ArgIndex x) const {
    for (ArgIndex y : fw_.attackers_of(x))
      if (label_[y] != Label::out) return true;
    return false;
  }

  bool feasible() const {
    for (ArgIndex x = 0; x < fw_.size(); ++x) {
      if (label_[x] == Label::in) {
        for (ArgIndex y : fw_.attackers_of(x))
          if (!may_be_attacked(y)) return false;
      } else if (label_[x] == Label::out) {
        if (sem_ == SemanticsKind::stable && !may_be_attacked(x)) return false;
        if (sem_ == SemanticsKind::complete || sem_ == SemanticsKind::preferred) {
          const auto attackers = fw_.attackers_of(x);
          const bool defended = std::all_of(attackers.begin(), attackers.end(),
                                            [&](ArgIndex y) { return attacked_by_in(y); });
          if (defended) return false;
        }
      }
    }
    return true;
  }

  void visit(ArgIndex a) {
    if (a == fw_.size()) {
      std::vector<ArgIndex> members;
      for (ArgIndex x = 0; x < fw_.size(); ++x)
        if (label_[x] == Label::in) members.push_back(x);
      ArgSet s(std::move(members));
      const SetProperty check = sem_ == SemanticsKind::admissible ? SetProperty::admissible
                                : sem_ == SemanticsKind::stable   ? SetProperty::stable
                                                                  : SetProperty::complete;
      if (check_set(fw_, s, check)) found_.push_back(std::move(s));
      return;
    }
    bool conflicts = fw_.self_attacking(a);
    for (ArgIndex y = 0; y < a && !conflicts; ++y)
      conflicts = label_[y] == Label::in && (fw_.attacks(y, a) || fw_.attacks(a, y));
    if (!conflicts) {
      label_[a] = Label::in;
      if (feasible()) visit(a + 1);
    }
    label_[a] = Label::out;
    if (feasible()) visit(a + 1);
    label_[a] = Label::undecided;
  }

  const Framework& fw_;
  SemanticsKind sem_;
  std::vector<Label> label_;
  SetFamily found_;
};

}  // namespace

std::string_view to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::admissible: return "adm";
    case SemanticsKind::complete: return "cmp";
    case SemanticsKind::grounded: return "grd";
    case SemanticsKind::preferred: return "prf";
    case SemanticsKind::stable: return "stb";
  }
  return "?";
}

std::string_view to_string(Strategy s) {
  return s == Strategy::skeptical ? "skeptical" : "credulous";
}

std::string_view to_string(AcceptanceStatus s) {
  return s == AcceptanceStatus::accepted ? "accepted" : "non_accepted";
}

std::optional<SemanticsKind> semantics_from_name(std::string_view name) {
  if (name == "adm" || name == "admissible") return SemanticsKind::admissible;
  if (name == "cmp" || name == "complete") return SemanticsKind::complete;
  if (name == "grd" || name == "grounded") return SemanticsKind::grounded;
  if (name == "prf" || name == "preferred") return SemanticsKind::preferred;
  if (name == "stb" || name == "stable") return SemanticsKind::stable;
  return std::nullopt;
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "skeptical") return Strategy::skeptical;
  if (name == "credulous") return Strategy::credulous;
  return std::nullopt;
}

bool check_set(const Framework& fw, const ArgSet& s, SetProperty property) {
  fw.require(s);
  for (ArgIndex a : s)
    for (ArgIndex b : s)
      if (fw.attacks(a, b)) return false;
  if (property == SetProperty::conflict_free) return true;

  for (ArgIndex a : s)
    if (!set_defends(fw, s, a)) return false;
  if (property == SetProperty::admissible) return true;

  for (ArgIndex a = 0; a < fw.size(); ++a)
    if (!s.contains(a) && set_defends(fw, s, a)) return false;
  if (property == SetProperty::complete) return true;

  for (ArgIndex a = 0; a < fw.size(); ++a)
    if (!s.contains(a) && !set_attacks(fw, s, a)) return false;
  return true;
}

ArgSet grounded_extension(const Framework& fw) {
  ArgSet current;
  while (true) {
    std::vector<ArgIndex> next;
    for (ArgIndex a = 0; a < fw.size(); ++a)
      if (set_defends(fw, current, a)) next.push_back(a);
    ArgSet s(std::move(next));
    if (s == current) return current;
    current = std::move(s);
  }
}

SetFamily maximal_sets(const SetFamily& family) {
  SetFamily out;
  for (const auto& s : family) {
    const bool dominated = std::any_of(family.begin(), family.end(), [&](const ArgSet& t) {
      return t.size() > s.size() && is_subset(s, t);
    });
    if (!dominated) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

SetFamily enumerate_extensions(const Framework& fw, SemanticsKind sem,
                               const EnumerationOptions& options) {
  if (sem == SemanticsKind::grounded) return {grounded_extension(fw)};

  const bool small = fw.size() <= std::min<std::size_t>(options.subset_threshold, 62);
  const SemanticsKind base = sem == SemanticsKind::preferred ? SemanticsKind::complete : sem;
  SetFamily family = small ? filter_subsets(fw, base) : LabellingSearch(fw, base).run();
  if (sem == SemanticsKind::preferred) family = maximal_sets(family);
  canonicalize(family);
  return family;
}

ExtensionPartition partition_extensions(const Framework& fw, SemanticsKind sem, ArgIndex a,
                                        const EnumerationOptions& options) {
  fw.require(a);
  ExtensionPartition out;
  for (auto& e : enumerate_extensions(fw, sem, options))
    (e.contains(a) ? out.with_a : out.without_a).push_back(std::move(e));
  return out;
}

AcceptanceStatus acceptance_status(const SetFamily& extensions, Strategy strategy, ArgIndex a) {
  if (extensions.empty()) throw NoExtensions();
  auto has_a = [a](const ArgSet& e) { return e.contains(a); };
  const bool accepted = strategy == Strategy::skeptical
                            ? std::all_of(extensions.begin(), extensions.end(), has_a)
                            : std::any_of(extensions.begin(), extensions.end(), has_a);
  return accepted ? AcceptanceStatus::accepted : AcceptanceStatus::non_accepted;
}

AcceptanceStatus acceptance_status(const Framework& fw, SemanticsKind sem, Strategy strategy,
                                   ArgIndex a, const EnumerationOptions& options) {
  fw.require(a);
  return acceptance_status(enumerate_extensions(fw, sem, options), strategy, a);
}

}  // namespace argex
