#include "argex/necsuff.hpp"

#include <algorithm>
#include <map>

#include "argex/errors.hpp"

namespace argex {
namespace {

void check_cap(const ArgSet& relevant, const NecSuffOptions& options) {
  if (relevant.size() > options.subset_cap || relevant.size() > 62)
    throw TooLarge(std::to_string(relevant.size()) +
                   " relevant arguments exceed the subset enumeration cap of " +
                   std::to_string(options.subset_cap));
}

template <typename Pred>
SetFamily filter_nonempty_subsets(const ArgSet& universe, Pred&& pred) {
  const auto& members = universe.members();
  SetFamily out;
  const std::uint64_t limit = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ArgSet s = ArgSet::from_mask(mask, members);
    if (pred(s)) out.push_back(std::move(s));
  }
  canonicalize(out);
  return out;
}

// Evaluates the recursive non-acceptance sufficiency test. Per-target data
// (relevant arguments, contest reports of odd simple paths) is cached since a
// family enumeration asks the same targets for many candidate sets.
class NonAcceptanceChecker {
 public:
  explicit NonAcceptanceChecker(const Framework& fw) : fw_(fw) {}

  bool sufficient(const ArgSet& s, ArgIndex target) {
    std::vector<ArgIndex> stack;
    return sufficient(s, target, stack);
  }

  const ArgSet& relevant(ArgIndex target) { return entry(target).relevant; }

 private:
  struct TargetInfo {
    ArgSet relevant;
    // Contest reports of the odd simple paths into the target, by source.
    std::map<ArgIndex, std::vector<ContestReport>> odd_paths;
  };

  TargetInfo& entry(ArgIndex target) {
    auto it = cache_.find(target);
    if (it != cache_.end()) return it->second;
    TargetInfo info;
    info.relevant = relevant_args(fw_, target);
    for (ArgIndex b : info.relevant) {
      auto& reports = info.odd_paths[b];
      for (auto& p : attack_paths(fw_, b, target))
        if (p.is_attack()) reports.push_back(classify_attack(fw_, p));
    }
    return cache_.emplace(target, std::move(info)).first->second;
  }

  bool sufficient(const ArgSet& s, ArgIndex target, std::vector<ArgIndex>& stack) {
    if (std::find(stack.begin(), stack.end(), target) != stack.end()) return false;
    // Any witnessing subset can be widened to everything in s that is
    // relevant for the target without losing a witness.
    const ArgSet usable = set_intersection(s, entry(target).relevant);
    stack.push_back(target);
    bool found = false;
    for (ArgIndex b : usable) {
      if (fw_.attacks(b, target)) {
        found = true;
        break;
      }
      for (const auto& report : entry(target).odd_paths.at(b)) {
        bool covered = true;
        for (const auto& point : report.points) {
          for (ArgIndex d : point.attackers) {
            if (!sufficient(s, d, stack)) {
              covered = false;
              break;
            }
          }
          if (!covered) break;
        }
        if (covered) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    stack.pop_back();
    return found;
  }

  const Framework& fw_;
  std::map<ArgIndex, TargetInfo> cache_;
};

bool sufficient_acc_given_relevant(const Framework& fw, const ArgSet& s, ArgIndex a,
                                   bool strict) {
  if (s.empty() || !check_set(fw, s, SetProperty::conflict_free)) return false;
  for (ArgIndex x : fw.attackers_of(a))
    if (!set_attacks(fw, s, x)) return false;
  if (!strict) return true;
  ArgSet with_a = s;
  with_a.insert(a);
  return check_set(fw, s, SetProperty::admissible) &&
         check_set(fw, with_a, SetProperty::admissible);
}

}  // namespace

bool is_sufficient_acc(const Framework& fw, const ArgSet& s, ArgIndex a, bool strict) {
  fw.require(a);
  fw.require(s);
  return is_relevant_set(fw, s, a) && sufficient_acc_given_relevant(fw, s, a, strict);
}

SetFamily sufficient_sets_acc(const Framework& fw, ArgIndex a, bool strict,
                              const NecSuffOptions& options) {
  fw.require(a);
  const ArgSet relevant = relevant_args(fw, a);
  check_cap(relevant, options);
  return filter_nonempty_subsets(relevant, [&](const ArgSet& s) {
    return sufficient_acc_given_relevant(fw, s, a, strict);
  });
}

bool is_necessary_acc(const Framework& fw, ArgIndex b, ArgIndex a) {
  fw.require(b);
  if (!is_relevant(fw, b, a)) return false;
  for (const auto& e : enumerate_extensions(fw, SemanticsKind::admissible))
    if (!e.contains(b) && e.contains(a)) return false;
  return true;
}

ArgSet necessary_args_acc(const Framework& fw, ArgIndex a) {
  const ArgSet relevant = relevant_args(fw, a);
  if (relevant.empty()) return {};
  const SetFamily admissible = enumerate_extensions(fw, SemanticsKind::admissible);
  ArgSet out;
  for (ArgIndex b : relevant) {
    const bool needed = std::none_of(admissible.begin(), admissible.end(), [&](const ArgSet& e) {
      return e.contains(a) && !e.contains(b);
    });
    if (needed) out.insert(b);
  }
  return out;
}

ContestReport classify_attack(const Framework& fw, const AttackPath& path) {
  const auto& nodes = path.nodes;
  if (nodes.size() < 2) throw InvalidPath("an attack path needs at least one edge");
  for (ArgIndex v : nodes) fw.require(v);
  if (!path.is_attack()) throw InvalidPath("attack path has even length");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!fw.attacks(nodes[i], nodes[i + 1]))
      throw InvalidPath("no attack from " + fw.name(nodes[i]) + " to " + fw.name(nodes[i + 1]));
  std::vector<ArgIndex> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidPath("attack path repeats an argument");

  ContestReport report{path, false, {}};
  // nodes[0] is the source and nodes.back() the target; intermediates C_i
  // sit at nodes[i], so C2, C4, ... are the even interior positions.
  for (std::size_t i = 2; i + 1 < nodes.size(); i += 2) {
    std::vector<ArgIndex> contesting;
    for (ArgIndex d : fw.attackers_of(nodes[i]))
      if (d != nodes[i - 1]) contesting.push_back(d);
    if (!contesting.empty()) report.points.push_back({nodes[i], ArgSet(std::move(contesting))});
  }
  report.contested = !report.points.empty();
  return report;
}

bool is_sufficient_nonacc(const Framework& fw, const ArgSet& s, ArgIndex a) {
  fw.require(a);
  fw.require(s);
  if (fw.self_attacking(a)) throw SelfAttacker(fw.name(a));
  NonAcceptanceChecker checker(fw);
  if (s.empty() || !is_subset(s, checker.relevant(a))) return false;
  return checker.sufficient(s, a);
}

SetFamily sufficient_sets_nonacc(const Framework& fw, ArgIndex a, const NecSuffOptions& options) {
  fw.require(a);
  if (fw.self_attacking(a)) throw SelfAttacker(fw.name(a));
  NonAcceptanceChecker checker(fw);
  const ArgSet relevant = checker.relevant(a);
  check_cap(relevant, options);
  return filter_nonempty_subsets(relevant,
                                 [&](const ArgSet& s) { return checker.sufficient(s, a); });
}

bool is_necessary_nonacc(const Framework& fw, ArgIndex b, ArgIndex a, SemanticsKind sem,
                         Strategy strategy, const EnumerationOptions& options) {
  fw.require(b);
  // a has no status in a framework without a.
  if (b == a || !is_relevant(fw, b, a)) return false;
  const Framework sub = subframework_without(fw, b);
  return acceptance_status(sub, sem, strategy, sub.index_of(fw.name(a)), options) ==
         AcceptanceStatus::accepted;
}

ArgSet necessary_args_nonacc(const Framework& fw, ArgIndex a, SemanticsKind sem,
                             Strategy strategy, const EnumerationOptions& options) {
  ArgSet out;
  for (ArgIndex b : relevant_args(fw, a))
    if (is_necessary_nonacc(fw, b, a, sem, strategy, options)) out.insert(b);
  return out;
}

SetFamily minimal_sets(const SetFamily& family, MinimalityOrder order) {
  SetFamily out;
  if (order == MinimalityOrder::cardinality) {
    if (family.empty()) return out;
    const auto smallest = std::min_element(family.begin(), family.end(),
                                           [](const auto& x, const auto& y) {
                                             return x.size() < y.size();
                                           })->size();
    for (const auto& s : family)
      if (s.size() == smallest) out.push_back(s);
  } else {
    for (const auto& s : family) {
      const bool dominated = std::any_of(family.begin(), family.end(), [&](const ArgSet& t) {
        return t.size() < s.size() && is_subset(t, s);
      });
      if (!dominated) out.push_back(s);
    }
  }
  canonicalize(out);
  return out;
}

SetFamily minimal_sufficient_sets(const Framework& fw, ArgIndex a, SufficiencyMode mode,
                                  MinimalityOrder order, const NecSuffOptions& options) {
  const SetFamily family = mode.mode == QueryMode::acceptance
                               ? sufficient_sets_acc(fw, a, mode.strict, options)
                               : sufficient_sets_nonacc(fw, a, options);
  return minimal_sets(family, order);
}

}  // namespace argex
