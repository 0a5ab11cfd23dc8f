#include "argex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "argex/errors.hpp"
#include "argex/explain.hpp"
#include "argex/io.hpp"
#include "argex/necsuff.hpp"
#include "argex/relations.hpp"

namespace argex::oracle {
namespace {

constexpr SemanticsKind kCompleteBased[] = {SemanticsKind::complete, SemanticsKind::grounded,
                                            SemanticsKind::preferred, SemanticsKind::stable};
constexpr Strategy kStrategies[] = {Strategy::skeptical, Strategy::credulous};
constexpr MinimalityOrder kOrders[] = {MinimalityOrder::set_inclusion,
                                       MinimalityOrder::cardinality};

std::string label(SemanticsKind sem, Strategy strategy) {
  return std::string(to_string(sem)) + "/" + std::string(to_string(strategy));
}

std::string label(MinimalityOrder order) {
  return order == MinimalityOrder::cardinality ? "card" : "set";
}

// Shared state for one framework: brute-force extension families and the
// violation log.
class Context {
 public:
  Context(const Framework& fw, PropertyId id)
      : fw_(fw), apx_(serialize_framework(fw, OutputFormat::apx)) {
    report_.property = id;
    for (auto sem : kAllSemantics) exts_[sem] = brute_force_extensions(fw, sem);
  }

  const Framework& fw() const { return fw_; }
  const SetFamily& exts(SemanticsKind sem) const { return exts_.at(sem); }

  // nullopt when the family is empty and the status is undefined.
  std::optional<bool> accepted(SemanticsKind sem, Strategy strategy, ArgIndex a) const {
    const auto& family = exts(sem);
    if (family.empty()) return std::nullopt;
    return acceptance_status(family, strategy, a) == AcceptanceStatus::accepted;
  }

  bool non_accepted(SemanticsKind sem, Strategy strategy, ArgIndex a) const {
    auto s = accepted(sem, strategy, a);
    return s && !*s;
  }

  ArgSet grounded() const { return exts(SemanticsKind::grounded).front(); }

  void expect(bool condition, ArgIndex a, const std::string& detail) {
    ++report_.checked_instances;
    if (!condition) report_.violations.push_back({apx_, fw_.name(a), detail});
  }

  std::string fmt(const ArgSet& s) const { return fw_.format(s); }

  std::string fmt(const SetFamily& family) const {
    std::string out = "{";
    for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + fmt(family[i]);
    return out + "}";
  }

  PropertyReport take() { return std::move(report_); }

 private:
  const Framework& fw_;
  std::string apx_;
  std::map<SemanticsKind, SetFamily> exts_;
  PropertyReport report_;
};

bool attacked(const Framework& fw, ArgIndex a) { return !fw.attackers_of(a).empty(); }

bool in_some(const SetFamily& family, ArgIndex a) {
  return std::any_of(family.begin(), family.end(), [a](const ArgSet& e) { return e.contains(a); });
}

bool brute_admissible(const Framework& fw, const ArgSet& s) {
  return family_contains(brute_force_extensions(fw, SemanticsKind::admissible), s);
}

ArgSet with(ArgSet s, ArgIndex a) {
  s.insert(a);
  return s;
}

// Acceptance explanations under def_by compared across semantics.
void check_prop1(Context& ctx) {
  const auto& fw = ctx.fw();
  const ArgSet grounded = ctx.grounded();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    auto skeptical = [&](SemanticsKind sem) {
      return acc_explanation(fw, sem, Strategy::skeptical, a, DepthKind::def_by).set();
    };
    auto credulous = [&](SemanticsKind sem) {
      return acc_explanation(fw, sem, Strategy::credulous, a, DepthKind::def_by).family;
    };

    if (grounded.contains(a)) {
      const ArgSet base = skeptical(SemanticsKind::grounded);
      for (auto sem : {SemanticsKind::complete, SemanticsKind::preferred, SemanticsKind::stable}) {
        if (!ctx.accepted(sem, Strategy::skeptical, a).value_or(false)) continue;
        for (const auto& e : ctx.exts(sem))
          ctx.expect(is_subset(def_by(fw, a, grounded), def_by(fw, a, e)), a,
                     "item 1: DefBy in grounded not within DefBy in " + ctx.fmt(e));
        ctx.expect(is_subset(base, skeptical(sem)), a,
                   "item 1: grounded explanation not within skeptical " +
                       std::string(to_string(sem)));
        for (const auto& s : credulous(sem))
          ctx.expect(is_subset(base, s), a,
                     "item 1: grounded explanation not within credulous candidate " + ctx.fmt(s));
      }
      // A in the grounded extension is in every complete extension.
      const ArgSet cmp = skeptical(SemanticsKind::complete);
      const ArgSet prf = skeptical(SemanticsKind::preferred);
      ctx.expect(is_subset(prf, cmp), a, "item 2: skeptical prf not within cmp");
      if (!ctx.exts(SemanticsKind::stable).empty())
        ctx.expect(is_subset(skeptical(SemanticsKind::stable), prf), a,
                   "item 2: skeptical stb not within prf");
    }

    if (ctx.accepted(SemanticsKind::complete, Strategy::credulous, a).value_or(false)) {
      const SetFamily cmp = credulous(SemanticsKind::complete);
      const SetFamily prf = credulous(SemanticsKind::preferred);
      ctx.expect(family_subset(prf, cmp), a, "item 3: credulous prf family not within cmp");
      if (ctx.accepted(SemanticsKind::stable, Strategy::credulous, a).value_or(false))
        ctx.expect(family_subset(credulous(SemanticsKind::stable), prf), a,
                   "item 3: credulous stb family not within prf");
      for (const auto& s : cmp) {
        const bool covered =
            std::any_of(prf.begin(), prf.end(), [&](const ArgSet& t) { return is_subset(s, t); });
        ctx.expect(covered, a, "item 4: cmp candidate " + ctx.fmt(s) + " not within a prf one");
      }
    }
  }
}

// Non-acceptance explanations under not_def compared across semantics.
void check_prop2(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    auto explanation = [&](SemanticsKind sem, Strategy strategy) {
      return not_acc_explanation(fw, sem, strategy, a, DepthKind::not_def).set();
    };
    if (!ctx.grounded().contains(a))
      ctx.expect(is_subset(explanation(SemanticsKind::grounded, Strategy::skeptical),
                           explanation(SemanticsKind::complete, Strategy::skeptical)),
                 a, "item 1: skeptical grd not within cmp");
    for (auto strategy : kStrategies) {
      const std::pair<SemanticsKind, SemanticsKind> chain[] = {
          {SemanticsKind::stable, SemanticsKind::preferred},
          {SemanticsKind::preferred, SemanticsKind::complete}};
      for (auto [narrow, wide] : chain) {
        if (!ctx.non_accepted(narrow, strategy, a) || !ctx.non_accepted(wide, strategy, a))
          continue;
        ctx.expect(is_subset(explanation(narrow, strategy), explanation(wide, strategy)), a,
                   "item 2: " + label(narrow, strategy) + " not within " + label(wide, strategy));
      }
    }
  }
}

// Sufficiency and necessity for acceptance. Item 1 concerns the strict
// sufficiency variant; items 3 and 4 compare with strict sufficient sets and
// disregard a itself among its necessary arguments (see README).
void check_prop3(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (!in_some(ctx.exts(SemanticsKind::admissible), a)) continue;
    const SetFamily strict = sufficient_sets_acc(fw, a, true);
    const SetFamily literal = sufficient_sets_acc(fw, a, false);
    for (const auto& s : strict)
      ctx.expect(brute_admissible(fw, s) && brute_admissible(fw, with(s, a)), a,
                 "item 1: strict sufficient set " + ctx.fmt(s) + " not admissible with a");

    const bool has_attacker = attacked(fw, a);
    ctx.expect(strict.empty() == !has_attacker, a, "item 2: strict Suff emptiness mismatch");
    ctx.expect(literal.empty() == !has_attacker, a, "item 2: literal Suff emptiness mismatch");

    // a on an attack cycle is necessary for itself and sits in every strict
    // sufficient set that contains it; both sides are compared without a.
    ArgSet nec = necessary_args_acc(fw, a);
    nec.erase(a);
    ArgSet common = intersect_all(strict);
    common.erase(a);
    ctx.expect(nec.empty() == (!has_attacker || common.empty()), a,
               "item 3: Nec " + ctx.fmt(nec) + " vs common strict Suff " + ctx.fmt(common));
    if (!strict.empty())
      ctx.expect(is_subset(nec, common), a,
                 "item 4: Nec " + ctx.fmt(nec) + " not within " + ctx.fmt(common));
  }
}

// DefBy relative to sufficiency and necessity for acceptance.
void check_prop4(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (attacked(fw, a)) {
      for (auto sem : kAllSemantics)
        for (const auto& e : ctx.exts(sem)) {
          if (!e.contains(a)) continue;
          const ArgSet d = def_by(fw, a, e);
          ctx.expect(is_sufficient_acc(fw, d, a, false), a,
                     "item 1: DefBy in " + ctx.fmt(e) + " not sufficient");
          ctx.expect(is_sufficient_acc(fw, d, a, true), a,
                     "item 1: DefBy in " + ctx.fmt(e) + " not strictly sufficient");
        }
    }
    SetFamily defs;
    for (const auto& e : ctx.exts(SemanticsKind::admissible))
      if (e.contains(a)) defs.push_back(def_by(fw, a, e));
    if (defs.empty()) continue;
    const ArgSet common = intersect_all(defs);
    const ArgSet nec = necessary_args_acc(fw, a);
    ctx.expect(common == nec, a,
               "item 2: common DefBy " + ctx.fmt(common) + " != Nec " + ctx.fmt(nec));
  }
}

// Existence of sufficient sets for non-acceptance; single attackers are
// necessary. Skeptical admissible non-acceptance holds for every argument
// (the empty set is admissible) and is left out.
void check_prop5(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (fw.self_attacking(a)) continue;
    std::vector<std::pair<SemanticsKind, Strategy>> queries{
        {SemanticsKind::admissible, Strategy::credulous}};
    for (auto sem : kCompleteBased)
      for (auto strategy : kStrategies) queries.emplace_back(sem, strategy);

    std::optional<SetFamily> suff_not;
    for (auto [sem, strategy] : queries) {
      if (!ctx.non_accepted(sem, strategy, a)) continue;
      if (!suff_not) suff_not = sufficient_sets_nonacc(fw, a);
      ctx.expect(!suff_not->empty(), a, "item 1: SuffNot empty under " + label(sem, strategy));
      try {
        const ArgSet nec_not = necessary_args_nonacc(fw, a, sem, strategy);
        ctx.expect(!nec_not.empty() || fw.attackers_of(a).size() >= 2, a,
                   "item 2: NecNot empty with one direct attacker under " + label(sem, strategy));
      } catch (const NoExtensions&) {
        // Acceptance in some subframework is undefined.
      }
    }
  }
}

// NotDef relative to sufficiency and necessity for non-acceptance. Item 2
// is checked for skeptical non-acceptance only: credulously, a can regain
// acceptance without b through an extension that did not exist before, even
// though every old extension still attacks b.
void check_prop6(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (fw.self_attacking(a)) continue;
    for (auto sem : kCompleteBased) {
      SetFamily not_defs;
      for (const auto& e : ctx.exts(sem)) {
        if (e.contains(a)) continue;
        const ArgSet nd = not_def(fw, a, e);
        not_defs.push_back(nd);
        ctx.expect(is_sufficient_nonacc(fw, nd, a), a,
                   "item 1: NotDef in " + ctx.fmt(e) + " = " + ctx.fmt(nd) +
                       " not sufficient under " + std::string(to_string(sem)));
      }
      if (!ctx.non_accepted(sem, Strategy::skeptical, a)) continue;
      try {
        const ArgSet nec_not = necessary_args_nonacc(fw, a, sem, Strategy::skeptical);
        const ArgSet common = intersect_all(not_defs);
        ctx.expect(is_subset(nec_not, common), a,
                   "item 2: NecNot " + ctx.fmt(nec_not) + " not within common NotDef " +
                       ctx.fmt(common) + " under " + label(sem, Strategy::skeptical));
      } catch (const NoExtensions&) {
      }
    }
  }
}

bool precedes(const ArgSet& x, const ArgSet& y, MinimalityOrder order) {
  return order == MinimalityOrder::cardinality ? x.size() <= y.size() : is_subset(x, y);
}

// Minimal def_by explanations against minimally sufficient sets. Item 2
// uses strict sufficiency and skips a that lies on an attack cycle, where
// DefBy keeps a itself.
void check_prop7(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (!attacked(fw, a)) continue;
    const ArgSet nec = necessary_args_acc(fw, a);
    const bool self_relevant = is_relevant(fw, a, a);
    for (auto order : kOrders) {
      const SetFamily min_suff =
          minimal_sufficient_sets(fw, a, {QueryMode::acceptance, false}, order);
      const SetFamily min_suff_strict =
          minimal_sufficient_sets(fw, a, {QueryMode::acceptance, true}, order);
      for (auto sem : kAllSemantics)
        for (auto strategy : kStrategies) {
          if (!ctx.accepted(sem, strategy, a).value_or(false)) continue;
          const SetFamily mins = minimal_explanation(fw, sem, strategy, a, DepthKind::def_by,
                                                     order, QueryMode::acceptance);
          const std::string where = label(sem, strategy) + "/" + label(order);
          for (const auto& s : mins) {
            const bool covered = std::any_of(min_suff.begin(), min_suff.end(),
                                             [&](const ArgSet& t) { return precedes(t, s, order); });
            ctx.expect(covered, a, "item 1: " + ctx.fmt(s) + " has no smaller MinSuff, " + where);
            ctx.expect(is_subset(nec, s), a,
                       "item 3: Nec " + ctx.fmt(nec) + " not within " + ctx.fmt(s) + ", " + where);
          }
          if (sem == SemanticsKind::admissible && !self_relevant)
            for (const auto& s : min_suff_strict)
              ctx.expect(family_contains(mins, s), a,
                         "item 2: MinSuff " + ctx.fmt(s) + " is not a minimal explanation, " +
                             where);
        }
    }
  }
}

// Minimal not_def explanations against minimally sufficient sets. Item 2
// inherits the skeptical-only restriction of prop6 item 2.
void check_prop8(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    if (fw.self_attacking(a)) continue;
    for (auto order : kOrders) {
      std::optional<SetFamily> min_suff_not;
      for (auto sem : kCompleteBased)
        for (auto strategy : kStrategies) {
          if (!ctx.non_accepted(sem, strategy, a)) continue;
          if (!min_suff_not)
            min_suff_not = minimal_sufficient_sets(fw, a, {QueryMode::non_acceptance}, order);
          const SetFamily mins = minimal_explanation(fw, sem, strategy, a, DepthKind::not_def,
                                                     order, QueryMode::non_acceptance);
          const std::string where = label(sem, strategy) + "/" + label(order);
          std::optional<ArgSet> nec_not;
          try {
            nec_not = necessary_args_nonacc(fw, a, sem, strategy);
          } catch (const NoExtensions&) {
          }
          for (const auto& s : mins) {
            const bool covered =
                std::any_of(min_suff_not->begin(), min_suff_not->end(),
                            [&](const ArgSet& t) { return is_subset(t, s); });
            ctx.expect(covered, a,
                       "item 1: " + ctx.fmt(s) + " contains no MinSuffNot member, " + where);
            if (nec_not && strategy == Strategy::skeptical)
              ctx.expect(is_subset(*nec_not, s), a,
                         "item 2: NecNot " + ctx.fmt(*nec_not) + " not within " + ctx.fmt(s) +
                             ", " + where);
          }
        }
    }
  }
}

// Extensions survive removal of an argument they attack.
void check_lemma1(Context& ctx) {
  const auto& fw = ctx.fw();
  for (ArgIndex x = 0; x < fw.size(); ++x) {
    std::optional<Framework> sub;
    std::map<SemanticsKind, SetFamily> sub_exts;
    for (auto sem : kAllSemantics)
      for (const auto& e : ctx.exts(sem)) {
        if (!set_attacks(fw, e, x)) continue;
        if (!sub) {
          sub = subframework_without(fw, x);
          for (auto s : kAllSemantics) sub_exts[s] = brute_force_extensions(*sub, s);
        }
        ctx.expect(family_contains(sub_exts[sem], translate(e, fw, *sub)), x,
                   ctx.fmt(e) + " is not a " + std::string(to_string(sem)) +
                       " extension after removing the attacked argument");
      }
  }
}

}  // namespace

Framework random_framework(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxGeneratedArgs)
    throw InvalidConfig("argument count must be between 1 and " +
                        std::to_string(kMaxGeneratedArgs));
  if (!(cfg.edge_prob >= 0.0 && cfg.edge_prob <= 1.0))
    throw InvalidConfig("edge probability must lie in [0, 1]");

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cfg.n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = 0; j < cfg.n; ++j) {
      if (i == j && !cfg.allow_self_attacks) continue;
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < cfg.edge_prob) attacks.emplace_back(names[i], names[j]);
    }
  return Framework(std::move(names), attacks);
}

GeneratorConfig corpus_member_config(const CorpusConfig& cfg, std::size_t i) {
  if (cfg.max_n == 0 || cfg.edge_probs.empty()) throw InvalidConfig("empty corpus configuration");
  return {1 + i % cfg.max_n, cfg.edge_probs[(i / cfg.max_n) % cfg.edge_probs.size()],
          cfg.allow_self_attacks, cfg.seed + i};
}

std::vector<Framework> random_corpus(const CorpusConfig& cfg) {
  std::vector<Framework> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i)
    out.push_back(random_framework(corpus_member_config(cfg, i)));
  return out;
}

SetFamily brute_force_extensions(const Framework& fw, SemanticsKind sem) {
  const std::size_t n = fw.size();
  if (n > kMaxBruteForceArgs)
    throw TooLarge("brute-force enumeration is limited to " +
                   std::to_string(kMaxBruteForceArgs) + " arguments");

  std::vector<std::vector<bool>> admissible, complete, stable;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1U;

    bool conflict_free = true;
    for (ArgIndex x = 0; x < n; ++x)
      for (ArgIndex y = 0; y < n; ++y)
        if (in[x] && in[y] && fw.attacks(x, y)) conflict_free = false;
    if (!conflict_free) continue;

    auto attacked_by_set = [&](ArgIndex b) {
      for (ArgIndex c = 0; c < n; ++c)
        if (in[c] && fw.attacks(c, b)) return true;
      return false;
    };
    auto defended = [&](ArgIndex a) {
      for (ArgIndex b = 0; b < n; ++b)
        if (fw.attacks(b, a) && !attacked_by_set(b)) return false;
      return true;
    };

    bool adm = true;
    for (ArgIndex a = 0; a < n; ++a)
      if (in[a] && !defended(a)) adm = false;
    if (!adm) continue;
    admissible.push_back(in);

    bool cmp = true;
    for (ArgIndex a = 0; a < n; ++a)
      if (!in[a] && defended(a)) cmp = false;
    if (!cmp) continue;
    complete.push_back(in);

    bool stb = true;
    for (ArgIndex a = 0; a < n; ++a)
      if (!in[a] && !attacked_by_set(a)) stb = false;
    if (stb) stable.push_back(in);
  }

  auto subset = [n](const std::vector<bool>& x, const std::vector<bool>& y) {
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] && !y[i]) return false;
    return true;
  };
  std::vector<std::vector<bool>> chosen;
  switch (sem) {
    case SemanticsKind::admissible: chosen = admissible; break;
    case SemanticsKind::complete: chosen = complete; break;
    case SemanticsKind::stable: chosen = stable; break;
    case SemanticsKind::grounded:
      for (const auto& c : complete)
        if (std::all_of(complete.begin(), complete.end(),
                        [&](const auto& d) { return subset(c, d); }))
          chosen.push_back(c);
      break;
    case SemanticsKind::preferred:
      for (const auto& c : complete)
        if (std::none_of(complete.begin(), complete.end(),
                         [&](const auto& d) { return d != c && subset(c, d); }))
          chosen.push_back(c);
      break;
  }

  SetFamily out;
  for (const auto& in : chosen) {
    ArgSet s;
    for (ArgIndex i = 0; i < n; ++i)
      if (in[i]) s.insert(i);
    out.push_back(std::move(s));
  }
  canonicalize(out);
  return out;
}

std::string_view to_string(PropertyId id) {
  switch (id) {
    case PropertyId::prop1: return "prop1";
    case PropertyId::prop2: return "prop2";
    case PropertyId::prop3: return "prop3";
    case PropertyId::prop4: return "prop4";
    case PropertyId::prop5: return "prop5";
    case PropertyId::prop6: return "prop6";
    case PropertyId::prop7: return "prop7";
    case PropertyId::prop8: return "prop8";
    case PropertyId::lemma1: return "lemma1";
  }
  return "?";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
  for (auto id : kAllProperties)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

void PropertyReport::merge(const PropertyReport& other) {
  checked_instances += other.checked_instances;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

PropertyReport check_property(const Framework& fw, PropertyId id) {
  if (fw.size() > kMaxCheckedArgs)
    throw TooLarge("property checks are limited to " + std::to_string(kMaxCheckedArgs) +
                   " arguments");
  Context ctx(fw, id);
  switch (id) {
    case PropertyId::prop1: check_prop1(ctx); break;
    case PropertyId::prop2: check_prop2(ctx); break;
    case PropertyId::prop3: check_prop3(ctx); break;
    case PropertyId::prop4: check_prop4(ctx); break;
    case PropertyId::prop5: check_prop5(ctx); break;
    case PropertyId::prop6: check_prop6(ctx); break;
    case PropertyId::prop7: check_prop7(ctx); break;
    case PropertyId::prop8: check_prop8(ctx); break;
    case PropertyId::lemma1: check_lemma1(ctx); break;
  }
  return ctx.take();
}

nlohmann::ordered_json to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["property"] = std::string(to_string(report.property));
  j["checked_instances"] = report.checked_instances;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(
        {{"framework", v.framework}, {"argument", v.argument}, {"detail", v.detail}});
  return j;
}

}  // namespace argex::oracle
