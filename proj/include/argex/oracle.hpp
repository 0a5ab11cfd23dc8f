#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "argex/arg_set.hpp"
#include "argex/framework.hpp"
#include "argex/semantics.hpp"

namespace argex::oracle {

// Frameworks are drawn from std::mt19937_64 seeded with `seed`. Ordered pairs
// (i, j) are visited row by row (attacker i outer, target j inner), one
// 64-bit draw per eligible pair; the pair is kept when the top 53 bits,
// read as a fraction in [0, 1), fall below edge_prob. Arguments are named
// a0 ... a(n-1).
struct GeneratorConfig {
  std::size_t n = 5;
  double edge_prob = 0.3;
  bool allow_self_attacks = false;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxGeneratedArgs = 10;
inline constexpr std::size_t kMaxBruteForceArgs = 10;
inline constexpr std::size_t kMaxCheckedArgs = 7;

// Throws InvalidConfig.
Framework random_framework(const GeneratorConfig& cfg);

struct CorpusConfig {
  std::size_t count = 500;
  std::size_t max_n = 7;
  std::vector<double> edge_probs{0.15, 0.3, 0.5};
  bool allow_self_attacks = false;
  std::uint64_t seed = 1;
};

// Framework i has n = 1 + i % max_n, edge_probs[(i / max_n) % size] and seed
// cfg.seed + i.
std::vector<Framework> random_corpus(const CorpusConfig& cfg);
GeneratorConfig corpus_member_config(const CorpusConfig& cfg, std::size_t i);

// Filters all 2^n subsets with the textbook predicates, independently of the
// semantics module. Throws TooLarge above kMaxBruteForceArgs arguments.
SetFamily brute_force_extensions(const Framework& fw, SemanticsKind sem);

enum class PropertyId { prop1, prop2, prop3, prop4, prop5, prop6, prop7, prop8, lemma1 };

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::prop1, PropertyId::prop2, PropertyId::prop3, PropertyId::prop4, PropertyId::prop5,
    PropertyId::prop6, PropertyId::prop7, PropertyId::prop8, PropertyId::lemma1};

std::string_view to_string(PropertyId id);
std::optional<PropertyId> property_from_name(std::string_view name);

struct Violation {
  std::string framework;  // APX serialization, replayable from the CLI
  std::string argument;
  std::string detail;
};

struct PropertyReport {
  PropertyId property = PropertyId::prop1;
  std::size_t checked_instances = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  void merge(const PropertyReport& other);
};

// Evaluates one property exhaustively over every argument of fw and every
// applicable semantics and strategy. Throws TooLarge above kMaxCheckedArgs.
PropertyReport check_property(const Framework& fw, PropertyId id);

nlohmann::ordered_json to_json(const PropertyReport& report);

}  // namespace argex::oracle
