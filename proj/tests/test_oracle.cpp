#include <doctest.h>

#include <random>

#include "argex/errors.hpp"
#include "argex/io.hpp"
#include "argex/oracle.hpp"
#include "fixtures.hpp"

using namespace argex;
using namespace argex::oracle;
using fixtures::family;

TEST_CASE("random frameworks") {
  CHECK(random_framework({1, 0.0, false, 3}) == Framework({"a0"}, {}));

  const auto full = random_framework({3, 1.0, false, 9});
  CHECK(full.attack_count() == 6);
  for (ArgIndex a = 0; a < 3; ++a) CHECK_FALSE(full.self_attacking(a));
  CHECK(random_framework({3, 1.0, true, 9}).attack_count() == 9);
  CHECK(random_framework({4, 0.0, true, 1}).attack_count() == 0);

  const GeneratorConfig cfg{7, 0.3, false, 1234};
  CHECK(random_framework(cfg) == random_framework(cfg));
  CHECK_FALSE(random_framework(cfg) == random_framework({7, 0.3, false, 1235}));

  CHECK_THROWS_AS(random_framework({0, 0.5, false, 0}), InvalidConfig);
  CHECK_THROWS_AS(random_framework({11, 0.5, false, 0}), InvalidConfig);
  CHECK_THROWS_AS(random_framework({3, 1.5, false, 0}), InvalidConfig);
  CHECK_THROWS_AS(random_framework({3, -0.1, false, 0}), InvalidConfig);
}

TEST_CASE("generator matches its documented draw order") {
  const GeneratorConfig cfg{5, 0.4, true, 77};
  std::mt19937_64 rng(cfg.seed);
  std::vector<Attack> attacks;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < cfg.edge_prob)
        attacks.emplace_back("a" + std::to_string(i), "a" + std::to_string(j));
  CHECK(random_framework(cfg) == Framework({"a0", "a1", "a2", "a3", "a4"}, attacks));
}

TEST_CASE("corpus layout") {
  CorpusConfig cfg;
  cfg.count = 30;
  const auto corpus = random_corpus(cfg);
  REQUIRE(corpus.size() == 30);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto member = corpus_member_config(cfg, i);
    CHECK(member.n == 1 + i % 7);
    CHECK(member.edge_prob == cfg.edge_probs[(i / 7) % 3]);
    CHECK(member.seed == cfg.seed + i);
    CHECK(corpus[i] == random_framework(member));
  }
}

TEST_CASE("brute force extensions") {
  const auto fw = fixtures::af1();
  CHECK(brute_force_extensions(fw, SemanticsKind::preferred) ==
        family(fw, {{"A", "C", "E", "G"}, {"A", "C", "F"}, {"A", "D", "E", "G"}, {"B", "D", "F"}}));
  CHECK(brute_force_extensions(fw, SemanticsKind::grounded) == SetFamily{ArgSet{}});
  CHECK(brute_force_extensions(fixtures::cycle3(), SemanticsKind::complete) ==
        SetFamily{ArgSet{}});
  CHECK(brute_force_extensions(fixtures::cycle3(), SemanticsKind::stable).empty());

  std::vector<std::string> names;
  for (int i = 0; i < 11; ++i) names.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(brute_force_extensions(Framework(names, {}), SemanticsKind::admissible),
                  TooLarge);
}

TEST_CASE("property names") {
  for (auto id : kAllProperties) CHECK(property_from_name(to_string(id)) == id);
  CHECK_FALSE(property_from_name("prop9").has_value());
}

TEST_CASE("properties hold on the worked frameworks") {
  const Framework frameworks[] = {fixtures::af1(), fixtures::af2(), fixtures::cycle3()};
  for (const auto& fw : frameworks)
    for (auto id : kAllProperties) {
      CAPTURE(to_string(id));
      const auto report = check_property(fw, id);
      CHECK(report.ok());
      CHECK(report.property == id);
    }
  CHECK(check_property(fixtures::af1(), PropertyId::lemma1).checked_instances > 0);
  CHECK(check_property(fixtures::af1(), PropertyId::prop5).checked_instances > 0);
}

TEST_CASE("property checks reject large frameworks") {
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) names.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(check_property(Framework(names, {}), PropertyId::prop1), TooLarge);
}

TEST_CASE("violations are replayable") {
  // A self-attacking attacker is never relevant, so with self-attacks the
  // non-acceptance existence property can fail.
  const Framework fw({"a", "s"}, {{"s", "s"}, {"s", "a"}});
  const auto report = check_property(fw, PropertyId::prop5);
  REQUIRE_FALSE(report.ok());
  const auto& v = report.violations.front();
  CHECK(v.argument == "a");
  CHECK(parse_framework(v.framework, InputFormat::apx) == fw);

  const auto json = to_json(report);
  CHECK(json["property"] == "prop5");
  CHECK(json["checked_instances"] == report.checked_instances);
  CHECK(json["violations"][0]["argument"] == "a");
  CHECK(json["violations"][0].contains("framework"));
  CHECK(json["violations"][0].contains("detail"));
}

TEST_CASE("report merge") {
  PropertyReport a{PropertyId::prop2, 3, {}};
  PropertyReport b{PropertyId::prop2, 4, {{"arg(x).\n", "x", "d"}}};
  a.merge(b);
  CHECK(a.checked_instances == 7);
  CHECK(a.violations.size() == 1);
}
