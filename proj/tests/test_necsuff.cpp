#include <doctest.h>

#include "argex/errors.hpp"
#include "argex/explain.hpp"
#include "argex/necsuff.hpp"
#include "argex/oracle.hpp"
#include "fixtures.hpp"

using namespace argex;
using fixtures::family;
using fixtures::set;

namespace {

const auto kAcc = QueryMode::acceptance;
const auto kNonAcc = QueryMode::non_acceptance;
const auto kSetOrder = MinimalityOrder::set_inclusion;
const auto kCard = MinimalityOrder::cardinality;

AttackPath path(const Framework& fw, std::vector<std::string> names) {
  AttackPath p;
  for (const auto& n : names) p.nodes.push_back(fw.index_of(n));
  return p;
}

SetFamily restricted(const SetFamily& f, const ArgSet& universe) {
  SetFamily out;
  for (const auto& s : f)
    if (is_subset(s, universe)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("sufficiency for acceptance") {
  const auto fw = fixtures::af1();
  const ArgIndex A = fw.index_of("A"), B = fw.index_of("B"), E = fw.index_of("E");
  CHECK(is_sufficient_acc(fw, set(fw, {"C"}), A));
  CHECK(is_sufficient_acc(fw, set(fw, {"E"}), A));
  CHECK_FALSE(is_sufficient_acc(fw, set(fw, {"E"}), A, true));
  CHECK(is_sufficient_acc(fw, set(fw, {"E", "G"}), A, true));
  CHECK(is_sufficient_acc(fw, set(fw, {"C"}), A, true));
  CHECK(is_sufficient_acc(fw, set(fw, {"G"}), E));
  CHECK_FALSE(is_sufficient_acc(fw, {}, A));
  CHECK_FALSE(is_sufficient_acc(fw, set(fw, {"C", "D"}), A));
  CHECK_FALSE(is_sufficient_acc(fw, set(fw, {"A", "C"}), A));
  CHECK_FALSE(is_sufficient_acc(fw, set(fw, {"D"}), B));

  const auto af2 = fixtures::af2();
  CHECK(is_sufficient_acc(af2, set(af2, {"A"}), af2.index_of("B")));
  CHECK_THROWS_AS(is_sufficient_acc(fw, {20}, A), UnknownArgument);
}

TEST_CASE("sufficient families for acceptance") {
  const auto fw = fixtures::af1();
  // B is not relevant for itself, so {B,D,F} cannot qualify.
  CHECK(sufficient_sets_acc(fw, fw.index_of("B")) == family(fw, {{"D", "F"}}));
  CHECK(sufficient_sets_acc(fw, fw.index_of("E")) == family(fw, {{"G"}}));
  CHECK(sufficient_sets_acc(Framework({"X"}, {}), 0).empty());

  const auto af2 = fixtures::af2();
  CHECK(family_contains(sufficient_sets_acc(af2, af2.index_of("D")), set(af2, {"C"})));
  CHECK(sufficient_sets_acc(af2, af2.index_of("B")) == family(af2, {{"A"}, {"A", "B"}}));

  SUBCASE("subset cap") {
    NecSuffOptions options;
    options.subset_cap = 3;
    CHECK_THROWS_AS(sufficient_sets_acc(fw, fw.index_of("A"), false, options), TooLarge);
    CHECK_NOTHROW(sufficient_sets_acc(fw, fw.index_of("E"), false, options));
  }
}

TEST_CASE("necessity for acceptance") {
  const auto fw = fixtures::af1();
  auto nec = [&](const char* b, const char* a) {
    return is_necessary_acc(fw, fw.index_of(b), fw.index_of(a));
  };
  CHECK(nec("G", "E"));
  CHECK_FALSE(nec("C", "A"));
  CHECK_FALSE(nec("E", "A"));
  CHECK(nec("D", "B"));
  CHECK(nec("F", "B"));
  CHECK_FALSE(nec("A", "A"));
  CHECK(necessary_args_acc(fw, fw.index_of("B")) == set(fw, {"D", "F"}));
  CHECK(necessary_args_acc(fw, fw.index_of("A")).empty());
  CHECK(necessary_args_acc(fw, fw.index_of("E")) == set(fw, {"G"}));
  CHECK(necessary_args_acc(Framework({"X", "Y"}, {{"Y", "Y"}}), 0).empty());
}

TEST_CASE("classify_attack") {
  const auto fw = fixtures::af1();
  auto r = classify_attack(fw, path(fw, {"G", "F", "E", "B"}));
  CHECK_FALSE(r.contested);
  CHECK(r.points.empty());

  r = classify_attack(fw, path(fw, {"D", "C", "B", "A"}));
  CHECK(r.contested);
  CHECK(r.points == std::vector<ContestPoint>{{fw.index_of("B"), set(fw, {"E"})}});

  r = classify_attack(fw, path(fw, {"F", "E", "B", "A"}));
  CHECK(r.contested);
  CHECK(r.points == std::vector<ContestPoint>{{fw.index_of("B"), set(fw, {"C"})}});

  CHECK_FALSE(classify_attack(fw, path(fw, {"B", "A"})).contested);

  CHECK_THROWS_AS(classify_attack(fw, path(fw, {"C", "B", "A"})), InvalidPath);
  CHECK_THROWS_AS(classify_attack(fw, path(fw, {"A", "B"})), InvalidPath);
  CHECK_THROWS_AS(classify_attack(fw, path(fw, {"A"})), InvalidPath);
  CHECK_THROWS_AS(classify_attack(fw, AttackPath{}), InvalidPath);
  CHECK_THROWS_AS(classify_attack(fw, path(fw, {"C", "D", "C", "B"})), InvalidPath);

  SUBCASE("contest points only at even positions") {
    // a -> b -> c -> d with an outsider attacking b (odd position) and c.
    const Framework g({"a", "b", "c", "d", "o"},
                      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"o", "b"}, {"o", "c"}});
    const auto report = classify_attack(g, path(g, {"a", "b", "c", "d"}));
    CHECK(report.points == std::vector<ContestPoint>{{g.index_of("c"), g.set_of({"o"})}});
  }
}

TEST_CASE("sufficiency for non-acceptance") {
  const auto fw = fixtures::af1();
  const ArgIndex A = fw.index_of("A"), B = fw.index_of("B");
  CHECK(is_sufficient_nonacc(fw, set(fw, {"B"}), A));
  CHECK(is_sufficient_nonacc(fw, set(fw, {"D", "F"}), A));
  CHECK_FALSE(is_sufficient_nonacc(fw, set(fw, {"D"}), A));
  CHECK_FALSE(is_sufficient_nonacc(fw, set(fw, {"F"}), A));
  for (const char* x : {"C", "E", "G"}) CHECK(is_sufficient_nonacc(fw, set(fw, {x}), B));
  CHECK_FALSE(is_sufficient_nonacc(fw, {}, B));
  CHECK_FALSE(is_sufficient_nonacc(fw, set(fw, {"A", "C"}), B));

  const Framework selfish({"X", "Y"}, {{"X", "X"}, {"Y", "X"}});
  CHECK_THROWS_AS(is_sufficient_nonacc(selfish, {1}, 0), SelfAttacker);
  CHECK_THROWS_AS(sufficient_sets_nonacc(selfish, 0), SelfAttacker);

  SUBCASE("recursion terminates on cycles") {
    const auto c = fixtures::cycle3();
    CHECK(is_sufficient_nonacc(c, {2}, 0));
    // B reaches A only along the even simple path B, C, A.
    CHECK_FALSE(is_sufficient_nonacc(c, {1}, 0));
    CHECK(sufficient_sets_nonacc(c, 0) == SetFamily{{2}, {0, 2}, {1, 2}, {0, 1, 2}});
  }
}

TEST_CASE("sufficient families for non-acceptance") {
  const auto fw = fixtures::af1();
  const auto suff = sufficient_sets_nonacc(fw, fw.index_of("B"));
  CHECK(restricted(suff, set(fw, {"C", "E", "G"})) ==
        family(fw, {{"C"}, {"E"}, {"G"}, {"C", "E"}, {"C", "G"}, {"E", "G"}, {"C", "E", "G"}}));
  CHECK(family_contains(suff, set(fw, {"C", "D", "E", "G"})));
  CHECK(suff.size() > 7);
  CHECK(sufficient_sets_nonacc(Framework({"X"}, {}), 0).empty());
}

TEST_CASE("necessity for non-acceptance") {
  const auto fw = fixtures::af1();
  const auto prf = SemanticsKind::preferred;
  const auto skep = Strategy::skeptical;
  auto nec = [&](const char* b, const char* a) {
    return is_necessary_nonacc(fw, fw.index_of(b), fw.index_of(a), prf, skep);
  };
  CHECK(nec("B", "A"));
  CHECK_FALSE(nec("C", "B"));
  CHECK_FALSE(nec("G", "B"));
  CHECK_FALSE(nec("A", "A"));
  CHECK(necessary_args_nonacc(fw, fw.index_of("B"), prf, skep).empty());
  // Removing D frees C, removing F frees E and G; each restores A.
  CHECK(necessary_args_nonacc(fw, fw.index_of("A"), prf, skep) == set(fw, {"B", "D", "F"}));

  const Framework single({"x", "y"}, {{"x", "y"}});
  CHECK(necessary_args_nonacc(single, 1, prf, skep) == ArgSet{0});

  // Without c the remaining 3-cycle has no stable extension.
  const Framework odd({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"d", "a"}, {"c", "a"}});
  CHECK_THROWS_AS(is_necessary_nonacc(odd, odd.index_of("c"), odd.index_of("a"),
                                      SemanticsKind::stable, skep),
                  NoExtensions);

  SUBCASE("a is never necessary for its own non-acceptance") {
    const auto c = fixtures::cycle3();
    CHECK_FALSE(is_necessary_nonacc(c, 0, 0, prf, skep));
  }
}

TEST_CASE("minimal sets") {
  const SetFamily f{{0}, {1, 2}, {0, 1}, {3, 4}, {1, 2, 3}};
  CHECK(minimal_sets(f, kSetOrder) == SetFamily{{0}, {1, 2}, {3, 4}});
  CHECK(minimal_sets(f, kCard) == SetFamily{{0}});
  CHECK(minimal_sets({}, kCard).empty());
  CHECK(minimal_sets({}, kSetOrder).empty());
}

TEST_CASE("minimally sufficient sets") {
  const auto af2 = fixtures::af2();
  auto id = [&](const char* x) { return af2.index_of(x); };
  CHECK(minimal_sufficient_sets(af2, id("B"), {kAcc}, kSetOrder) == family(af2, {{"A"}}));
  CHECK(minimal_sufficient_sets(af2, id("D"), {kAcc}, kSetOrder) == family(af2, {{"C"}}));
  CHECK(minimal_sufficient_sets(af2, id("D"), {kNonAcc}, kSetOrder) ==
        family(af2, {{"A"}, {"B"}}));
  // {D} qualifies too: it attacks B directly.
  CHECK(minimal_sufficient_sets(af2, id("B"), {kNonAcc}, kSetOrder) ==
        family(af2, {{"C"}, {"D"}}));

  const auto fw = fixtures::af1();
  CHECK(minimal_sufficient_sets(fw, fw.index_of("A"), {kAcc}, kCard) ==
        family(fw, {{"C"}, {"E"}}));
  CHECK(minimal_sufficient_sets(fw, fw.index_of("A"), {kAcc, true}, kSetOrder) ==
        family(fw, {{"C"}, {"E", "G"}}));
}

TEST_CASE("non-acceptance sufficiency is monotone") {
  oracle::CorpusConfig cfg;
  cfg.count = 150;
  cfg.max_n = 6;
  cfg.seed = 8;
  for (const auto& fw : oracle::random_corpus(cfg))
    for (ArgIndex a = 0; a < fw.size(); ++a) {
      const ArgSet rel = relevant_args(fw, a);
      const auto suff = sufficient_sets_nonacc(fw, a);
      for (const auto& s : suff)
        for (ArgIndex x : rel) {
          ArgSet bigger = s;
          bigger.insert(x);
          CHECK(family_contains(suff, bigger));
        }
    }
}

TEST_CASE("readings that the property suite relies on") {
  SUBCASE("literal sufficiency does not imply admissibility") {
    const auto fw = fixtures::af1();
    const ArgSet e = set(fw, {"E"});
    CHECK(is_sufficient_acc(fw, e, fw.index_of("A")));
    CHECK_FALSE(check_set(fw, e, SetProperty::admissible));
  }
  SUBCASE("necessity is not bounded by literal sufficient sets") {
    const Framework chain({"a", "w", "x", "y", "z"},
                          {{"w", "z"}, {"z", "y"}, {"y", "x"}, {"x", "a"}});
    const ArgIndex a = chain.index_of("a");
    CHECK(necessary_args_acc(chain, a) == chain.set_of({"w", "y"}));
    CHECK(family_contains(sufficient_sets_acc(chain, a), chain.set_of({"y"})));
    CHECK(sufficient_sets_acc(chain, a, true) == family(chain, {{"w", "y"}}));
  }
  SUBCASE("an argument on a cycle is necessary for itself") {
    const Framework g({"a", "u", "x", "y"}, {{"x", "a"}, {"y", "x"}, {"a", "u"}, {"u", "x"}});
    const ArgIndex a = g.index_of("a");
    CHECK(necessary_args_acc(g, a) == g.set_of({"a", "y"}));
    CHECK(sufficient_sets_acc(g, a, true) == family(g, {{"y"}, {"a", "y"}}));
  }
  SUBCASE("self necessity alone with no common sufficient member") {
    const Framework g({"a", "u", "x", "y1", "y2"},
                      {{"x", "a"}, {"y1", "x"}, {"y2", "x"}, {"a", "u"}, {"u", "x"}});
    const ArgIndex a = g.index_of("a");
    CHECK(necessary_args_acc(g, a) == g.set_of({"a"}));
    CHECK(intersect_all(sufficient_sets_acc(g, a, true)).empty());
  }
  SUBCASE("a self-defending argument explains itself more cheaply") {
    const Framework g({"a0", "a1", "a2"}, {{"a0", "a1"}, {"a1", "a0"}, {"a2", "a1"}});
    const ArgIndex a = g.index_of("a0");
    CHECK(minimal_sufficient_sets(g, a, {kAcc, true}, kSetOrder) == family(g, {{"a0"}, {"a2"}}));
    CHECK(minimal_explanation(g, SemanticsKind::admissible, Strategy::credulous, a,
                              DepthKind::def_by, kSetOrder, kAcc) == family(g, {{"a0"}}));
  }
  SUBCASE("credulous non-acceptance necessity escapes the common NotDef") {
    // Every complete extension attacks a1 or omits it from NotDef, yet
    // without a1 the new extension {a0} makes a0 credulously accepted.
    const Framework g({"a0", "a1", "a2"},
                      {{"a0", "a2"}, {"a1", "a0"}, {"a2", "a0"}, {"a2", "a1"}});
    const ArgIndex a = g.index_of("a0");
    const auto cmp = SemanticsKind::complete;
    const auto exts = enumerate_extensions(g, cmp);
    CHECK(exts == family(g, {{}, {"a2"}}));
    SetFamily not_defs;
    for (const auto& e : exts) not_defs.push_back(not_def(g, a, e));
    CHECK(intersect_all(not_defs) == g.set_of({"a2"}));
    CHECK(necessary_args_nonacc(g, a, cmp, Strategy::credulous) == g.set_of({"a1"}));
    CHECK(is_subset(necessary_args_nonacc(g, a, cmp, Strategy::skeptical),
                    intersect_all(not_defs)));
  }
}
