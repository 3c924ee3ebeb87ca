#include <random>

#include "aut.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "pbes.hpp"
#include "support/fixtures.hpp"
#include "support/random_lts.hpp"

using namespace influence;

namespace {

const Lts& loop_lts() {
  static Lts lts = read_aut(fixtures::kLoopAut);
  return lts;
}

}  // namespace

TEST_CASE("expanding the loop head for x yields a TRUE leaf") {
  BesNode node = expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 0, "x"});
  CHECK(node.true_leaf);
  CHECK(node.stable);
  CHECK(node.value);
  // the two BOOL x steps also keep x's neededness flowing to both targets
  CHECK(node.deps == std::vector<BesNodeKey>{{IaTag::ia1, 1, "x"},
                                             {IaTag::ia1, 3, "x"}});
}

TEST_CASE("a deadlock state expands to the empty disjunction") {
  BesNode node = expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 4, "x"});
  CHECK_FALSE(node.true_leaf);
  CHECK(node.deps.empty());
  CHECK(node.stable);
  CHECK_FALSE(node.value);
}

TEST_CASE("a unary assignment to the tracked variable kills it") {
  Lts lts(2, 0, {{0, ActionLabel::assign("x"), 1}});
  BesNode node = expand(lts, IaVariant::ia1(), {IaTag::ia1, 0, "x"});
  CHECK_FALSE(node.true_leaf);
  CHECK(node.deps.empty());
  CHECK_FALSE(global_solve(lts, IaVariant::ia1()).at(0, "x"));
}

TEST_CASE("an assignment reading v feeds the target's variable") {
  // state 1's incoming label ASSIGN y x: for v=x, both Y_2(y) and Y_2(x)
  BesNode node = expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 1, "x"});
  CHECK_FALSE(node.true_leaf);
  CHECK(node.deps == std::vector<BesNodeKey>{{IaTag::ia1, 2, "x"},
                                             {IaTag::ia1, 2, "y"}});
  // for v=y the very same label is the kill: no deps at all
  BesNode killed = expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 1, "y"});
  CHECK_FALSE(killed.true_leaf);
  CHECK(killed.deps.empty());
}

TEST_CASE("assert labels only matter for the assert-aware variants") {
  Lts lts(2, 0, {{0, ActionLabel::assertion("x"), 1}});
  BesNode ia1 = expand(lts, IaVariant::ia1(), {IaTag::ia1, 0, "x"});
  CHECK_FALSE(ia1.true_leaf);
  CHECK(ia1.deps == std::vector<BesNodeKey>{{IaTag::ia1, 1, "x"}});

  BesNode ia2 = expand(lts, IaVariant::ia2(), {IaTag::ia2, 0, "x"});
  CHECK(ia2.true_leaf);
  BesNode ia3 = expand(lts, IaVariant::ia3(), {IaTag::ia3, 0, "x"});
  CHECK(ia3.true_leaf);
}

TEST_CASE("property-variable assignments are IA4 hits") {
  Lts lts(2, 0, {{0, ActionLabel::assign("w", "x"), 1}});
  IaVariant with = IaVariant::ia4({"w"});
  CHECK(expand(lts, with, {IaTag::ia4, 0, "x"}).true_leaf);

  IaVariant without = IaVariant::ia4({});
  CHECK_FALSE(expand(lts, without, {IaTag::ia4, 0, "x"}).true_leaf);
}

TEST_CASE("expand validates its key") {
  CHECK_THROWS_AS(expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 99, "x"}),
                  ArgumentError);
  CHECK_THROWS_AS(expand(loop_lts(), IaVariant::ia1(), {IaTag::ia1, 0, "q"}),
                  ArgumentError);
  CHECK_THROWS_AS(expand(loop_lts(), IaVariant::ia1(), {IaTag::ia2, 0, "x"}),
                  ArgumentError);
}

TEST_CASE("global solve of the loop system") {
  GlobalTable table = global_solve(loop_lts(), IaVariant::ia1());
  CHECK(table.at(0, "x"));
  CHECK(table.at(1, "x"));
  CHECK(table.at(2, "x"));
  CHECK_FALSE(table.at(3, "x"));
  CHECK_FALSE(table.at(4, "x"));
  for (StateId s = 0; s < 5; ++s) CHECK_FALSE(table.at(s, "y"));
}

TEST_CASE("no hit labels means an all-false table") {
  Lts lts(3, 0,
          {{0, ActionLabel::tau(), 1},
           {1, ActionLabel::assign("x", "y"), 2},
           {2, ActionLabel::tau(), 0}});
  for (const IaVariant& variant :
       {IaVariant::ia1(), IaVariant::ia2(), IaVariant::ia4({})}) {
    GlobalTable table = global_solve(lts, variant);
    for (StateId s = 0; s < 3; ++s)
      for (const auto& v : lts.var_universe()) CHECK_FALSE(table.at(s, v));
  }
}

TEST_CASE("expand is monotone under added transitions") {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    Lts lts = testgen::random_lts(rng);
    if (lts.var_universe().empty()) continue;

    // rebuild with one extra random transition
    std::vector<Lts::Transition> transitions;
    for (StateId s = 0; s < lts.state_count(); ++s)
      for (const auto& [label, to] : lts.successors(s))
        transitions.push_back({s, label, to});
    std::uniform_int_distribution<StateId> state_dist(0,
                                                      lts.state_count() - 1);
    transitions.push_back(
        {state_dist(rng), ActionLabel::boolean(lts.var_universe().front()),
         state_dist(rng)});
    Lts bigger(lts.state_count(), lts.initial(), transitions);

    IaVariant variant = IaVariant::ia2();
    std::uniform_int_distribution<std::size_t> var_dist(
        0, lts.var_universe().size() - 1);
    for (int k = 0; k < 10; ++k) {
      BesNodeKey key{variant.tag, state_dist(rng),
                     lts.var_universe()[var_dist(rng)]};
      BesNode before = expand(lts, variant, key);
      BesNode after = expand(bigger, variant, key);
      if (before.true_leaf) CHECK(after.true_leaf);
      CHECK(std::includes(after.deps.begin(), after.deps.end(),
                          before.deps.begin(), before.deps.end()));
    }
  }
}

TEST_CASE("variant expansions only grow relative to the base analysis") {
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    Lts lts = testgen::random_lts(rng);
    const auto& universe = lts.var_universe();
    if (universe.empty()) continue;
    IaVariant ia4 = IaVariant::ia4(testgen::random_property_vars(rng, universe));
    std::uniform_int_distribution<StateId> state_dist(0, lts.state_count() - 1);
    std::uniform_int_distribution<std::size_t> var_dist(0, universe.size() - 1);
    for (int k = 0; k < 10; ++k) {
      StateId s = state_dist(rng);
      const std::string& v = universe[var_dist(rng)];
      BesNode base = expand(lts, IaVariant::ia1(), {IaTag::ia1, s, v});
      BesNode assertful = expand(lts, IaVariant::ia2(), {IaTag::ia2, s, v});
      BesNode property = expand(lts, ia4, {IaTag::ia4, s, v});
      if (base.true_leaf) {
        CHECK(assertful.true_leaf);
        CHECK(property.true_leaf);
      }
    }
  }
}

TEST_CASE("property variables must belong to the model") {
  Lts lts(2, 0, {{0, ActionLabel::boolean("x"), 1}});
  CHECK_THROWS_AS(global_solve(lts, IaVariant::ia4({"nope"})), ArgumentError);
  CHECK_NOTHROW(global_solve(lts, IaVariant::ia4({"x"})));
}
