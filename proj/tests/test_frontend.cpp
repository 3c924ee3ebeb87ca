#include <algorithm>

#include "aut.hpp"
#include "cfg.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "minilang.hpp"
#include "support/fixtures.hpp"

using namespace influence;

namespace {

// Order-insensitive edge comparison for hand-built CFG expectations.
bool same_edges(std::vector<CfgEdge> got, std::vector<CfgEdge> want) {
  auto key = [](const CfgEdge& e) {
    return std::tuple(e.from, e.to, static_cast<int>(e.action.kind),
                      e.action.target.value_or(""), e.action.vars);
  };
  auto less = [&](const CfgEdge& a, const CfgEdge& b) {
    return key(a) < key(b);
  };
  std::sort(got.begin(), got.end(), less);
  std::sort(want.begin(), want.end(), less);
  return got == want;
}

}  // namespace

TEST_CASE("the loop program parses with its variables and labels") {
  Program p = parse_program(fixtures::kP1Source);
  CHECK(p.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(p.procedures.size() == 1);

  Cfg cfg = build_cfg(p);
  REQUIRE(cfg.label_points.size() == 5);
  CHECK(cfg.label_points.at("L0") == 0);
  CHECK(cfg.label_points.at("L1") == 1);
  CHECK(cfg.label_points.at("L2") == 2);
  CHECK(cfg.label_points.at("L3") == 3);
  CHECK(cfg.label_points.at("L4") == 4);
}

TEST_CASE("the loop program has the expected five-node graph") {
  Cfg cfg = build_cfg(parse_program(fixtures::kP1Source));
  CHECK(cfg.node_count == 5);
  CHECK(cfg.entry == 0);
  CHECK(same_edges(
      cfg.edges,
      {
          {0, {RawKind::boolean, {}, {"x"}}, 1},   // into the body
          {0, {RawKind::boolean, {}, {"x"}}, 3},   // loop exit
          {1, {RawKind::assign, "y", {"x"}}, 2},
          {2, {RawKind::tau, {}, {}}, 0},          // back edge
          {3, {RawKind::assign, "y", {}}, 4},
      }));
}

TEST_CASE("its extracted system matches the canonical aut fixture") {
  CHECK(extract_lts(fixtures::kP1Source) == read_aut(fixtures::kLoopAut));
}

TEST_CASE("a single constant assignment") {
  Program p = parse_program("int x; L0: x = 0;");
  REQUIRE(p.procedures.size() == 1);
  REQUIRE(p.procedures[0].body.size() == 1);
  const Stmt& stmt = p.procedures[0].body[0];
  REQUIRE(std::holds_alternative<AssignStmt>(stmt.node));
  const auto& assign = std::get<AssignStmt>(stmt.node);
  CHECK(assign.target == "x");
  CHECK(assign.value.vars.empty());
  CHECK(stmt.labels == std::vector<std::string>{"L0"});

  // constant assignment keeps the old value dead: unary ASSIGN label
  Lts lts = extract_lts("int x; L0: x = 0;");
  CHECK(lts.state_count() == 2);
  REQUIRE(lts.transition_count() == 1);
  CHECK(lts.successors(0)[0].first == ActionLabel::assign("x"));
}

TEST_CASE("undeclared and duplicate names are rejected with positions") {
  CHECK_THROWS_AS(parse_program("int x; L0: x = z;"), ParseError);
  try {
    parse_program("int x;\nL0: x = z;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_program("int x; int x;"), ParseError);
  CHECK_THROWS_AS(parse_program("int x; L0: x = 1; L0: x = 2;"), ParseError);
  CHECK_THROWS_AS(parse_program("int x; z = 1;"), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_program("int x;\nx = ;\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
  }
  CHECK_THROWS_AS(parse_program("int x; if x > 0 { skip; }"), ParseError);
  CHECK_THROWS_AS(parse_program("int x; while (x > 0 { skip; }"), ParseError);
  CHECK_THROWS_AS(parse_program("int x; x = 1"), ParseError);
  CHECK_THROWS_AS(parse_program("@"), ParseError);
}

TEST_CASE("a lone skip yields one tau edge") {
  Cfg cfg = build_cfg(parse_program("L0: skip;"));
  CHECK(cfg.node_count == 2);
  CHECK(same_edges(cfg.edges, {{0, {RawKind::tau, {}, {}}, 1}}));
}

TEST_CASE("while loop builds the three-node cycle") {
  Cfg cfg = build_cfg(parse_program("int x; while (x > 0) { x = x - 1; }"));
  CHECK(cfg.node_count == 3);
  CHECK(same_edges(cfg.edges,
                   {
                       {0, {RawKind::boolean, {}, {"x"}}, 1},
                       {0, {RawKind::boolean, {}, {"x"}}, 2},
                       {1, {RawKind::assign, "x", {"x"}}, 0},
                   }));

  // the self-update keeps a binary self-assignment label after splitting
  Lts lts = cfg_to_lts(cfg);
  bool found = false;
  for (const auto& [label, to] : lts.successors(1))
    found |= label == ActionLabel::assign("x", "x") && to == 0;
  CHECK(found);
}

TEST_CASE("if materializes both branch edges") {
  Cfg cfg = build_cfg(
      parse_program("int a, b; if (a == b) { a = 1; } else { b = 2; }"));
  // nodes: 0 if, 1 then-assign, 2 else-assign, 3 exit
  CHECK(cfg.node_count == 4);
  CHECK(same_edges(cfg.edges,
                   {
                       {0, {RawKind::boolean, {}, {"a", "b"}}, 1},
                       {0, {RawKind::boolean, {}, {"a", "b"}}, 2},
                       {1, {RawKind::assign, "a", {}}, 3},
                       {2, {RawKind::assign, "b", {}}, 3},
                   }));
}

TEST_CASE("if without else branches to the continuation") {
  Cfg cfg = build_cfg(parse_program("int a; if (a) { a = 1; } a = 2;"));
  // nodes: 0 if, 1 then-assign, 2 tail assign, 3 exit
  CHECK(same_edges(cfg.edges,
                   {
                       {0, {RawKind::boolean, {}, {"a"}}, 1},
                       {0, {RawKind::boolean, {}, {"a"}}, 2},
                       {1, {RawKind::assign, "a", {}}, 2},
                       {2, {RawKind::assign, "a", {}}, 3},
                   }));
}

TEST_CASE("condition splitting emits one transition per variable") {
  Lts lts = extract_lts("int a, b, c; if (a + b > c) { skip; } else { skip; }");
  auto succs = lts.successors(0);
  // three variables, two branch targets
  REQUIRE(succs.size() == 6);
  for (const auto& v : {"a", "b", "c"}) {
    int hits = 0;
    for (const auto& [label, to] : succs)
      hits += label == ActionLabel::boolean(v);
    CHECK(hits == 2);
  }
}

TEST_CASE("assert statements carry their variables") {
  Lts lts = extract_lts("int a, b; assert(a < b);");
  auto succs = lts.successors(0);
  REQUIRE(succs.size() == 2);
  CHECK(succs[0].first == ActionLabel::assertion("a"));
  CHECK(succs[1].first == ActionLabel::assertion("b"));
}

TEST_CASE("constant conditions become tau branches") {
  Lts lts = extract_lts("while (1) { skip; }");
  auto succs = lts.successors(0);
  REQUIRE(succs.size() == 2);  // body and exit collapse to tau steps
  CHECK(succs[0].first == ActionLabel::tau());
  CHECK(succs[1].first == ActionLabel::tau());
}

TEST_CASE("explicit procedures parse and multiple ones are rejected") {
  Program p = parse_program("int x; proc p1() { L0: x = 1; }");
  REQUIRE(p.procedures.size() == 1);
  CHECK(p.procedures[0].name == "p1");
  CHECK_NOTHROW(build_cfg(p));

  Program two = parse_program("int x; proc a() { x = 1; } proc b() { x = 2; }");
  CHECK_THROWS_AS(build_cfg(two), ArgumentError);
  CHECK_THROWS_AS(build_cfg(parse_program("int x;")), ArgumentError);
}

TEST_CASE("trailing labels inside blocks name the continuation point") {
  // L9 marks the loop head (fall-through of the body)
  Cfg cfg = build_cfg(parse_program("int x; while (x) { x = x - 1; L9: }"));
  CHECK(cfg.label_points.at("L9") == 0);

  // comments and extra whitespace are fine anywhere
  Lts lts = extract_lts("int x; // comment\nL0: skip; // trailing\n");
  CHECK(lts.state_count() == 2);
}

TEST_CASE("extraction preserves reachability of graph nodes") {
  Program p = parse_program(fixtures::kP1Source);
  Cfg cfg = build_cfg(p);
  Lts lts = cfg_to_lts(cfg);
  REQUIRE(lts.state_count() == cfg.node_count);
  auto reach = lts.reachable();
  CHECK(std::count(reach.begin(), reach.end(), true) == 5);
}
