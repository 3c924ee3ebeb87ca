#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace influence {

// Expressions are opaque to the analysis: only the set of variables read
// matters. `vars` is sorted and duplicate-free.
struct Expr {
  std::string text;
  std::vector<std::string> vars;
};

struct Stmt;
using StmtList = std::vector<Stmt>;

struct AssignStmt {
  std::string target;
  Expr value;
};
struct IfStmt {
  Expr cond;
  StmtList then_body;
  StmtList else_body;
};
struct WhileStmt {
  Expr cond;
  StmtList body;
};
struct AssertStmt {
  Expr cond;
};
struct SkipStmt {};
// A bare `NAME:` at the end of a block; it marks the point the block falls
// through to (for the last statement of a procedure: the exit point).
struct LabelStmt {
  std::string name;
};

struct Stmt {
  std::vector<std::string> labels;  // `NAME:` prefixes naming this point
  std::variant<AssignStmt, IfStmt, WhileStmt, AssertStmt, SkipStmt, LabelStmt>
      node;
  int line = 0;
  int column = 0;
};

struct Procedure {
  std::string name;
  StmtList body;
};

struct Program {
  std::vector<std::string> variables;  // declaration order
  std::vector<Procedure> procedures;
};

// Parses mini-language source text. Checks that every referenced variable is
// declared exactly once and that label names are unique. Throws ParseError
// with line/column on any violation.
Program parse_program(std::string_view source);

}  // namespace influence
