#include "minilang.hpp"

#include <cctype>
#include <set>

#include "errors.hpp"
#include "lts.hpp"

namespace influence {

namespace {

enum class Tok {
  identifier,
  number,
  punct,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1, col = 1;

  auto bump = [&] {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };

  while (pos < src.size()) {
    char c = src[pos];
    if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
      while (pos < src.size() && src[pos] != '\n') bump();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump();
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_'))
        bump();
      out.push_back({Tok::identifier, std::string(src.substr(start, pos - start)),
                     tl, tc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        bump();
      out.push_back({Tok::number, std::string(src.substr(start, pos - start)),
                     tl, tc});
      continue;
    }
    bool matched = false;
    for (std::string_view op : {"==", "!=", "<=", ">=", "&&", "||"}) {
      if (src.substr(pos).starts_with(op)) {
        out.push_back({Tok::punct, std::string(op), tl, tc});
        bump();
        bump();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string singles = "(){};:,=+-*/%<>!";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Tok::punct, std::string(1, c), tl, tc});
      bump();
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "int" || s == "if" || s == "else" || s == "while" ||
         s == "assert" || s == "skip" || s == "proc";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Program parse() {
    StmtList top_level;
    while (!at_end()) {
      if (is_ident("int")) {
        parse_decl();
      } else if (is_ident("proc")) {
        parse_proc();
      } else {
        top_level.push_back(parse_stmt(/*trailing_label_ok=*/true));
      }
    }
    if (!top_level.empty())
      program_.procedures.insert(program_.procedures.begin(),
                                 Procedure{"main", std::move(top_level)});
    return std::move(program_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = tokens_[index_];
    if (index_ + 1 < tokens_.size()) ++index_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::end; }

  bool is_ident(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::identifier && peek(ahead).text == word;
  }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::punct && peek(ahead).text == p;
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    next();
  }

  Token expect_identifier(const char* what) {
    if (peek().kind != Tok::identifier || is_keyword(peek().text))
      fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", got " + got, t.line, t.column);
  }

  void parse_decl() {
    next();  // int
    while (true) {
      Token name = expect_identifier("a variable name");
      if (!declared_.insert(name.text).second)
        throw ParseError("duplicate declaration of '" + name.text + "'",
                         name.line, name.column);
      program_.variables.push_back(name.text);
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(";");
  }

  void parse_proc() {
    next();  // proc
    Token name = expect_identifier("a procedure name");
    expect_punct("(");
    expect_punct(")");
    expect_punct("{");
    StmtList body = parse_block_body();
    program_.procedures.push_back(Procedure{name.text, std::move(body)});
  }

  StmtList parse_block_body() {
    StmtList body;
    while (!is_punct("}")) {
      if (at_end()) fail("expected '}'");
      if (is_ident("int")) {
        parse_decl();
        continue;
      }
      body.push_back(parse_stmt(/*trailing_label_ok=*/false));
    }
    next();  // }
    return body;
  }

  Stmt parse_stmt(bool trailing_label_ok) {
    Stmt stmt;
    stmt.line = peek().line;
    stmt.column = peek().column;

    // `NAME:` prefixes; a label standing right before '}' (or, at the top
    // level, before end of input) names the block's fall-through point.
    while (peek().kind == Tok::identifier && !is_keyword(peek().text) &&
           is_punct(":", 1)) {
      Token name = next();
      next();  // :
      register_label(name);
      bool trailing =
          is_punct("}") || (trailing_label_ok && at_end());
      if (trailing) {
        stmt.node = LabelStmt{name.text};
        return stmt;
      }
      stmt.labels.push_back(name.text);
    }

    if (is_ident("skip")) {
      next();
      expect_punct(";");
      stmt.node = SkipStmt{};
      return stmt;
    }
    if (is_punct(";")) {  // empty statement
      next();
      stmt.node = SkipStmt{};
      return stmt;
    }
    if (is_ident("assert")) {
      next();
      expect_punct("(");
      Expr e = parse_expr(Delim::paren);
      expect_punct(";");
      stmt.node = AssertStmt{std::move(e)};
      return stmt;
    }
    if (is_ident("if")) {
      next();
      expect_punct("(");
      Expr cond = parse_expr(Delim::paren);
      StmtList then_body = parse_branch();
      StmtList else_body;
      if (is_ident("else")) {
        next();
        else_body = parse_branch();
      }
      stmt.node =
          IfStmt{std::move(cond), std::move(then_body), std::move(else_body)};
      return stmt;
    }
    if (is_ident("while")) {
      next();
      expect_punct("(");
      Expr cond = parse_expr(Delim::paren);
      StmtList body = parse_branch();
      stmt.node = WhileStmt{std::move(cond), std::move(body)};
      return stmt;
    }
    if (peek().kind == Tok::identifier && !is_keyword(peek().text)) {
      Token target = next();
      expect_punct("=");
      Expr value = parse_expr(Delim::semicolon);
      expect_punct(";");
      use_var(target);
      stmt.node = AssignStmt{target.text, std::move(value)};
      return stmt;
    }
    fail("expected a statement");
  }

  StmtList parse_branch() {
    if (is_punct("{")) {
      next();
      return parse_block_body();
    }
    StmtList body;
    body.push_back(parse_stmt(/*trailing_label_ok=*/false));
    return body;
  }

  enum class Delim { paren, semicolon };

  // Only the source text and the set of used variables matter, so the
  // expression scanner tracks parenthesis depth instead of precedence.
  Expr parse_expr(Delim delim) {
    Expr e;
    std::set<std::string> vars;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::end) fail("unterminated expression");
      if (t.kind == Tok::punct) {
        if (delim == Delim::paren && t.text == ")" && depth == 0) {
          next();
          break;
        }
        if (delim == Delim::semicolon && t.text == ";" && depth == 0) break;
        if (t.text == "(") ++depth;
        else if (t.text == ")") {
          if (depth == 0) fail("unbalanced ')' in expression");
          --depth;
        } else if (t.text == ";" || t.text == "{" || t.text == "}" ||
                   t.text == ":" || t.text == ",") {
          fail("unexpected '" + t.text + "' in expression");
        }
      }
      if (t.kind == Tok::identifier) {
        if (is_keyword(t.text)) fail("unexpected keyword in expression");
        use_var(t);
        vars.insert(t.text);
      }
      if (!e.text.empty()) e.text += ' ';
      e.text += t.text;
      next();
    }
    if (e.text.empty()) fail("empty expression");
    e.vars.assign(vars.begin(), vars.end());
    return e;
  }

  void use_var(const Token& name) {
    if (!declared_.count(name.text))
      throw ParseError("undeclared variable '" + name.text + "'", name.line,
                       name.column);
  }

  void register_label(const Token& name) {
    if (!labels_.insert(name.text).second)
      throw ParseError("duplicate label '" + name.text + "'", name.line,
                       name.column);
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  Program program_;
  std::set<std::string> declared_;
  std::set<std::string> labels_;
};

}  // namespace

Program parse_program(std::string_view source) {
  return Parser(source).parse();
}

}  // namespace influence
