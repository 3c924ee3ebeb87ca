#include "aut.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace influence {

namespace {

// Minimal line-oriented scanner with position tracking for error messages.
class Cursor {
 public:
  Cursor(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= line_.size() ||
        !std::isdigit(static_cast<unsigned char>(line_[pos_])))
      fail("expected a number");
    std::uint64_t value = 0;
    while (pos_ < line_.size() &&
           std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(line_[pos_] - '0');
      if (value > 0xFFFFFFFFull) fail("number out of range");
      ++pos_;
    }
    return value;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size()) {
      char c = line_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ')')
        break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a label token");
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string quoted() {
    // opening quote already consumed
    std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != '"') ++pos_;
    if (pos_ >= line_.size()) fail("unterminated quoted label");
    std::string body(line_.substr(start, pos_ - start));
    ++pos_;
    return body;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("aut: " + what, line_no_, static_cast<int>(pos_) + 1);
  }

 private:
  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_tokens(std::string_view body) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() &&
           std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    std::size_t start = i;
    while (i < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    if (i > start) tokens.emplace_back(body.substr(start, i - start));
  }
  return tokens;
}

ActionLabel parse_label_body(const std::string& body, Cursor& cur) {
  auto tokens = split_tokens(body);
  auto bad = [&]() -> void {
    cur.fail("unrecognized label \"" + body + "\"");
  };
  if (tokens.empty()) bad();
  const std::string& head = tokens[0];
  if (head == "i" && tokens.size() == 1) return ActionLabel::tau();
  if (head == "BOOL" || head == "ASSERT") {
    if (tokens.size() != 2 || !is_valid_var_name(tokens[1])) bad();
    return head == "BOOL" ? ActionLabel::boolean(tokens[1])
                          : ActionLabel::assertion(tokens[1]);
  }
  if (head == "ASSIGN") {
    if (tokens.size() == 2 && is_valid_var_name(tokens[1]))
      return ActionLabel::assign(tokens[1]);
    if (tokens.size() == 3 && is_valid_var_name(tokens[1]) &&
        is_valid_var_name(tokens[2]))
      return ActionLabel::assign(tokens[1], tokens[2]);
    bad();
  }
  bad();
  return ActionLabel::tau();  // unreachable
}

ActionLabel parse_label(Cursor& cur) {
  if (cur.try_consume('"')) {
    std::string body = cur.quoted();
    return parse_label_body(body, cur);
  }
  std::string token = cur.word();
  if (token == "i") return ActionLabel::tau();
  cur.fail("unrecognized label token '" + token + "' (tau must be `i`)");
}

}  // namespace

Lts read_aut(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  std::optional<std::uint64_t> initial, trans_count, state_count;
  std::vector<Lts::Transition> transitions;
  bool header_seen = false;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    std::string_view raw = lines[idx];
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Cursor cur(raw, static_cast<int>(idx) + 1);
    if (cur.at_end()) continue;

    if (!header_seen) {
      for (char c : {'d', 'e', 's'}) cur.expect(c);
      cur.expect('(');
      initial = cur.number();
      cur.expect(',');
      trans_count = cur.number();
      cur.expect(',');
      state_count = cur.number();
      cur.expect(')');
      if (!cur.at_end()) cur.fail("trailing characters after header");
      header_seen = true;
      continue;
    }

    cur.expect('(');
    std::uint64_t from = cur.number();
    cur.expect(',');
    ActionLabel label = parse_label(cur);
    cur.expect(',');
    std::uint64_t to = cur.number();
    cur.expect(')');
    if (!cur.at_end()) cur.fail("trailing characters after transition");
    if (from >= *state_count || to >= *state_count)
      cur.fail("transition endpoint outside the declared state range");
    transitions.push_back({static_cast<StateId>(from), std::move(label),
                           static_cast<StateId>(to)});
  }

  if (!header_seen) throw ParseError("aut: missing `des (...)` header", 1, 1);
  if (transitions.size() != *trans_count)
    throw ParseError("aut: header declares " + std::to_string(*trans_count) +
                         " transitions but the file contains " +
                         std::to_string(transitions.size()),
                     1, 1);
  if (*state_count == 0)
    throw ParseError("aut: state count must be positive", 1, 1);
  if (*initial >= *state_count)
    throw ParseError("aut: initial state outside the declared state range", 1,
                     1);

  return Lts(static_cast<std::uint32_t>(*state_count),
             static_cast<StateId>(*initial), std::move(transitions));
}

std::string write_aut(const Lts& lts) {
  std::ostringstream out;
  out << "des (" << lts.initial() << ", " << lts.transition_count() << ", "
      << lts.state_count() << ")\n";
  for (StateId s = 0; s < lts.state_count(); ++s)
    for (const auto& [label, to] : lts.successors(s))
      out << "(" << s << ", " << label.aut_token() << ", " << to << ")\n";
  return out.str();
}

}  // namespace influence
