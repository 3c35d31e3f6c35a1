#include "liesym/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>

namespace liesym {

namespace {

std::string format_error(int line, int column, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected one of:";
    for (const auto& e : expected) out += " " + e;
    out += ")";
  }
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end, bad };

struct Token {
  Tok kind;
  std::string_view text;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, int column0) : text_(text), column0_(column0) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const int col = column0_ + static_cast<int>(pos_);
    if (pos_ >= text_.size()) return {Tok::end, {}, col};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return {Tok::number, text_.substr(start, pos_ - start), col};
    }
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return {Tok::name, text_.substr(start, pos_ - start), col};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::plus, text_.substr(start, 1), col};
      case '-': return {Tok::minus, text_.substr(start, 1), col};
      case '*': return {Tok::star, text_.substr(start, 1), col};
      case '/': return {Tok::slash, text_.substr(start, 1), col};
      case '^': return {Tok::caret, text_.substr(start, 1), col};
      case '(': return {Tok::lparen, text_.substr(start, 1), col};
      case ')': return {Tok::rparen, text_.substr(start, 1), col};
      default: return {Tok::bad, text_.substr(start, 1), col};
    }
  }

 private:
  std::string_view text_;
  int column0_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars, int line, int column)
      : lex_(text, column), vars_(vars), line_(line) {
    advance();
  }

  Poly parse() {
    Poly p = expr();
    if (cur_.kind != Tok::end) fail("unexpected '" + std::string(cur_.text) + "'", {"+", "-", "*", "/", "^", "end of line"});
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 1000;

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(line_, cur_.column, msg, std::move(expected));
  }

  void advance() { cur_ = lex_.next(); }

  std::string describe() const {
    if (cur_.kind == Tok::end) return "end of line";
    return "'" + std::string(cur_.text) + "'";
  }

  Poly expr() {
    Poly acc = term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const bool minus = cur_.kind == Tok::minus;
      advance();
      Poly rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
      const bool divide = cur_.kind == Tok::slash;
      advance();
      const Token at = cur_;
      Poly rhs = unary();
      if (divide) {
        if (!rhs.is_constant() || rhs.is_zero())
          throw ParseError(line_, at.column, "division is only allowed by a nonzero constant");
        acc *= Rational(1) / rhs.constant_term();
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  Poly unary() {
    if (cur_.kind == Tok::minus) {
      advance();
      return -unary();
    }
    if (cur_.kind == Tok::plus) {
      advance();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (cur_.kind == Tok::caret) {
      advance();
      if (cur_.kind != Tok::number) fail("exponent must be a nonnegative integer, got " + describe(), {"integer"});
      if (cur_.text.size() > 4 || std::stoul(std::string(cur_.text)) > kMaxExponent)
        fail("exponent too large (limit " + std::to_string(kMaxExponent) + ")");
      const auto e = static_cast<unsigned>(std::stoul(std::string(cur_.text)));
      advance();
      if (cur_.kind == Tok::caret) fail("chained '^' is ambiguous; use parentheses");
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    const std::size_t n = vars_.size();
    switch (cur_.kind) {
      case Tok::number: {
        mpz_class z(std::string(cur_.text), 10);
        advance();
        return Poly(n, Rational(z));
      }
      case Tok::name: {
        auto it = std::find(vars_.begin(), vars_.end(), cur_.text);
        if (it == vars_.end()) fail("undeclared variable '" + std::string(cur_.text) + "'");
        advance();
        return Poly::variable(n, static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        advance();
        Poly inner = expr();
        if (cur_.kind != Tok::rparen) fail("expected ')', got " + describe(), {")", "+", "-", "*", "/", "^"});
        advance();
        return inner;
      }
      case Tok::bad:
        fail("invalid character '" + std::string(cur_.text) + "'");
      default:
        fail("expected an operand, got " + describe(), {"integer", "variable", "(", "-"});
    }
  }

  Lexer lex_;
  const std::vector<std::string>& vars_;
  int line_;
  Token cur_{Tok::end, {}, 0};
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const std::unordered_set<std::string_view> kKeywords{"vars", "field", "poly", "weights"};

struct Line {
  int number;
  std::string_view raw;      // without comment
  std::string_view content;  // trimmed
  int column;                // 1-based column of content
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view content = trim(raw);
    const int column = content.empty() ? 1 : static_cast<int>(content.data() - raw.data()) + 1;
    lines.push_back({number, raw, content, column});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// Splits "keyword NAME:" / "keyword NAME: rest" headers.
struct Header {
  std::string keyword;
  std::string name;
  std::string_view rest;
  int name_column;
  int rest_column;
};

std::optional<Header> read_header(const Line& line) {
  std::string_view s = line.content;
  std::size_t i = 0;
  while (i < s.size() && is_ident_char(s[i])) ++i;
  std::string_view kw = s.substr(0, i);
  if (!kKeywords.contains(kw)) return std::nullopt;
  Header h{std::string(kw), {}, {}, 0, 0};
  if (kw == "vars") {
    std::size_t j = i;
    while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j >= s.size() || s[j] != ':') throw ParseError(line.number, line.column + static_cast<int>(j), "expected ':' after 'vars'", {":"});
    h.rest = s.substr(j + 1);
    h.rest_column = line.column + static_cast<int>(j) + 1;
    return h;
  }
  std::size_t j = i;
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  const std::size_t name_start = j;
  if (j >= s.size() || !is_ident_start(s[j]))
    throw ParseError(line.number, line.column + static_cast<int>(j), "expected a name after '" + h.keyword + "'", {"name"});
  while (j < s.size() && is_ident_char(s[j])) ++j;
  h.name = std::string(s.substr(name_start, j - name_start));
  h.name_column = line.column + static_cast<int>(name_start);
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  if (j >= s.size() || s[j] != ':') throw ParseError(line.number, line.column + static_cast<int>(j), "expected ':' after name", {":"});
  h.rest = s.substr(j + 1);
  h.rest_column = line.column + static_cast<int>(j) + 1;
  return h;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_error(line, column, message, expected)),
      line_(line),
      column_(column),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, int line, int column) {
  if (vars.empty()) throw ParseError(line, column, "no variables declared");
  return ExprParser(text, vars, line, column).parse();
}

const SystemFile::Entry* SystemFile::find(std::string_view name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

const VectorField* SystemFile::field(std::string_view name) const {
  const Entry* e = find(name);
  return e ? std::get_if<VectorField>(&e->value) : nullptr;
}

const Poly* SystemFile::poly(std::string_view name) const {
  const Entry* e = find(name);
  return e ? std::get_if<Poly>(&e->value) : nullptr;
}

const DiagonalAction* SystemFile::weights(std::string_view name) const {
  const Entry* e = find(name);
  return e ? std::get_if<DiagonalAction>(&e->value) : nullptr;
}

SystemFile parse_system(std::string_view text) {
  const auto lines = split_lines(text);
  SystemFile sys;
  bool have_vars = false;

  // Pending block: field or poly collecting component lines.
  std::string block_kind, block_name;
  int block_line = 0, block_col = 0;
  std::vector<Poly> block_comps;

  auto close_block = [&]() {
    if (block_kind.empty()) return;
    if (block_comps.empty())
      throw ParseError(block_line, block_col, block_kind + " '" + block_name + "' has no components", {"expression"});
    if (block_kind == "field") {
      sys.entries.push_back({block_name, VectorField(std::move(block_comps))});
    } else {
      sys.entries.push_back({block_name, std::move(block_comps.front())});
    }
    block_kind.clear();
    block_comps.clear();
  };

  auto check_name = [&](const std::string& name, int line, int col) {
    if (sys.find(name) || (block_kind.size() && block_name == name))
      throw ParseError(line, col, "duplicate name '" + name + "'");
    if (std::find(sys.vars.begin(), sys.vars.end(), name) != sys.vars.end())
      throw ParseError(line, col, "name '" + name + "' clashes with a variable");
  };

  int last_line = 1;
  for (const auto& line : lines) {
    last_line = line.number;
    if (line.content.empty()) continue;
    auto header = read_header(line);
    if (!header) {
      if (block_kind.empty())
        throw ParseError(line.number, line.column,
                         have_vars ? "expression outside a field or poly block" : "file must start with 'vars:'",
                         have_vars ? std::vector<std::string>{"field", "poly", "weights"} : std::vector<std::string>{"vars"});
      if (block_kind == "poly" && !block_comps.empty())
        throw ParseError(line.number, line.column, "poly '" + block_name + "' takes a single expression");
      block_comps.push_back(parse_poly(line.content, sys.vars, line.number, line.column));
      continue;
    }
    close_block();
    if (header->keyword == "vars") {
      if (have_vars) throw ParseError(line.number, line.column, "'vars:' declared twice");
      std::string_view rest = header->rest;
      std::size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        const int col = header->rest_column + static_cast<int>(i);
        if (!is_ident_start(rest[i])) throw ParseError(line.number, col, "expected a variable name", {"name"});
        std::size_t j = i;
        while (j < rest.size() && is_ident_char(rest[j])) ++j;
        std::string name(rest.substr(i, j - i));
        if (kKeywords.contains(name)) throw ParseError(line.number, col, "'" + name + "' is a keyword");
        if (std::find(sys.vars.begin(), sys.vars.end(), name) != sys.vars.end())
          throw ParseError(line.number, col, "duplicate variable '" + name + "'");
        sys.vars.push_back(std::move(name));
        i = j;
      }
      if (sys.vars.empty()) throw ParseError(line.number, header->rest_column, "no variables declared", {"name"});
      have_vars = true;
      continue;
    }
    if (!have_vars) throw ParseError(line.number, line.column, "file must start with 'vars:'", {"vars"});
    check_name(header->name, line.number, header->name_column);
    if (header->keyword == "weights") {
      std::string_view rest = trim(header->rest);
      if (rest.empty()) throw ParseError(line.number, header->rest_column, "missing weights", {"rational"});
      try {
        DiagonalAction action = DiagonalAction::parse(rest);
        if (action.size() != sys.vars.size())
          throw ParseError(line.number, header->rest_column,
                           "weights '" + header->name + "' has " + std::to_string(action.size()) + " entries for " +
                               std::to_string(sys.vars.size()) + " variables");
        sys.entries.push_back({header->name, std::move(action)});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, header->rest_column, e.what(), {"rational"});
      }
      continue;
    }
    if (!trim(header->rest).empty())
      throw ParseError(line.number, header->rest_column, "components go on the following lines", {"end of line"});
    block_kind = header->keyword;
    block_name = header->name;
    block_line = line.number;
    block_col = line.column;
  }
  close_block();
  if (!have_vars) throw ParseError(last_line, 1, "file must start with 'vars:'", {"vars"});
  return sys;
}

std::string print_system(const SystemFile& system) {
  std::string out = "vars:";
  for (const auto& v : system.vars) out += " " + v;
  out += "\n";
  for (const auto& e : system.entries) {
    if (const auto* f = std::get_if<VectorField>(&e.value)) {
      out += "field " + e.name + ":\n";
      for (const auto& c : *f) out += "  " + c.to_string(system.vars) + "\n";
    } else if (const auto* p = std::get_if<Poly>(&e.value)) {
      out += "poly " + e.name + ":\n  " + p->to_string(system.vars) + "\n";
    } else if (const auto* w = std::get_if<DiagonalAction>(&e.value)) {
      out += "weights " + e.name + ": " + w->to_string() + "\n";
    }
  }
  return out;
}

}  // namespace liesym
