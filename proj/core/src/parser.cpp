#include "hteq/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "hteq/error.hpp"

namespace hteq {

namespace {

enum class Tok { ident, kw_not, kw_top, kw_bot, amp, bar, arrow, lparen, rparen, dot, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::ident: return "atom";
    case Tok::kw_not: return "'not'";
    case Tok::kw_top: return "'top'";
    case Tok::kw_bot: return "'bot'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::dot: return "'.'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t start_col = col;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), line, start_col});
      advance(1);
    };
    switch (c) {
      case '&': single(Tok::amp); continue;
      case '|': single(Tok::bar); continue;
      case '(': single(Tok::lparen); continue;
      case ')': single(Tok::rparen); continue;
      case '.': single(Tok::dot); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::arrow, "->", line, start_col});
          advance(2);
          continue;
        }
        throw ParseError(line, start_col, "stray '-'", {"'->'"});
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::ident;
      if (word == "not") {
        kind = Tok::kw_not;
      } else if (word == "top") {
        kind = Tok::kw_top;
      } else if (word == "bot") {
        kind = Tok::kw_bot;
      } else if (!Atom::is_valid_name(word)) {
        throw ParseError(line, start_col,
                         "invalid atom name '" + word + "' (atoms match [a-z][a-zA-Z0-9_]*)",
                         {"atom"});
      }
      out.push_back({kind, std::move(word), line, start_col});
      advance(j - i);
      continue;
    }
    throw ParseError(line, start_col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Program program() {
    std::vector<Rule> rules;
    while (peek().kind != Tok::end) {
      rules.push_back(statement());
      expect(Tok::dot, {Tok::dot, Tok::arrow, Tok::amp, Tok::bar});
    }
    return Program(std::move(rules));
  }

  Formula lone_formula() {
    Formula f = imp();
    expect(Tok::end, {Tok::end, Tok::arrow, Tok::amp, Tok::bar});
    return f;
  }

  Rule lone_rule() {
    Rule r = statement();
    if (peek().kind == Tok::dot) ++pos_;
    expect(Tok::end, {Tok::dot, Tok::end});
    return r;
  }

 private:
  Rule statement() {
    Formula lhs = disj();
    if (peek().kind == Tok::arrow) {
      ++pos_;
      return Rule(std::move(lhs), imp());
    }
    return Rule::fact(std::move(lhs));
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind == Tok::arrow) {
      ++pos_;
      return Formula::implication(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::bar) {
      ++pos_;
      f = Formula::disjunction(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::amp) {
      ++pos_;
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kw_not: ++pos_; return Formula::negation(unary());
      case Tok::kw_top: ++pos_; return Formula::top();
      case Tok::kw_bot: ++pos_; return Formula::bot();
      case Tok::ident: ++pos_; return Formula::atom(Atom(t.text));
      case Tok::lparen: {
        ++pos_;
        Formula f = imp();
        expect(Tok::rparen, {Tok::rparen, Tok::arrow, Tok::amp, Tok::bar});
        return f;
      }
      default: break;
    }
    std::set<std::string> expected = {describe(Tok::ident), describe(Tok::kw_not),
                                      describe(Tok::kw_top), describe(Tok::kw_bot),
                                      describe(Tok::lparen)};
    throw ParseError(t.line, t.column, "unexpected " + shown(t), std::move(expected));
  }

  const Token& peek() const { return tokens_[pos_]; }

  void expect(Tok kind, std::initializer_list<Tok> expected) {
    const Token& t = peek();
    if (t.kind == kind) {
      if (kind != Tok::end) ++pos_;
      return;
    }
    std::set<std::string> names;
    for (auto e : expected) names.insert(describe(e));
    throw ParseError(t.line, t.column, "unexpected " + shown(t), std::move(names));
  }

  static std::string shown(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength: higher binds tighter.
int level(Connective c) {
  switch (c) {
    case Connective::implication: return 1;
    case Connective::disjunction: return 2;
    case Connective::conjunction: return 3;
    case Connective::negation: return 4;
    default: return 5;
  }
}

void write(std::ostream& out, const Formula& f, int min_level);

void write_wrapped(std::ostream& out, const Formula& f, int min_level) {
  if (level(f.kind()) < min_level) {
    out << '(';
    write(out, f, 0);
    out << ')';
  } else {
    write(out, f, min_level);
  }
}

void write(std::ostream& out, const Formula& f, int) {
  switch (f.kind()) {
    case Connective::atom: out << f.symbol().name(); return;
    case Connective::top: out << "top"; return;
    case Connective::bot: out << "bot"; return;
    case Connective::negation:
      out << "not ";
      write_wrapped(out, f.operand(), level(Connective::negation));
      return;
    case Connective::conjunction:
    case Connective::disjunction: {
      const int l = level(f.kind());
      write_wrapped(out, f.lhs(), l);
      out << (f.is(Connective::conjunction) ? " & " : " | ");
      write_wrapped(out, f.rhs(), l + 1);
      return;
    }
    case Connective::implication: {
      const int l = level(Connective::implication);
      write_wrapped(out, f.lhs(), l + 1);
      out << " -> ";
      write_wrapped(out, f.rhs(), l);
      return;
    }
  }
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Formula parse_formula(std::string_view text) { return Parser(text).lone_formula(); }

Rule parse_rule(std::string_view text) { return Parser(text).lone_rule(); }

std::string render(const Formula& f) {
  std::ostringstream out;
  write(out, f, 0);
  return out.str();
}

std::string render(const Rule& r) {
  std::ostringstream out;
  const int arrow = level(Connective::implication);
  if (r.is_fact()) {
    write_wrapped(out, r.head(), arrow + 1);
  } else {
    write_wrapped(out, r.body(), arrow + 1);
    out << " -> ";
    write_wrapped(out, r.head(), arrow);
  }
  out << '.';
  return out.str();
}

std::string render(const Program& p) {
  std::ostringstream out;
  for (const auto& r : p.rules()) out << render(r) << '\n';
  return out.str();
}

std::string render(const AtomSet& atoms) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& a : atoms) {
    if (!first) out << ", ";
    out << a.name();
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace hteq
