#include "alc/syntax.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace alc {

ParseError::ParseError(SourceSpan span, std::string expected, std::string found)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": expected " + expected + ", found " +
            found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, And, Or, Not, All, Some, Top, Bottom, LParen, RParen, Dot, Colon, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

constexpr std::array<std::pair<std::string_view, Tok>, 7> kKeywords{{
    {"and", Tok::And},
    {"or", Tok::Or},
    {"not", Tok::Not},
    {"all", Tok::All},
    {"some", Tok::Some},
    {"Top", Tok::Top},
    {"Bottom", Tok::Bottom},
}};

std::vector<Token> lex(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  SourceSpan pos{first_line, 1};
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const SourceSpan start = pos;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      for (const auto& [kw, k] : kKeywords)
        if (word == kw) kind = k;
      out.push_back({kind, std::move(word), start});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '.': kind = Tok::Dot; break;
      case ':': kind = Tok::Colon; break;
      case ',': kind = Tok::Comma; break;
      default: throw ParseError(start, "a token", "'" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().span, what, describe(peek()));
    return tokens_[pos_++];
  }

  Concept concept_expr() {
    Concept c = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      c = Or(std::move(c), conjunction());
    }
    return c;
  }

  void finish() { expect(Tok::End, "end of input"); }

 private:
  Concept conjunction() {
    Concept c = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      c = And(std::move(c), unary());
    }
    return c;
  }

  Concept unary() {
    switch (peek().kind) {
      case Tok::Not:
        ++pos_;
        return Not(unary());
      case Tok::All:
      case Tok::Some: {
        const bool universal = tokens_[pos_++].kind == Tok::All;
        Role r(expect(Tok::Ident, "a role name").text);
        expect(Tok::Dot, "'.'");
        Concept body = unary();
        return universal ? All(std::move(r), std::move(body)) : Some(std::move(r), std::move(body));
      }
      default:
        return primary();
    }
  }

  Concept primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Top: ++pos_; return Top();
      case Tok::Bottom: ++pos_; return Bottom();
      case Tok::Ident: ++pos_; return Atom(t.text);
      case Tok::LParen: {
        ++pos_;
        Concept c = concept_expr();
        expect(Tok::RParen, "')'");
        return c;
      }
      default:
        throw ParseError(t.span, "a concept", describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength: or < and < unary.
int level(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Or: return 1;
    case ConceptKind::And: return 2;
    default: return 3;
  }
}

void print(const Concept& c, int min_level, std::string& out) {
  const bool parens = level(c) < min_level;
  if (parens) out += '(';
  switch (c.kind()) {
    case ConceptKind::Atom: out += c.name().name; break;
    case ConceptKind::Top: out += "Top"; break;
    case ConceptKind::Bottom: out += "Bottom"; break;
    case ConceptKind::Not:
      out += "not ";
      print(c.operand(), 3, out);
      break;
    case ConceptKind::All:
    case ConceptKind::Some:
      out += c.is(ConceptKind::All) ? "all " : "some ";
      out += c.role().name();
      out += ". ";
      print(c.operand(), 3, out);
      break;
    case ConceptKind::And:
      print(c.lhs(), 2, out);
      out += " and ";
      print(c.rhs(), 3, out);
      break;
    case ConceptKind::Or:
      print(c.lhs(), 1, out);
      out += " or ";
      print(c.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Concept parse_concept(std::string_view text) {
  Parser p(lex(text, 1));
  Concept c = p.concept_expr();
  p.finish();
  return c;
}

std::string print_concept(const Concept& c) {
  std::string out;
  print(c, 1, out);
  return out;
}

std::string print_fact(const Fact& f) {
  if (f.is_inst()) return f.subject().to_string() + " : " + print_concept(f.concept_expr());
  return f.role().name() + "(" + f.subject().to_string() + ", " + f.object().to_string() + ")";
}

AboxImpl parse_abox(std::string_view text) {
  AboxImpl out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    Parser p(lex(line, line_no));
    const Token head = p.expect(Tok::Ident, "an individual or role name");
    Fact fact = [&] {
      if (p.peek().kind == Tok::LParen) {
        p.expect(Tok::LParen, "'('");
        auto x = Individual::named(p.expect(Tok::Ident, "an individual name").text);
        p.expect(Tok::Comma, "','");
        auto y = Individual::named(p.expect(Tok::Ident, "an individual name").text);
        p.expect(Tok::RParen, "')'");
        return Rel(Role(head.text), std::move(x), std::move(y));
      }
      p.expect(Tok::Colon, "':' or '('");
      return Inst(Individual::named(head.text), p.concept_expr());
    }();
    p.finish();
    if (!out.insert(fact)) throw ParseError(head.span, "a new fact", "duplicate '" + print_fact(fact) + "'");
  }
  return out;
}

}  // namespace alc
