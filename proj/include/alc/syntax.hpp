// Concrete text syntax for concepts and ABox files.
//
//   Concept := OrExpr
//   OrExpr  := AndExpr ("or" AndExpr)*
//   AndExpr := Unary ("and" Unary)*
//   Unary   := "not" Unary | "all" IDENT "." Unary | "some" IDENT "." Unary | Primary
//   Primary := "Top" | "Bottom" | IDENT | "(" Concept ")"
//
// ABox files hold one fact per line, either `x : Concept` or `r(x, y)`.
// Blank lines and lines starting with '#' are skipped.

#ifndef ALC_SYNTAX_HPP
#define ALC_SYNTAX_HPP

#include <string>
#include <string_view>

#include "alc/abox.hpp"
#include "alc/error.hpp"

namespace alc {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

Concept parse_concept(std::string_view text);

// Minimal parentheses; parse_concept(print_concept(c)) == c.
std::string print_concept(const Concept& c);

std::string print_fact(const Fact& f);

// Individuals parse as Named. Duplicate facts are a ParseError.
AboxImpl parse_abox(std::string_view text);

}  // namespace alc

#endif  // ALC_SYNTAX_HPP
