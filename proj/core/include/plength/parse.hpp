// Text format for presentations:
//
//   presentation := "<" gen-list "|" relator-list ">"
//   gen-list     := ident ("," ident)*          (may be empty)
//   relator-list := (word ("," word)*)?
//   word         := factor+
//   factor       := ident | ident "^" int | "(" word ")" ("^" int)?
//
// Identifiers are ASCII alphanumeric starting with a letter; whitespace is
// insignificant; negative exponents denote inverses; exponents expand
// eagerly at parse time.  The serializer emits one canonical form (single
// spaces, one letter per token, "name^-1" for inverses, "g^0" for an empty
// relator) and parse(serialize(p)) == p for every valid presentation.
#pragma once

#include <stdexcept>
#include <string>

#include "plength/presentation.hpp"

namespace plength {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line, int column);
};

Presentation parse_presentation(const std::string& text);

std::string serialize_presentation(const Presentation& p);

// Parses a single word over p's generators (same grammar as `word`).
Word parse_word(const std::string& text, const Presentation& p);

std::string serialize_word(const Word& w, const Presentation& p);

}  // namespace plength
