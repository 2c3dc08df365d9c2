#include "plength/parse.hpp"

#include <cctype>
#include <map>

namespace plength {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line(line),
      column(column) {}

namespace {

// Hand-rolled scanner/recursive-descent parser; see grammar in parse.hpp.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Presentation parse_presentation() {
    expect('<');
    Presentation p;
    skip_space();
    if (peek() != '|') {
      for (;;) {
        std::string name = parse_ident("generator name");
        if (names_.count(name)) fail("duplicate generator name '" + name + "'");
        names_[name] = static_cast<int>(p.generator_names.size());
        p.generator_names.push_back(name);
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('|');
    skip_space();
    if (peek() != '>') {
      for (;;) {
        p.relators.push_back(parse_word_node());
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after '>'");
    return p;
  }

  Word parse_single_word(const Presentation& p) {
    for (size_t i = 0; i < p.generator_names.size(); ++i)
      names_[p.generator_names[i]] = static_cast<int>(i);
    Word w = parse_word_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after word");
    return w;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, int> names_;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string parse_ident(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected " + what);
    std::string s;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      s.push_back(text_[pos_]);
      advance();
    }
    return s;
  }

  long long parse_int() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      advance();
    }
    return neg ? -v : v;
  }

  static Word word_power(const Word& base, long long e) {
    Word unit = base;
    if (e < 0) {
      unit = inverse_word(base);
      e = -e;
    }
    Word out;
    out.reserve(unit.size() * static_cast<size_t>(e));
    for (long long i = 0; i < e; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  // word := factor+
  Word parse_word_node() {
    Word w = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        Word f = parse_factor();
        w.insert(w.end(), f.begin(), f.end());
      } else {
        break;
      }
    }
    return w;
  }

  // factor := ident | ident "^" int | "(" word ")" ("^" int)?
  Word parse_factor() {
    if (peek() == '(') {
      advance();
      Word inner = parse_word_node();
      expect(')');
      if (peek() == '^') {
        advance();
        return word_power(inner, parse_int());
      }
      return inner;
    }
    std::string name = parse_ident("generator or '('");
    auto it = names_.find(name);
    if (it == names_.end()) fail("unknown generator '" + name + "'");
    Letter l = it->second + 1;
    if (peek() == '^') {
      advance();
      return word_power({l}, parse_int());
    }
    return {l};
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p = Parser(text).parse_presentation();
  p.validate();
  return p;
}

Word parse_word(const std::string& text, const Presentation& p) {
  return Parser(text).parse_single_word(p);
}

std::string serialize_word(const Word& w, const Presentation& p) {
  if (w.empty()) {
    if (p.generator_names.empty())
      throw std::invalid_argument("cannot serialize an empty word without generators");
    return p.generator_names[0] + "^0";
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += p.generator_names.at(static_cast<size_t>(gen_of(w[i])));
    if (sign_of(w[i]) < 0) out += "^-1";
  }
  return out;
}

std::string serialize_presentation(const Presentation& p) {
  p.validate();
  std::string out = "<";
  for (size_t i = 0; i < p.generator_names.size(); ++i) {
    out += i ? ", " : " ";
    out += p.generator_names[i];
  }
  out += " |";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += serialize_word(p.relators[i], p);
  }
  out += " >";
  return out;
}

}  // namespace plength
