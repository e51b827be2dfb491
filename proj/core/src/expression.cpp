#include "resint/expression.hpp"

#include <cctype>

#include "resint/errors.hpp"

namespace resint {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> terms;
    skip_space();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
    }
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      take();
      terms.push_back(term(op == '-'));
    }
    return terms;
  }

 private:
  ParsedTerm term(bool negative) {
    ParsedTerm t{negative ? Integer(-1) : Integer(1), {}};
    factor(t);
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      take();
      factor(t);
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    skip_space();
    if (at_end()) fail("expected a factor");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coefficient *= Integer(digits());
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      fail(std::string("unexpected '") + c + "'");
    }
    std::string name;
    while (!at_end()) {
      char n = peek();
      if (std::isalnum(static_cast<unsigned char>(n)) || n == '_' || n == '(' || n == ')') {
        name.push_back(take());
      } else {
        break;
      }
    }
    unsigned exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      take();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      exponent = static_cast<unsigned>(std::stoul(e));
    }
    t.factors.emplace_back(std::move(name), exponent);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", line_, pos_ + 1);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_expression(std::string_view text, std::size_t line) {
  return Parser(text, line).run();
}

}  // namespace resint
