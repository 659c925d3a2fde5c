#include "presclass/element_expr.hpp"

#include <cctype>

#include "presclass/error.hpp"

namespace presclass {
namespace {

class ExpressionParser {
 public:
  ExpressionParser(const FiniteGroup& group, std::string_view text, std::size_t offset)
      : group_(group), text_(text), offset_(offset) {}

  ElementId parse() {
    skip_ws();
    if (at_end()) fail("empty element expression");
    ElementId value = term();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      value = group_.mul(value, term());
      skip_ws();
    }
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  ElementId term() {
    skip_ws();
    ElementId base = atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      return group_.pow(base, integer());
    }
    return base;
  }

  ElementId atom() {
    if (at_end()) fail("expected a name or '('");
    const std::size_t start = pos_;
    if (peek() == '(') {
      while (!at_end() && peek() == '(') {
        int depth = 0;
        do {
          if (at_end()) fail("unbalanced parentheses");
          if (peek() == '(') ++depth;
          if (peek() == ')') --depth;
          ++pos_;
        } while (depth > 0);
      }
      const std::string_view literal = text_.substr(start, pos_ - start);
      if (auto g = group_.resolve_literal(literal)) return *g;
      fail_at("unknown element '" + std::string(literal) + "'", start);
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail(std::string("unexpected '") + peek() + "'");
    }
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto& gen_names = group_.generator_names();
    for (std::size_t k = 0; k < gen_names.size(); ++k) {
      if (gen_names[k] == name) return group_.generators()[k];
    }
    if (name == "e") return group_.identity();
    if (auto g = group_.find_name(name)) return *g;
    fail_at("unknown name '" + std::string(name) + "'", start);
  }

  long long integer() {
    const std::size_t start = pos_;
    bool negative = false;
    bool braced = false;
    if (!at_end() && (peek() == '{' || peek() == '(')) {
      braced = true;
      ++pos_;
      skip_ws();
    }
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    long long value = 0;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000000LL) fail_at("exponent too large", start);
      ++pos_;
    }
    if (pos_ == digits) fail_at("expected an integer exponent", start);
    if (braced) {
      skip_ws();
      if (at_end() || (peek() != '}' && peek() != ')')) fail("expected closing bracket");
      ++pos_;
    }
    return negative ? -value : value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, offset_ + at);
  }

  const FiniteGroup& group_;
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

ElementId parse_element(const FiniteGroup& group, std::string_view text) {
  return ExpressionParser(group, text, 0).parse();
}

GeneratingSequence parse_sequence(const FiniteGroup& group, std::string_view text) {
  GeneratingSequence seq;
  seq.group = group.descriptor();
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      seq.elements.push_back(
          ExpressionParser(group, text.substr(start, i - start), start).parse());
      start = i + 1;
    }
  }
  return seq;
}

std::string format_sequence(const FiniteGroup& group, const GeneratingSequence& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.elements.size(); ++k) {
    if (k) out += ',';
    out += group.name(seq.elements[k]);
  }
  return out;
}

}  // namespace presclass
