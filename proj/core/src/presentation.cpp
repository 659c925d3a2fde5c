#include "presclass/presentation.hpp"

#include <cctype>
#include <cstdlib>

#include "presclass/error.hpp"

namespace presclass {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& letter : letters) {
    if (letter.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().generator == letter.generator) {
      letters_.back().exponent += letter.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& letter : out) letter.exponent = -letter.exponent;
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::power(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  Word out;
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

std::vector<int> Word::expanded() const {
  std::vector<int> out;
  for (const Letter& letter : letters_) {
    const int symbol = static_cast<int>(letter.generator) + 1;
    for (int k = 0; k < std::abs(letter.exponent); ++k) {
      out.push_back(letter.exponent > 0 ? symbol : -symbol);
    }
  }
  return out;
}

std::vector<int> Word::cyclically_reduced() const {
  std::vector<int> w = expanded();
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(lo),
          w.begin() + static_cast<std::ptrdiff_t>(hi)};
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    p.source = std::string(text_);
    expect('<');
    do {
      skip_ws();
      const std::size_t at = pos_;
      std::string name = identifier();
      if (name == "e") fail_at("'e' is reserved for the identity", at);
      for (const std::string& existing : p.generator_names) {
        if (existing == name) fail_at("duplicate generator '" + name + "'", at);
      }
      p.generator_names.push_back(std::move(name));
      skip_ws();
    } while (consume(','));
    names_ = &p.generator_names;
    expect('|');
    skip_ws();
    if (!consume('>')) {
      do {
        relation(p.relators);
        skip_ws();
      } while (consume(','));
      expect('>');
    }
    skip_ws();
    if (!at_end()) fail("trailing text after '>'");
    return p;
  }

 private:
  void relation(std::vector<Word>& relators) {
    Word lhs = word();
    skip_ws();
    if (!consume('=')) {
      relators.push_back(std::move(lhs));
      return;
    }
    do {
      Word rhs = word();
      relators.push_back(lhs * rhs.inverse());
      lhs = std::move(rhs);
      skip_ws();
    } while (consume('='));
  }

  Word word() {
    skip_ws();
    Word out = factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        out = out * factor();
      } else if (!at_end() && (peek() == '(' || is_ident_start(peek()))) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  Word factor() {
    skip_ws();
    Word base;
    if (consume('(')) {
      base = word();
      expect(')');
    } else {
      const std::size_t at = pos_;
      const std::string name = identifier();
      if (name == "e") {
        base = Word();
      } else {
        std::size_t index = names_->size();
        for (std::size_t k = 0; k < names_->size(); ++k) {
          if ((*names_)[k] == name) index = k;
        }
        if (index == names_->size()) fail_at("unknown generator '" + name + "'", at);
        base = Word({Letter{index, 1}});
      }
    }
    skip_ws();
    if (consume('^')) {
      skip_ws();
      return base.power(integer());
    }
    return base;
  }

  int integer() {
    const std::size_t at = pos_;
    const bool braced = consume('{');
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 100000) fail_at("exponent too large", at);
      ++pos_;
    }
    if (pos_ == digits) fail_at("expected an integer exponent", at);
    if (braced) expect('}');
    return negative ? -value : value;
  }

  std::string identifier() {
    skip_ws();
    if (at_end() || !is_ident_start(peek())) fail("expected a generator name");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  void expect(char c) {
    skip_ws();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool consume(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return PresentationParser(text).parse();
}

std::string to_string(const Word& word, std::span<const std::string> generator_names) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.letters().size(); ++k) {
    const Letter& letter = word.letters()[k];
    if (k) out += '*';
    out += generator_names[letter.generator];
    if (letter.exponent != 1) out += "^" + std::to_string(letter.exponent);
  }
  return out;
}

std::string to_string(const Presentation& presentation) {
  std::string out = "<";
  for (std::size_t k = 0; k < presentation.generator_names.size(); ++k) {
    if (k) out += ',';
    out += presentation.generator_names[k];
  }
  out += " |";
  for (std::size_t k = 0; k < presentation.relators.size(); ++k) {
    out += k ? ", " : " ";
    out += to_string(presentation.relators[k], presentation.generator_names);
  }
  out += ">";
  return out;
}

ElementId evaluate(const Word& word, const FiniteGroup& group,
                   std::span<const ElementId> assignment) {
  ElementId value = group.identity();
  for (const Letter& letter : word.letters()) {
    if (letter.generator >= assignment.size()) {
      throw InvalidParameter("assignment does not cover every generator");
    }
    value = group.mul(value, group.pow(assignment[letter.generator], letter.exponent));
  }
  return value;
}

bool check_homomorphism(const Presentation& presentation, const FiniteGroup& group,
                        std::span<const ElementId> assignment) {
  if (assignment.size() != presentation.generator_count()) {
    throw InvalidParameter("assignment must map every generator of the presentation");
  }
  for (ElementId g : assignment) {
    if (!group.contains(g)) throw InvalidParameter("assignment image out of range");
  }
  for (const Word& relator : presentation.relators) {
    if (evaluate(relator, group, assignment) != group.identity()) return false;
  }
  return true;
}

}  // namespace presclass
