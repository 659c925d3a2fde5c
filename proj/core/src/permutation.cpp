#include "presclass/permutation.hpp"

#include <cctype>
#include <numeric>

#include "presclass/error.hpp"

namespace presclass {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (std::uint32_t p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw InvalidParameter("image list is not a bijection");
    }
    hit[p] = 1;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw InvalidParameter("composing permutations of different degree");
  }
  Permutation out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> done(degree(), 0);
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::uint32_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = 1;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  std::vector<Permutation> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<std::uint32_t> points;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      skip_ws();
      const std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1000000) throw ParseError("point too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a point", pos);
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." +
                             std::to_string(degree),
                         start);
      }
      points.push_back(static_cast<std::uint32_t>(value - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') throw ParseError("expected a point", pos);
      } else if (pos < text.size() && text[pos] != ')') {
        throw ParseError("expected ',' or ')'", pos);
      }
    }
    if (pos == text.size()) throw ParseError("unterminated cycle", pos);
    ++pos;  // ')'
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<char> used(degree, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (used[points[i]]) throw ParseError("repeated point in cycle", pos);
      used[points[i]] = 1;
      images[points[i]] = points[(i + 1) % points.size()];
    }
    cycles.emplace_back(std::move(images));
    skip_ws();
  }
  for (const Permutation& c : cycles) result = result * c;
  return result;
}

std::vector<std::string> split_permutation_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ';' || c == ',')) {
      out.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  out.push_back(current);
  return out;
}

}  // namespace presclass
