#include "presclass/descriptor.hpp"

#include <cctype>
#include <string>

#include "presclass/error.hpp"
#include "presclass/families.hpp"

namespace presclass {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::size_t offset) {
  text = trim(text);
  if (text.empty()) throw ParseError("expected an integer", offset);
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
    }
    value = value * 10 + (c - '0');
    if (value > 1000000) throw ParseError("integer too large", offset);
  }
  return value;
}

std::string_view unbracket(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
  return s;
}

FiniteGroup parse_at(std::string_view text, std::size_t offset) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("group descriptor needs '<family>:'", offset);
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  const std::size_t rest_offset = offset + colon + 1;
  if (family == "dicyclic") return dicyclic(parse_int(rest, rest_offset));
  if (family == "dihedral") return dihedral(parse_int(rest, rest_offset));
  if (family == "cyclic") return cyclic(parse_int(rest, rest_offset));
  if (family == "product") {
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const char c = rest[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ',' && depth == 0) {
        return direct_product(parse_at(unbracket(rest.substr(0, i)), rest_offset),
                              parse_at(unbracket(rest.substr(i + 1)), rest_offset + i + 1));
      }
    }
    throw ParseError("product descriptor needs two factors", rest_offset);
  }
  if (family == "perm") {
    const std::size_t second = rest.find(':');
    if (second == std::string_view::npos) {
      throw ParseError("perm descriptor needs 'perm:<degree>:<generators>'", rest_offset);
    }
    const int degree = parse_int(rest.substr(0, second), rest_offset);
    if (degree < 1) throw InvalidParameter("permutation degree must be >= 1");
    std::vector<Permutation> gens;
    for (const std::string& part : split_permutation_list(rest.substr(second + 1))) {
      if (!trim(part).empty()) {
        gens.push_back(parse_cycles(trim(part), static_cast<std::size_t>(degree)));
      }
    }
    return from_permutations(static_cast<std::size_t>(degree), gens);
  }
  throw ParseError("unknown group family '" + std::string(family) + "'", offset);
}

}  // namespace

FiniteGroup parse_group(std::string_view descriptor) {
  return parse_at(descriptor, 0);
}

}  // namespace presclass
