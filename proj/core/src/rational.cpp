#include "plonka/rational.hpp"

#include <cctype>

namespace plonka {

Rat parse_rational(std::string_view text) {
  if (text.empty()) throw BadRange("empty rational literal");
  std::size_t pos = text[0] == '-' || text[0] == '+' ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw BadRange("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw BadRange("malformed rational literal '" + std::string(text) + "'");
  try {
    return Rat{std::string(text)};
  } catch (const std::exception&) {
    throw BadRange("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Rat& value) { return value.str(); }

std::string to_string(const Int& value) { return value.str(); }

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  Int kk = k > n - k ? n - k : k;
  for (Int i = 0; i < kk; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace plonka
