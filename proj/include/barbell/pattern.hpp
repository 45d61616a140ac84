#pragma once

// Monomial patterns: formal products such as a_1 c̄_3 a_3 of (possibly
// inverted) variables, each renamed into subscript 1 or 3.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barbell/error.hpp"
#include "barbell/word.hpp"

namespace barbell {

struct PatternFactor {
  std::string variable;
  bool inverted = false;
  Subscript subscript = Subscript::one;

  friend bool operator==(const PatternFactor&, const PatternFactor&) = default;
};

using Assignment = std::map<std::string, Word>;

class Pattern {
 public:
  static constexpr std::size_t max_variables = 2;

  explicit Pattern(std::vector<PatternFactor> factors)
      : factors_(std::move(factors)) {
    if (factors_.empty()) {
      throw DomainError("a pattern needs at least one factor");
    }
    for (const PatternFactor& f : factors_) {
      if (f.variable.empty()) {
        throw DomainError("pattern variable names must be nonempty");
      }
      if (std::find(variables_.begin(), variables_.end(), f.variable) ==
          variables_.end()) {
        variables_.push_back(f.variable);
      }
    }
    if (variables_.size() > max_variables) {
      throw DomainError("a pattern may use at most two variables");
    }
  }

  // Tokens separated by spaces: "a_1", "c^-1_3" or "c̄_3" (c + U+0304).
  static Pattern parse(std::string_view text) {
    std::vector<PatternFactor> factors;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == start) {
        throw ParseError("expected a variable name", pos);
      }
      PatternFactor f;
      f.variable = std::string(text.substr(start, pos - start));
      if (text.substr(pos, 3) == "^-1") {
        f.inverted = true;
        pos += 3;
      } else if (text.substr(pos, 2) == combining_bar) {
        f.inverted = true;
        pos += 2;
      }
      if (text.substr(pos, 2) == "_1") {
        f.subscript = Subscript::one;
      } else if (text.substr(pos, 2) == "_3") {
        f.subscript = Subscript::three;
      } else {
        throw ParseError("expected subscript _1 or _3", pos);
      }
      pos += 2;
      if (pos < text.size() && text[pos] != ' ') {
        throw ParseError("expected a space between factors", pos);
      }
      factors.push_back(std::move(f));
    }
    return Pattern(std::move(factors));
  }

  const std::vector<PatternFactor>& factors() const { return factors_; }
  // Variable names in order of first appearance.
  const std::vector<std::string>& variables() const { return variables_; }

  friend bool operator==(const Pattern& x, const Pattern& y) {
    return x.factors_ == y.factors_;
  }

  // U+0304 COMBINING MACRON in UTF-8.
  static constexpr std::string_view combining_bar = "\xCC\x84";

 private:
  std::vector<PatternFactor> factors_;
  std::vector<std::string> variables_;
};

// "a_1 c̄_3 a_3"
inline std::string to_string(const Pattern& p) {
  std::string out;
  for (const PatternFactor& f : p.factors()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += f.variable;
    if (f.inverted) {
      out += Pattern::combining_bar;
    }
    out += '_';
    out += std::to_string(subscript_value(f.subscript));
  }
  return out;
}

// Substitutes BASE words for the variables and reduces in QUAD.
inline Word eval_pattern(const Pattern& p, const Assignment& assignment) {
  Word result(Alphabet::quad());
  for (const PatternFactor& f : p.factors()) {
    auto it = assignment.find(f.variable);
    if (it == assignment.end()) {
      throw DomainError("no value for pattern variable '" + f.variable + "'");
    }
    const Word& value = f.inverted ? invert(it->second) : it->second;
    result *= rename(value, f.subscript);
  }
  return result;
}

}  // namespace barbell
