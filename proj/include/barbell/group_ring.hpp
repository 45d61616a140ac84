#pragma once

// The rational vector space on reduced words (the additive group of Q[F]),
// its mod-2 quotient on BASE words, and linear functionals.

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "barbell/error.hpp"
#include "barbell/word.hpp"

namespace barbell {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s, std::size_t offset,
                       bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
      ++i;
    }
    if (i == s.size()) {
      throw ParseError("expected digits", offset + i);
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw ParseError("expected digits", offset + j);
      }
    }
    Integer v(std::string(s.substr(i)));
    return (!s.empty() && s[0] == '-') ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, 0, true));
  }
  Integer p = parse_int(text.substr(0, slash), 0, true);
  Integer q = parse_int(text.substr(slash + 1), slash + 1, false);
  if (q.is_zero()) {
    throw ParseError("zero denominator", slash + 1);
  }
  return Rational(p, q);
}

// A finitely supported rational combination of words over one alphabet.
// Zero coefficients are never stored.
class RingElement {
 public:
  using TermMap = std::map<Word, Rational>;

  explicit RingElement(Alphabet alphabet = Alphabet::quad())
      : alphabet_(alphabet) {}

  static RingElement monomial(const Word& w, const Rational& c = 1) {
    RingElement x(w.alphabet());
    x.add_term(w, c);
    return x;
  }

  Alphabet alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RingElement& add_term(const Word& w, const Rational& c) {
    if (w.alphabet() != alphabet_) {
      throw AlphabetError("term " + to_string(w) + " is not over " +
                          std::string(alphabet_.name()));
    }
    if (c.is_zero()) {
      return *this;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
    return *this;
  }

  RingElement& operator+=(const RingElement& y) {
    check_alphabet(y);
    for (const auto& [w, c] : y.terms_) {
      add_term(w, c);
    }
    return *this;
  }

  RingElement& operator-=(const RingElement& y) {
    check_alphabet(y);
    for (const auto& [w, c] : y.terms_) {
      add_term(w, -c);
    }
    return *this;
  }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  void check_alphabet(const RingElement& y) const {
    if (y.alphabet_ != alphabet_) {
      throw AlphabetError("cannot combine " + std::string(alphabet_.name()) +
                          " and " + std::string(y.alphabet_.name()) +
                          " elements");
    }
  }

  Alphabet alphabet_;
  TermMap terms_;
};

inline RingElement add(const RingElement& x, const RingElement& y) {
  RingElement r = x;
  r += y;
  return r;
}

inline RingElement scale(const Rational& q, const RingElement& x) {
  RingElement r(x.alphabet());
  if (q.is_zero()) {
    return r;
  }
  for (const auto& [w, c] : x.terms()) {
    r.add_term(w, q * c);
  }
  return r;
}

inline RingElement operator+(const RingElement& x, const RingElement& y) {
  return add(x, y);
}

inline RingElement operator-(const RingElement& x, const RingElement& y) {
  RingElement r = x;
  r -= y;
  return r;
}

inline RingElement operator*(const Rational& q, const RingElement& x) {
  return scale(q, x);
}

inline Rational coeff(const RingElement& x, const Word& w) {
  auto it = x.terms().find(w);
  return it == x.terms().end() ? Rational(0) : it->second;
}

// Finitely supported linear functional: x -> sum_w weight(w) * coeff(x, w).
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::map<Word, Rational> weights) {
    for (auto& [w, q] : weights) {
      if (!q.is_zero()) {
        weights_.emplace(w, q);
      }
    }
  }

  const std::map<Word, Rational>& weights() const { return weights_; }

  Rational operator()(const RingElement& x) const {
    Rational sum = 0;
    for (const auto& [w, q] : weights_) {
      sum += q * coeff(x, w);
    }
    return sum;
  }

 private:
  std::map<Word, Rational> weights_;
};

inline Rational evaluate(const Functional& f, const RingElement& x) {
  return f(x);
}

// Element of (Z/2)[<t,u> \ 1]: a set of nontrivial BASE words, added by
// symmetric difference.
class Mod2Element {
 public:
  Mod2Element() = default;

  const std::set<Word>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  Mod2Element& toggle(const Word& w) {
    if (w.alphabet() != Alphabet::base()) {
      throw AlphabetError("mod-2 elements live over BASE");
    }
    if (w.is_identity()) {
      return *this;
    }
    if (!support_.erase(w)) {
      support_.insert(w);
    }
    return *this;
  }

  Mod2Element& operator+=(const Mod2Element& y) {
    for (const Word& w : y.support_) {
      toggle(w);
    }
    return *this;
  }

  friend Mod2Element operator+(Mod2Element x, const Mod2Element& y) {
    x += y;
    return x;
  }

  friend bool operator==(const Mod2Element&, const Mod2Element&) = default;

 private:
  std::set<Word> support_;
};

// Reduction mod 2, forgetting the term at the identity word.
inline Mod2Element mod2_project(const RingElement& x) {
  if (x.alphabet() != Alphabet::base()) {
    throw AlphabetError("mod2_project expects a BASE element");
  }
  Mod2Element r;
  for (const auto& [w, c] : x.terms()) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw DomainError("mod2_project: coefficient " + to_string(c) +
                        " of " + to_string(w) + " is not an integer");
    }
    if (boost::multiprecision::numerator(c) % 2 != 0) {
      r.toggle(w);
    }
  }
  return r;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination. The
// matrix is consumed.
inline std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) {
    return 0;
  }
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Dimension of the Q-span of the vectors, computed exactly over their joint
// word support.
inline std::size_t rank(std::span<const RingElement> vectors) {
  if (vectors.empty()) {
    return 0;
  }
  std::map<Word, std::size_t> column;
  for (const RingElement& v : vectors) {
    if (v.alphabet() != vectors.front().alphabet()) {
      throw AlphabetError("rank: vectors over different alphabets");
    }
    for (const auto& [w, c] : v.terms()) {
      column.try_emplace(w, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [w, idx] : column) {
    idx = next++;
  }
  std::vector<std::vector<Integer>> m;
  m.reserve(vectors.size());
  for (const RingElement& v : vectors) {
    Integer lcm = 1;
    for (const auto& [w, c] : v.terms()) {
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    }
    std::vector<Integer> row(column.size(), 0);
    for (const auto& [w, c] : v.terms()) {
      row[column.at(w)] = boost::multiprecision::numerator(c) *
                          (lcm / boost::multiprecision::denominator(c));
    }
    m.push_back(std::move(row));
  }
  return integer_matrix_rank(std::move(m));
}

// "2 t_1 u_3 - t_1^-1 + 1/2 u_1"; the zero element prints as "0" and a
// multiple of the identity word as its bare coefficient.
inline std::string to_string(const RingElement& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.is_identity()) {
      out += to_string(mag);
    } else {
      if (mag != 1) {
        out += to_string(mag) + " ";
      }
      out += to_string(w);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& x) {
  return os << to_string(x);
}

}  // namespace barbell
