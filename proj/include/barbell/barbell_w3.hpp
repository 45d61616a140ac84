#pragma once

// Hexagon relations, the T-polynomials of admissible barbells, the W3 target
// values of the barbells t nu_B nu_R t u^k t^-1, the marker monomials
// m1(k), m2(k) and the functional Psi_k = coeff_m1(k) - coeff_m2(k).

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "barbell/error.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/pattern.hpp"
#include "barbell/reference_data.hpp"
#include "barbell/word.hpp"

namespace barbell {

enum class PolyKind : int { t1 = 1, t3 = 3, t4 = 4, t6 = 6 };

inline constexpr std::array<PolyKind, 4> all_poly_kinds = {
    PolyKind::t1, PolyKind::t3, PolyKind::t4, PolyKind::t6};

inline constexpr int poly_index(PolyKind kind) { return static_cast<int>(kind); }

inline PolyKind poly_kind_from_index(int i) {
  switch (i) {
    case 1:
      return PolyKind::t1;
    case 3:
      return PolyKind::t3;
    case 4:
      return PolyKind::t4;
    case 6:
      return PolyKind::t6;
    default:
      throw DomainError("T-polynomial index must be 1, 3, 4 or 6, got " +
                        std::to_string(i));
  }
}

struct SignedPattern {
  int sign;
  Pattern pattern;
};

// The terms of T_i(ā, c̄) as monomials in the variables a and c.
inline const std::vector<SignedPattern>& t_poly_terms(PolyKind kind) {
  auto make = [](std::initializer_list<std::pair<int, const char*>> terms) {
    std::vector<SignedPattern> out;
    for (const auto& [sign, text] : terms) {
      out.push_back({sign, Pattern::parse(text)});
    }
    return out;
  };
  static const std::vector<SignedPattern> t1 = make({
      {+1, "a_1 c^-1_3 a_3"},
      {+1, "c^-1_1 a_1 a_3"},
      {-1, "c^-1_1 a^-1_3"},
      {-1, "a^-1_1 c^-1_3"},
  });
  static const std::vector<SignedPattern> t3 = make({
      {-1, "c_1 a^-1_3 c_3"},
      {+1, "a_1 c^-1_3 a_3"},
      {+1, "a^-1_1 c_3 a^-1_3"},
      {-1, "c_1 a_3"},
      {-1, "a_1 c_3"},
      {+1, "c_1 a^-1_1 a^-1_3"},
      {+1, "c^-1_1 a_1 a_3"},
      {-1, "a_1 c^-1_1 c^-1_3"},
  });
  static const std::vector<SignedPattern> t4 = make({
      {+1, "a^-1_1 c^-1_3 a^-1_3"},
      {+1, "a_1 c^-1_3 a_3"},
      {-1, "c^-1_1 a^-1_3"},
      {-1, "c^-1_1 a_3"},
      {+1, "a^-1_1 c^-1_3"},
      {+1, "a_1 c^-1_3"},
      {-1, "c^-1_1 a^-1_1 a^-1_3"},
      {-1, "c^-1_1 a_1 a_3"},
  });
  static const std::vector<SignedPattern> t6 = make({
      {+1, "c^-1_1 a^-1_3 c^-1_3"},
      {+1, "c_1 a^-1_3 c_3"},
      {-1, "a_1 c_3 a_3"},
      {-1, "a_1 c^-1_3 a_3"},
      {+1, "a^-1_1 c_3 a^-1_3"},
      {+1, "a^-1_1 c^-1_3 a^-1_3"},
      {+1, "a^-1_1 c^-1_3"},
      {+1, "a^-1_1 c_3"},
      {-1, "c^-1_1 a^-1_3"},
      {-1, "c_1 a^-1_3"},
      {-1, "c^-1_1 a^-1_1 a^-1_3"},
      {-1, "c_1 a^-1_1 a^-1_3"},
      {+1, "c^-1_1 a_1 a_3"},
      {+1, "c_1 a_1 a_3"},
      {-1, "a^-1_1 c^-1_1 c^-1_3"},
      {-1, "a^-1_1 c_1 c_3"},
  });
  switch (kind) {
    case PolyKind::t1:
      return t1;
    case PolyKind::t3:
      return t3;
    case PolyKind::t4:
      return t4;
    case PolyKind::t6:
      return t6;
  }
  throw DomainError("unknown T-polynomial kind");
}

inline void require_nontrivial_base(const Word& w, const char* what) {
  if (w.alphabet() != Alphabet::base()) {
    throw AlphabetError(std::string(what) + " must be a word in t, u");
  }
  if (w.is_identity()) {
    throw DomainError(std::string(what) + " must be a nontrivial word");
  }
}

// T_i(ā, c̄) evaluated at the given (unbarred) a and c.
inline RingElement t_poly(PolyKind kind, const Word& a, const Word& c) {
  require_nontrivial_base(a, "a");
  require_nontrivial_base(c, "c");
  const Assignment assignment{{"a", a}, {"c", c}};
  RingElement x(Alphabet::quad());
  for (const SignedPattern& term : t_poly_terms(kind)) {
    x.add_term(eval_pattern(term.pattern, assignment), term.sign);
  }
  return x;
}

// H(nu, mu) = nu_1 mu_3 + mu_1^-1 nu_3^-1 - nu_1^-1 mu_3 nu_3^-1
//             - nu_1 mu_1^-1 nu_3.
// The four terms are returned in this order, with their signs.
inline std::array<std::pair<int, Word>, 4> hexagon_terms(const Word& nu,
                                                         const Word& mu) {
  if (nu.alphabet() != Alphabet::base() || mu.alphabet() != Alphabet::base()) {
    throw AlphabetError("hexagon arguments must be words in t, u");
  }
  const Word nu1 = rename(nu, Subscript::one);
  const Word nu3 = rename(nu, Subscript::three);
  const Word mu1 = rename(mu, Subscript::one);
  const Word mu3 = rename(mu, Subscript::three);
  return {{
      {+1, nu1 * mu3},
      {+1, invert(mu1) * invert(nu3)},
      {-1, invert(nu1) * mu3 * invert(nu3)},
      {-1, nu1 * invert(mu1) * nu3},
  }};
}

inline RingElement hexagon(const Word& nu, const Word& mu) {
  RingElement x(Alphabet::quad());
  for (const auto& [sign, w] : hexagon_terms(nu, mu)) {
    x.add_term(w, sign);
  }
  return x;
}

inline void require_positive_k(const Integer& k) {
  if (k < 1) {
    throw DomainError("k must be a positive integer, got " + k.str());
  }
}

struct MarkerMonomials {
  Word m1;
  Word m2;
};

// m1(k) = t_1^-1 t_3 u_3^-k t_3^-2,  m2(k) = t_1^2 u_1^k t_1^-1 t_3.
inline MarkerMonomials monomials_m(const Integer& k) {
  require_positive_k(k);
  const Alphabet q = Alphabet::quad();
  return {
      Word::from_syllables(q, {{Letter::t_1, -1},
                               {Letter::t_3, 1},
                               {Letter::u_3, -k},
                               {Letter::t_3, -2}}),
      Word::from_syllables(q, {{Letter::t_1, 2},
                               {Letter::u_1, k},
                               {Letter::t_1, -1},
                               {Letter::t_3, 1}}),
  };
}

inline Functional psi(const Integer& k) {
  auto [m1, m2] = monomials_m(k);
  return Functional({{m1, 1}, {m2, -1}});
}

enum class Disk { delta1, delta2 };

inline std::string_view disk_name(Disk d) {
  return d == Disk::delta1 ? "d1" : "d2";
}

struct W3Value {
  RingElement value;
  Disk disk;
  Integer k;
};

// The pair (a, c) = (t, t u^k t^-1), i.e. (ā, c̄) = (t^-1, t u^-k t^-1).
inline std::pair<Word, Word> target_arguments(const Integer& k) {
  const Alphabet b = Alphabet::base();
  return {Word::power(b, Letter::t, 1),
          Word::from_syllables(b, {{Letter::t, 1}, {Letter::u, k}, {Letter::t, -1}})};
}

// Target built from the T-polynomial formulas only.
inline RingElement target_from_formulas(Disk disk, const Integer& k) {
  require_positive_k(k);
  auto [a, c] = target_arguments(k);
  RingElement t4 = t_poly(PolyKind::t4, a, c);
  if (disk == Disk::delta1) {
    return t4;
  }
  return scale(2, t4) + t_poly(PolyKind::t6, a, c);
}

// Target built from the written-out expansions only.
inline RingElement target_from_closed_form(
    Disk disk, const Integer& k,
    std::span<const ClosedFormTerm> t4_terms = t4_target_closed_form,
    std::span<const ClosedFormTerm> t6_terms = t6_target_closed_form) {
  require_positive_k(k);
  RingElement t4 = instantiate_closed_form(t4_terms, k);
  if (disk == Disk::delta1) {
    return t4;
  }
  return scale(2, t4) + instantiate_closed_form(t6_terms, k);
}

// W3 of the barbell t nu_B nu_R t u^k t^-1 relative to the given disk. Throws
// if the formula-built value disagrees with the written-out expansion.
inline W3Value w3_target(Disk disk, const Integer& k) {
  RingElement value = target_from_formulas(disk, k);
  if (value != target_from_closed_form(disk, k)) {
    throw Error("target for disk " + std::string(disk_name(disk)) + ", k=" +
                k.str() + " disagrees with its closed-form expansion");
  }
  return {std::move(value), disk, k};
}

struct AdmissiblePair {
  Word a;
  Word c;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) =
      default;
};

// Both words nontrivial; a ends in a t-power and c begins with a u-power, or
// a ends in a u-power and c begins with a t-power.
inline bool is_admissible(const Word& a, const Word& c) {
  if (a.alphabet() != Alphabet::base() || c.alphabet() != Alphabet::base()) {
    return false;
  }
  auto tail = boundary_letter(a, Side::tail);
  auto head = boundary_letter(c, Side::head);
  if (!tail || !head) {
    return false;
  }
  return (tail->letter == Letter::t && head->letter == Letter::u) ||
         (tail->letter == Letter::u && head->letter == Letter::t);
}

// All nontrivial BASE words with at most max_syllables syllables and
// exponents in [-max_exponent, max_exponent], in word order.
inline std::vector<Word> enumerate_words(int max_syllables, int max_exponent) {
  if (max_syllables < 1 || max_exponent < 1) {
    throw DomainError("enumeration bounds must be at least 1");
  }
  std::vector<int> exponents;
  for (int e = -max_exponent; e <= max_exponent; ++e) {
    if (e != 0) {
      exponents.push_back(e);
    }
  }
  std::vector<Word> out;
  for (Letter first : {Letter::t, Letter::u}) {
    std::vector<Word> layer = {Word(Alphabet::base())};
    for (int n = 1; n <= max_syllables; ++n) {
      Letter l = (n % 2 == 1) ? first
                              : (first == Letter::t ? Letter::u : Letter::t);
      std::vector<Word> next;
      next.reserve(layer.size() * exponents.size());
      for (const Word& w : layer) {
        for (int e : exponents) {
          Word x = w;
          x.append(l, e);
          next.push_back(std::move(x));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Admissible pairs within the bounds, ordered by (|a| + |c|, a, c) where |.|
// counts syllables.
inline std::vector<AdmissiblePair> enumerate_admissible(int max_syllables,
                                                        int max_exponent) {
  const std::vector<Word> words = enumerate_words(max_syllables, max_exponent);
  std::vector<AdmissiblePair> pairs;
  for (const Word& a : words) {
    for (const Word& c : words) {
      if (is_admissible(a, c)) {
        pairs.push_back({a, c});
      }
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const AdmissiblePair& x, const AdmissiblePair& y) {
                     return x.a.size() + x.c.size() < y.a.size() + y.c.size();
                   });
  return pairs;
}

struct SpanGenerator {
  PolyKind kind;
  AdmissiblePair pair;
  RingElement value;
};

// Calls fn(kind, pair, value) for every requested kind of every admissible
// pair, pair-major, in enumeration order.
template <typename Fn>
void for_each_span_generator(std::span<const AdmissiblePair> pairs,
                             std::span<const PolyKind> kinds, Fn&& fn) {
  for (const AdmissiblePair& p : pairs) {
    for (PolyKind kind : kinds) {
      fn(kind, p, t_poly(kind, p.a, p.c));
    }
  }
}

inline std::vector<SpanGenerator> span_generators(
    int max_syllables, int max_exponent,
    std::span<const PolyKind> kinds = all_poly_kinds) {
  const auto pairs = enumerate_admissible(max_syllables, max_exponent);
  std::vector<SpanGenerator> out;
  out.reserve(pairs.size() * kinds.size());
  for_each_span_generator(pairs, kinds,
                          [&](PolyKind kind, const AdmissiblePair& p,
                              RingElement value) {
                            out.push_back({kind, p, std::move(value)});
                          });
  return out;
}

// Words in the symbols t, u, nu_B, nu_R naming barbell diffeomorphisms. No
// relations beyond merging adjacent powers of the same symbol.
class BarbellWord {
 public:
  enum class Symbol : std::uint8_t { t, u, nu_B, nu_R };

  struct Factor {
    Symbol symbol;
    Integer exponent;

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  BarbellWord() = default;

  BarbellWord& append(Symbol s, const Integer& exponent) {
    if (exponent.is_zero()) {
      return *this;
    }
    if (!factors_.empty() && factors_.back().symbol == s) {
      factors_.back().exponent += exponent;
      if (factors_.back().exponent.is_zero()) {
        factors_.pop_back();
      }
    } else {
      factors_.push_back({s, exponent});
    }
    return *this;
  }

  const std::vector<Factor>& factors() const { return factors_; }

  friend bool operator==(const BarbellWord&, const BarbellWord&) = default;

 private:
  std::vector<Factor> factors_;
};

inline std::string to_string(const BarbellWord& w) {
  if (w.factors().empty()) {
    return "1";
  }
  constexpr std::array<std::string_view, 4> names = {"t", "u", "nu_B", "nu_R"};
  std::string out;
  for (const auto& f : w.factors()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += names[static_cast<std::size_t>(f.symbol)];
    if (f.exponent != 1) {
      out += '^' + f.exponent.str();
    }
  }
  return out;
}

// t^x1 u^y1 t^x2 ... u^yn t^x(n+1) -> t^x1 nu_R nu_B u^y1 nu_B^-1 nu_R^-1 t^x2 ...
inline BarbellWord spin_to_barbell(const Word& s) {
  if (s.alphabet() != Alphabet::base()) {
    throw AlphabetError("spin words are words in t, u");
  }
  auto head = boundary_letter(s, Side::head);
  auto tail = boundary_letter(s, Side::tail);
  if (!head || head->letter != Letter::t || tail->letter != Letter::t) {
    throw DomainError("spin word must start and end with a power of t, got " +
                      to_string(s));
  }
  using S = BarbellWord::Symbol;
  BarbellWord out;
  for (const Syllable& syl : s.syllables()) {
    if (syl.letter == Letter::t) {
      out.append(S::t, syl.exponent);
    } else {
      out.append(S::nu_R, 1);
      out.append(S::nu_B, 1);
      out.append(S::u, syl.exponent);
      out.append(S::nu_B, -1);
      out.append(S::nu_R, -1);
    }
  }
  return out;
}

}  // namespace barbell
