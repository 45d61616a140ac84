#pragma once

// Reduced words in the free groups <t, u> and <t_1, u_1, t_3, u_3>.
//
// A Word is stored run-length encoded: a sequence of (letter, exponent)
// syllables with nonzero exponents and no two adjacent syllables on the same
// letter. Every constructor and operation returns a reduced word, so two
// Words are equal exactly when they denote the same group element.

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "barbell/error.hpp"

namespace barbell {

using Integer = boost::multiprecision::cpp_int;

enum class Letter : std::uint8_t { t, u, t_1, u_1, t_3, u_3 };

inline constexpr std::string_view letter_name(Letter l) {
  constexpr std::array<std::string_view, 6> names = {"t",   "u",   "t_1",
                                                     "u_1", "t_3", "u_3"};
  return names[static_cast<std::size_t>(l)];
}

inline std::ostream& operator<<(std::ostream& os, Letter l) {
  return os << letter_name(l);
}

enum class Subscript : std::uint8_t { one = 1, three = 3 };

inline constexpr int subscript_value(Subscript s) { return static_cast<int>(s); }

// One of the two fixed alphabets. BASE = {t, u}; QUAD = {t_1, u_1, t_3, u_3}.
class Alphabet {
 public:
  enum class Id : std::uint8_t { base, quad };

  static constexpr Alphabet base() { return Alphabet(Id::base); }
  static constexpr Alphabet quad() { return Alphabet(Id::quad); }

  constexpr Id id() const { return id_; }

  constexpr std::span<const Letter> letters() const {
    if (id_ == Id::base) {
      return base_letters;
    }
    return quad_letters;
  }

  constexpr bool contains(Letter l) const {
    for (Letter x : letters()) {
      if (x == l) {
        return true;
      }
    }
    return false;
  }

  constexpr std::string_view name() const {
    return id_ == Id::base ? "BASE" : "QUAD";
  }

  static Alphabet from_name(std::string_view name) {
    if (name == "BASE") {
      return base();
    }
    if (name == "QUAD") {
      return quad();
    }
    throw AlphabetError("unknown alphabet '" + std::string(name) + "'");
  }

  constexpr auto operator<=>(const Alphabet&) const = default;

 private:
  constexpr explicit Alphabet(Id id) : id_(id) {}

  static constexpr std::array<Letter, 2> base_letters = {Letter::t, Letter::u};
  static constexpr std::array<Letter, 4> quad_letters = {
      Letter::t_1, Letter::u_1, Letter::t_3, Letter::u_3};

  Id id_;
};

inline std::ostream& operator<<(std::ostream& os, Alphabet a) {
  return os << a.name();
}

struct Syllable {
  Letter letter;
  Integer exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  // The identity word.
  explicit Word(Alphabet alphabet = Alphabet::base()) : alphabet_(alphabet) {}

  // Multiplies the syllables together and reduces. Zero exponents are
  // allowed here and simply vanish.
  static Word from_syllables(Alphabet alphabet,
                             std::span<const Syllable> syllables) {
    Word w(alphabet);
    for (const Syllable& s : syllables) {
      w.append(s.letter, s.exponent);
    }
    return w;
  }

  static Word from_syllables(Alphabet alphabet,
                             std::initializer_list<Syllable> syllables) {
    return from_syllables(alphabet,
                          std::span<const Syllable>(syllables.begin(),
                                                    syllables.size()));
  }

  static Word power(Alphabet alphabet, Letter l, const Integer& exponent) {
    Word w(alphabet);
    w.append(l, exponent);
    return w;
  }

  Alphabet alphabet() const { return alphabet_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Number of syllables.
  std::size_t size() const { return syllables_.size(); }

  // Right-multiplies by l^exponent, reducing against the last syllable.
  Word& append(Letter l, const Integer& exponent) {
    if (!alphabet_.contains(l)) {
      throw AlphabetError("letter " + std::string(letter_name(l)) +
                          " is not in alphabet " +
                          std::string(alphabet_.name()));
    }
    if (exponent.is_zero()) {
      return *this;
    }
    if (!syllables_.empty() && syllables_.back().letter == l) {
      syllables_.back().exponent += exponent;
      if (syllables_.back().exponent.is_zero()) {
        syllables_.pop_back();
      }
    } else {
      syllables_.push_back({l, exponent});
    }
    return *this;
  }

  Word& operator*=(const Word& rhs) {
    if (rhs.alphabet_ != alphabet_) {
      throw AlphabetError("cannot multiply a " +
                          std::string(alphabet_.name()) + " word by a " +
                          std::string(rhs.alphabet_.name()) + " word");
    }
    for (const Syllable& s : rhs.syllables_) {
      append(s.letter, s.exponent);
    }
    return *this;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Total order: alphabet, then syllable count, then lexicographic on
  // (letter, exponent) syllable by syllable.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (auto c = x.alphabet_ <=> y.alphabet_; c != 0) {
      return c;
    }
    if (auto c = x.syllables_.size() <=> y.syllables_.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < x.syllables_.size(); ++i) {
      const Syllable& a = x.syllables_[i];
      const Syllable& b = y.syllables_[i];
      if (auto c = a.letter <=> b.letter; c != 0) {
        return c;
      }
      int c = a.exponent.compare(b.exponent);
      if (c != 0) {
        return c < 0 ? std::strong_ordering::less
                     : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  Alphabet alphabet_;
  std::vector<Syllable> syllables_;
};

inline Word concat(const Word& v, const Word& w) {
  Word r = v;
  r *= w;
  return r;
}

inline Word operator*(const Word& v, const Word& w) { return concat(v, w); }

inline Word invert(const Word& w) {
  Word r(w.alphabet());
  auto syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    r.append(it->letter, -it->exponent);
  }
  return r;
}

inline Letter rename_letter(Letter l, Subscript s) {
  switch (l) {
    case Letter::t:
      return s == Subscript::one ? Letter::t_1 : Letter::t_3;
    case Letter::u:
      return s == Subscript::one ? Letter::u_1 : Letter::u_3;
    default:
      throw AlphabetError("rename expects a BASE letter, got " +
                          std::string(letter_name(l)));
  }
}

// w(t, u) -> w(t_s, u_s).
inline Word rename(const Word& w, Subscript s) {
  if (w.alphabet() != Alphabet::base()) {
    throw AlphabetError("rename expects a BASE word");
  }
  Word r(Alphabet::quad());
  for (const Syllable& syl : w.syllables()) {
    r.append(rename_letter(syl.letter, s), syl.exponent);
  }
  return r;
}

inline Letter base_letter(Letter l) {
  switch (l) {
    case Letter::t_1:
    case Letter::t_3:
      return Letter::t;
    case Letter::u_1:
    case Letter::u_3:
      return Letter::u;
    default:
      return l;
  }
}

inline Subscript letter_subscript(Letter l) {
  switch (l) {
    case Letter::t_1:
    case Letter::u_1:
      return Subscript::one;
    case Letter::t_3:
    case Letter::u_3:
      return Subscript::three;
    default:
      throw AlphabetError("letter " + std::string(letter_name(l)) +
                          " has no subscript");
  }
}

enum class Side : std::uint8_t { head, tail };

struct BoundaryLetter {
  Letter letter;
  int sign;  // +1 or -1

  friend bool operator==(const BoundaryLetter&, const BoundaryLetter&) =
      default;
};

inline std::optional<BoundaryLetter> boundary_letter(const Word& w, Side side) {
  if (w.is_identity()) {
    return std::nullopt;
  }
  const Syllable& s =
      side == Side::head ? w.syllables().front() : w.syllables().back();
  return BoundaryLetter{s.letter, s.exponent.sign()};
}

struct Block {
  Subscript tag;
  Word word;  // over BASE, never the identity

  friend bool operator==(const Block&, const Block&) = default;
};

// Factors a QUAD word into maximal runs of same-subscript syllables, each
// pulled back to BASE.
inline std::vector<Block> split_blocks(const Word& w) {
  if (w.alphabet() != Alphabet::quad()) {
    throw AlphabetError("split_blocks expects a QUAD word");
  }
  std::vector<Block> blocks;
  for (const Syllable& s : w.syllables()) {
    Subscript tag = letter_subscript(s.letter);
    if (blocks.empty() || blocks.back().tag != tag) {
      blocks.push_back({tag, Word(Alphabet::base())});
    }
    blocks.back().word.append(base_letter(s.letter), s.exponent);
  }
  return blocks;
}

inline std::string to_string(const Word& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter_name(s.letter);
    if (s.exponent != 1) {
      out += '^';
      out += s.exponent.str();
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << to_string(w);
}

namespace detail {

struct LetterToken {
  Letter letter;
  std::size_t length;
};

inline std::optional<LetterToken> match_letter(std::string_view text,
                                               std::size_t pos) {
  if (pos >= text.size() || (text[pos] != 't' && text[pos] != 'u')) {
    return std::nullopt;
  }
  bool is_t = text[pos] == 't';
  if (pos + 1 < text.size() && text[pos + 1] == '_') {
    if (pos + 2 < text.size() && text[pos + 2] == '1') {
      return LetterToken{is_t ? Letter::t_1 : Letter::u_1, 3};
    }
    if (pos + 2 < text.size() && text[pos + 2] == '3') {
      return LetterToken{is_t ? Letter::t_3 : Letter::u_3, 3};
    }
    return std::nullopt;
  }
  return LetterToken{is_t ? Letter::t : Letter::u, 1};
}

inline bool is_subscripted(Letter l) {
  return l != Letter::t && l != Letter::u;
}

// Parses a syllable sequence; `alphabet` may be empty to infer it.
inline Word parse_word_impl(std::string_view text,
                            std::optional<Alphabet> alphabet) {
  if (text == "1" || text == "e") {
    return Word(alphabet.value_or(Alphabet::base()));
  }
  if (text.empty()) {
    throw ParseError("empty word", 0);
  }
  std::vector<Syllable> syllables;
  std::optional<bool> subscripted;
  std::size_t pos = 0;
  while (true) {
    auto tok = match_letter(text, pos);
    if (!tok) {
      throw ParseError("expected a letter (t, u, t_1, u_1, t_3 or u_3)", pos);
    }
    if (alphabet && !alphabet->contains(tok->letter)) {
      throw AlphabetError("unknown letter " +
                          std::string(letter_name(tok->letter)) +
                          " for alphabet " + std::string(alphabet->name()) +
                          " at position " + std::to_string(pos));
    }
    bool sub = is_subscripted(tok->letter);
    if (subscripted && *subscripted != sub) {
      throw AlphabetError(
          "word mixes subscripted and unsubscripted letters at position " +
          std::to_string(pos));
    }
    subscripted = sub;
    pos += tok->length;

    Integer exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      std::size_t digits = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == digits) {
        throw ParseError("expected an integer exponent", start);
      }
      exponent = Integer(std::string(text.substr(digits, pos - digits)));
      if (exponent.is_zero()) {
        throw ParseError("zero exponent", start);
      }
      if (negative) {
        exponent = -exponent;
      }
    }
    syllables.push_back({tok->letter, std::move(exponent)});

    if (pos == text.size()) {
      break;
    }
    if (text[pos] != ' ') {
      throw ParseError("expected a space between syllables", pos);
    }
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
    }
    if (pos == text.size()) {
      throw ParseError("trailing whitespace", pos);
    }
  }
  Alphabet a = alphabet.value_or(*subscripted ? Alphabet::quad()
                                              : Alphabet::base());
  return Word::from_syllables(a, syllables);
}

}  // namespace detail

inline Word parse_word(std::string_view text, Alphabet alphabet) {
  return detail::parse_word_impl(text, alphabet);
}

// Infers the alphabet from the letters used; "1" parses as the BASE identity.
inline Word parse_word(std::string_view text) {
  return detail::parse_word_impl(text, std::nullopt);
}

}  // namespace barbell
