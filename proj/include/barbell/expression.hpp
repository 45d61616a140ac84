#pragma once

// Text form of ring elements, e.g. "t_1 u_3 - 2 t_1^-1 + 1/2 u_1 t_3".
//
//   expr  := [sign] term (WS sign WS term)*
//   term  := coeff | [coeff WS] word
//   coeff := INT | INT "/" INT
//
// Words follow the word grammar. A leading sign may be glued to the first
// token ("-t_1", "-2 t_1"). This is the exact inverse of to_string.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barbell/error.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/word.hpp"

namespace barbell {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Token> split_spaces(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ') {
      ++pos;
    }
    if (pos > start) {
      out.push_back({text.substr(start, pos - start), start});
    }
  }
  return out;
}

inline bool is_number_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
    return false;
  }
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline RingElement parse_ring_expression(
    std::string_view text, Alphabet default_alphabet = Alphabet::quad()) {
  auto tokens = detail::split_spaces(text);
  if (tokens.empty()) {
    throw ParseError("empty expression", 0);
  }

  struct Term {
    Rational coeff;
    std::optional<Word> word;
  };
  std::vector<Term> terms;

  std::size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  while (i < tokens.size()) {
    detail::Token tok = tokens[i];
    if (!expect_term) {
      if (tok.text != "+" && tok.text != "-") {
        throw ParseError("expected '+' or '-'", tok.offset);
      }
      sign = tok.text == "-" ? -1 : 1;
      expect_term = true;
      ++i;
      continue;
    }
    if (terms.empty() && sign == 1 && (tok.text == "-" || tok.text == "+")) {
      sign = tok.text == "-" ? -1 : 1;
      ++i;
      continue;
    }
    // Leading sign glued onto the first token of the term.
    if (terms.empty() && tok.text.size() > 1 &&
        (tok.text[0] == '-' || tok.text[0] == '+') &&
        !detail::is_number_token(tok.text)) {
      if (tok.text[0] == '-') {
        sign = -sign;
      }
      tok.text.remove_prefix(1);
      tok.offset += 1;
    }

    Term term{Rational(sign), std::nullopt};
    bool have_coeff = false;
    if (detail::is_number_token(tok.text)) {
      try {
        term.coeff *= parse_rational(tok.text);
      } catch (const ParseError& e) {
        throw ParseError("invalid coefficient '" + std::string(tok.text) + "'",
                         tok.offset + e.position());
      }
      have_coeff = true;
      ++i;
    }
    std::size_t j = i;
    // The first word token may be the sign-stripped token itself.
    std::string word_text;
    std::size_t word_offset = tok.offset;
    if (!have_coeff) {
      word_text = std::string(tok.text);
      j = i + 1;
    } else if (j < tokens.size() && tokens[j].text != "+" &&
               tokens[j].text != "-") {
      word_text = std::string(tokens[j].text);
      word_offset = tokens[j].offset;
      ++j;
    }
    while (j < tokens.size() && tokens[j].text != "+" &&
           tokens[j].text != "-") {
      if (detail::is_number_token(tokens[j].text)) {
        throw ParseError("coefficient inside a word", tokens[j].offset);
      }
      word_text += ' ';
      word_text += tokens[j].text;
      ++j;
    }
    if (!word_text.empty()) {
      try {
        term.word = parse_word(word_text);
      } catch (const ParseError& e) {
        throw ParseError("invalid word '" + word_text + "'",
                         word_offset + e.position());
      }
    } else if (!have_coeff) {
      throw ParseError("expected a term", tok.offset);
    }
    terms.push_back(std::move(term));
    i = j;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) {
    throw ParseError("expression ends with an operator", text.size());
  }

  std::optional<Alphabet> alphabet;
  for (const Term& t : terms) {
    if (t.word && !t.word->is_identity()) {
      if (alphabet && *alphabet != t.word->alphabet()) {
        throw AlphabetError("expression mixes BASE and QUAD words");
      }
      alphabet = t.word->alphabet();
    }
  }
  Alphabet a = alphabet.value_or(default_alphabet);
  RingElement x(a);
  for (const Term& t : terms) {
    Word w = (t.word && !t.word->is_identity()) ? *t.word : Word(a);
    x.add_term(w, t.coeff);
  }
  return x;
}

}  // namespace barbell
