#pragma once

// Hand-transcribed closed forms, kept apart from the formula-driven code in
// barbell_w3.hpp and solver.hpp so the two can be checked against each other.
//
// Exponents written K / -K are instantiated with a concrete k >= 1.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "barbell/group_ring.hpp"
#include "barbell/word.hpp"

namespace barbell {

struct ClosedFormTerm {
  int sign;
  std::string_view word;
};

// T4(t^-1, t u^-k t^-1) written out term by term.
inline constexpr std::array<ClosedFormTerm, 8> t4_target_closed_form = {{
    {+1, "t_1^-1 t_3 u_3^-K t_3^-2"},
    {+1, "t_1 t_3 u_3^-K"},
    {-1, "t_1 u_1^-K t_1^-1 t_3^-1"},
    {-1, "t_1 u_1^-K t_1^-1 t_3"},
    {+1, "t_1^-1 t_3 u_3^-K t_3^-1"},
    {+1, "t_1 t_3 u_3^-K t_3^-1"},
    {-1, "t_1 u_1^-K t_1^-2 t_3^-1"},
    {-1, "t_1 u_1^-K t_3"},
}};

// T6(t^-1, t u^-k t^-1) written out term by term.
inline constexpr std::array<ClosedFormTerm, 16> t6_target_closed_form = {{
    {+1, "t_1 u_1^-K t_1^-1 u_3^-K t_3^-1"},
    {+1, "t_1 u_1^K t_1^-1 u_3^K t_3^-1"},
    {-1, "t_1 t_3 u_3^K"},
    {-1, "t_1 t_3 u_3^-K"},
    {+1, "t_1^-1 t_3 u_3^K t_3^-2"},
    {+1, "t_1^-1 t_3 u_3^-K t_3^-2"},
    {+1, "t_1^-1 t_3 u_3^-K t_3^-1"},
    {+1, "t_1^-1 t_3 u_3^K t_3^-1"},
    {-1, "t_1 u_1^-K t_1^-1 t_3^-1"},
    {-1, "t_1 u_1^K t_1^-1 t_3^-1"},
    {-1, "t_1 u_1^-K t_1^-2 t_3^-1"},
    {-1, "t_1 u_1^K t_1^-2 t_3^-1"},
    {+1, "t_1 u_1^-K t_3"},
    {+1, "t_1 u_1^K t_3"},
    {-1, "u_1^-K t_1^-1 t_3 u_3^-K t_3^-1"},
    {-1, "u_1^K t_1^-1 t_3 u_3^K t_3^-1"},
}};

// Replaces the placeholder K by the decimal value of k.
inline std::string instantiate_k(std::string_view text, const Integer& k) {
  std::string out;
  const std::string digits = k.str();
  for (char ch : text) {
    if (ch == 'K') {
      out += digits;
    } else {
      out += ch;
    }
  }
  return out;
}

inline RingElement instantiate_closed_form(
    std::span<const ClosedFormTerm> terms, const Integer& k) {
  RingElement x(Alphabet::quad());
  for (const ClosedFormTerm& term : terms) {
    x.add_term(parse_word(instantiate_k(term.word, k), Alphabet::quad()),
               term.sign);
  }
  return x;
}

// One row of the table of solutions to M(a, c) = m1(k) and M(a, c) = m2(k).
// Words use the K placeholder.
struct ReferenceTableRow {
  std::vector<int> appears_in;
  std::string_view pattern;  // Pattern::parse syntax
  std::string_view m1_a, m1_c;
  std::string_view m2_a, m2_c;
};

inline const std::vector<ReferenceTableRow>& reference_solution_table() {
  static const std::vector<ReferenceTableRow> rows = {
      {{1, 3, 4, 6}, "a_1 c^-1_3 a_3", "t^-1", "t u^K t^-1", "t^2 u^K t^-1", "t^2 u^K t^-2"},
      {{1, 3, 4, 6}, "c^-1_1 a_1 a_3", "t u^-K t^-2", "t u^-K t^-1", "t", "t^2 u^-K t^-2"},
      {{1, 4, 6}, "c^-1_1 a^-1_3", "t^2 u^K t^-1", "t", "t^-1", "t u^-K t^-2"},
      {{1, 4, 6}, "a^-1_1 c^-1_3", "t", "t^2 u^K t^-1", "t u^-K t^-2", "t^-1"},
      {{3, 6}, "c_1 a^-1_3 c_3", "t u^K t^-1", "t^-1", "t^2 u^K t^-2", "t^2 u^K t^-1"},
      {{3, 6}, "a^-1_1 c_3 a^-1_3", "t", "t u^-K t^-1", "t u^-K t^-2", "t^2 u^-K t^-2"},
      {{3}, "c_1 a_3", "t u^-K t^-2", "t^-1", "t", "t^2 u^K t^-1"},
      {{3}, "a_1 c_3", "t^-1", "t u^-K t^-2", "t^2 u^K t^-1", "t"},
      {{3, 6}, "c_1 a^-1_1 a^-1_3", "t^2 u^K t^-1", "t u^K t^-1", "t^-1", "t^2 u^K t^-2"},
      {{3}, "a_1 c^-1_1 c^-1_3", "t u^K t^-1", "t^2 u^K t^-1", "t^2 u^K t^-2", "t^-1"},
      {{4, 6}, "a^-1_1 c^-1_3 a^-1_3", "t", "t u^K t^-1", "t u^-K t^-2", "t^2 u^K t^-2"},
      // Only T4 contains this monomial.
      {{4}, "c^-1_1 a_3", "t u^-K t^-2", "t", "t", "t u^-K t^-2"},
      {{4}, "a_1 c^-1_3", "t^-1", "t^2 u^K t^-1", "t^2 u^K t^-1", "t^-1"},
      {{4, 6}, "c^-1_1 a^-1_1 a^-1_3", "t^2 u^K t^-1", "t u^-K t^-1", "t^-1", "t^2 u^-K t^-2"},
      {{6}, "c_1 a^-1_3", "t^2 u^K t^-1", "t^-1", "t^-1", "t^2 u^K t^-1"},
      {{6}, "c_1 a_1 a_3", "t u^-K t^-2", "t u^K t^-1", "t", "t^2 u^K t^-2"},
      {{6}, "c^-1_1 a^-1_3 c^-1_3", "t u^K t^-1", "t", "t^2 u^K t^-2", "t u^-K t^-2"},
      {{6}, "a_1 c_3 a_3", "t^-1", "t u^-K t^-1", "t^2 u^K t^-1", "t^2 u^-K t^-2"},
      {{6}, "a^-1_1 c^-1_1 c^-1_3", "t u^-K t^-1", "t^2 u^K t^-1", "t^2 u^-K t^-2", "t^-1"},
      {{6}, "a^-1_1 c_3", "t", "t u^-K t^-2", "t u^-K t^-2", "t"},
      {{6}, "a^-1_1 c_1 c_3", "t u^-K t^-1", "t u^-K t^-2", "t^2 u^-K t^-2", "t"},
  };
  return rows;
}

}  // namespace barbell
