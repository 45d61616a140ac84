#pragma once

// Independent reference implementations used only by the tests. Words are
// spelled out one letter at a time (no run-length encoding) and reduced with
// a stack; nothing here calls the library's word arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "barbell/barbell.hpp"

namespace oracle {

// Letter codes: 1..6 for t, u, t_1, u_1, t_3, u_3; negative for inverses.
using Letters = std::vector<int>;

inline int code_of(std::string_view name) {
  static const std::map<std::string, int, std::less<>> codes = {
      {"t", 1}, {"u", 2}, {"t_1", 3}, {"u_1", 4}, {"t_3", 5}, {"u_3", 6}};
  return codes.find(name)->second;
}

inline std::string name_of(int code) {
  static const char* names[] = {"", "t", "u", "t_1", "u_1", "t_3", "u_3"};
  return names[code < 0 ? -code : code];
}

inline void push_reduced(Letters& out, int x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

inline Letters reduce(const Letters& w) {
  Letters out;
  for (int x : w) {
    push_reduced(out, x);
  }
  return out;
}

inline Letters mul(const Letters& v, const Letters& w) {
  Letters out = v;
  for (int x : w) {
    push_reduced(out, x);
  }
  return out;
}

inline Letters inv(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& x : out) {
    x = -x;
  }
  return out;
}

// t -> t_s, u -> u_s for s in {1, 3}.
inline Letters sub(const Letters& w, int s) {
  Letters out = w;
  for (int& x : out) {
    int mag = (x < 0 ? -x : x) + (s == 1 ? 2 : 4);
    x = x < 0 ? -mag : mag;
  }
  return out;
}

inline Letters letters_of(const barbell::Word& w) {
  Letters out;
  for (const auto& s : w.syllables()) {
    int code = code_of(barbell::letter_name(s.letter));
    long e = static_cast<long>(s.exponent);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) {
      out.push_back(e < 0 ? -code : code);
    }
  }
  return out;
}

// Renders in the word grammar so that the result can be fed to parse_word.
inline std::string text_of(const Letters& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    int mag = w[i] < 0 ? -w[i] : w[i];
    long e = 0;
    while (i < w.size() && (w[i] == mag || w[i] == -mag)) {
      e += w[i] > 0 ? 1 : -1;
      ++i;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += name_of(mag);
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

// Every reduced word over {t, u} with 1..max_syllables syllables and
// exponents in [-max_exponent, max_exponent] \ {0}, plus the identity when
// requested. Built by extending letter strings, not syllable lists.
inline std::vector<Letters> all_base_words(int max_syllables, int max_exponent,
                                           bool with_identity) {
  std::vector<Letters> out;
  if (with_identity) {
    out.push_back({});
  }
  std::vector<Letters> frontier = {{}};
  for (int n = 1; n <= max_syllables; ++n) {
    std::vector<Letters> next;
    for (const Letters& w : frontier) {
      for (int letter : {1, 2}) {
        if (!w.empty() && (w.back() == letter || w.back() == -letter)) {
          continue;
        }
        for (int e = -max_exponent; e <= max_exponent; ++e) {
          if (e == 0) {
            continue;
          }
          Letters x = w;
          for (int i = 0; i < (e < 0 ? -e : e); ++i) {
            x.push_back(e < 0 ? -letter : letter);
          }
          next.push_back(std::move(x));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

struct Factor {
  int var;  // index into the variable list
  bool inverted;
  int subscript;
};

inline std::vector<Factor> factors_of(const barbell::Pattern& p,
                                      const std::vector<std::string>& vars) {
  std::vector<Factor> out;
  for (const auto& f : p.factors()) {
    int v = static_cast<int>(std::find(vars.begin(), vars.end(), f.variable) -
                             vars.begin());
    out.push_back({v, f.inverted, barbell::subscript_value(f.subscript)});
  }
  return out;
}

using OracleSolution = std::vector<Letters>;  // one value per variable

// All assignments from the box (identity words excluded unless asked for)
// whose pattern value equals the target.
inline std::set<OracleSolution> brute_force_solve(const barbell::Pattern& p,
                                                  const Letters& target,
                                                  int max_syllables,
                                                  int max_exponent,
                                                  bool allow_trivial = false) {
  const auto vars = p.variables();
  const auto factors = factors_of(p, vars);
  const auto words = all_base_words(max_syllables, max_exponent, allow_trivial);
  // variant[w][inverted][subscript==3]
  struct Variants {
    Letters v[2][2];
  };
  std::vector<Variants> variants(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (int inverted = 0; inverted < 2; ++inverted) {
      Letters base = inverted ? inv(words[i]) : words[i];
      variants[i].v[inverted][0] = sub(base, 1);
      variants[i].v[inverted][1] = sub(base, 3);
    }
  }
  std::set<OracleSolution> out;
  Letters buf;
  std::vector<std::size_t> idx(vars.size(), 0);
  auto evaluate = [&]() {
    buf.clear();
    for (const Factor& f : factors) {
      for (int x : variants[idx[f.var]].v[f.inverted][f.subscript == 3]) {
        push_reduced(buf, x);
      }
    }
    return buf == target;
  };
  if (vars.size() == 1) {
    for (idx[0] = 0; idx[0] < words.size(); ++idx[0]) {
      if (evaluate()) {
        out.insert({words[idx[0]]});
      }
    }
    return out;
  }
  for (idx[0] = 0; idx[0] < words.size(); ++idx[0]) {
    for (idx[1] = 0; idx[1] < words.size(); ++idx[1]) {
      if (evaluate()) {
        out.insert({words[idx[0]], words[idx[1]]});
      }
    }
  }
  return out;
}

// Rank by plain Gauss-Jordan elimination over exact rationals on a dense
// matrix whose columns are the joint support.
inline std::size_t rational_rank(const std::vector<barbell::RingElement>& xs) {
  using Q = boost::multiprecision::cpp_rational;
  std::map<barbell::Word, std::size_t> column;
  for (const auto& x : xs) {
    for (const auto& [w, c] : x.terms()) {
      column.emplace(w, 0);
    }
  }
  std::size_t n = 0;
  for (auto& [w, i] : column) {
    i = n++;
  }
  std::vector<std::vector<Q>> m;
  for (const auto& x : xs) {
    std::vector<Q> row(n);
    for (const auto& [w, c] : x.terms()) {
      row[column[w]] = c;
    }
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][col] != 0) {
        Q f = m[r][col] / m[rank][col];
        for (std::size_t j = col; j < n; ++j) {
          m[r][j] -= f * m[rank][j];
        }
      }
    }
    ++rank;
  }
  return rank;
}

// Random reduced word over {t, u} as letters.
inline Letters random_letters(std::mt19937_64& rng, int max_syllables,
                              int max_exponent) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> mag(1, max_exponent);
  std::uniform_int_distribution<int> coin(0, 1);
  Letters w;
  int n = len(rng);
  int letter = coin(rng) ? 1 : 2;
  for (int i = 0; i < n; ++i) {
    int e = mag(rng) * (coin(rng) ? 1 : -1);
    for (int j = 0; j < (e < 0 ? -e : e); ++j) {
      w.push_back(e < 0 ? -letter : letter);
    }
    letter = 3 - letter;
  }
  return w;
}

inline int syllable_count(const Letters& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || (w[i] != w[i - 1] && w[i] != -w[i - 1])) {
      ++n;
    }
  }
  return n;
}

inline int max_abs_exponent(const Letters& w) {
  int best = 0, run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

// Every pattern the library solves: the distinct T-polynomial monomials and
// the four hexagon terms.
inline std::vector<barbell::Pattern> all_known_patterns() {
  std::vector<barbell::Pattern> out;
  for (const auto& d : barbell::distinct_t_monomials()) {
    out.push_back(d.pattern);
  }
  for (const auto& h : barbell::hexagon_patterns()) {
    out.push_back(h.pattern);
  }
  return out;
}

struct SolverInstance {
  barbell::Pattern pattern;
  Letters target;  // nonempty reduced QUAD word
};

// Nonempty random QUAD word with at most max_syllables syllables.
inline Letters random_quad_letters(std::mt19937_64& rng, int max_syllables,
                                   int max_exponent) {
  std::uniform_int_distribution<int> len(1, max_syllables);
  std::uniform_int_distribution<int> mag(1, max_exponent);
  std::uniform_int_distribution<int> letter(3, 6);
  Letters w;
  const int n = len(rng);
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    int l = letter(rng);
    while (l == prev) {
      l = letter(rng);
    }
    prev = l;
    int e = mag(rng) * (rng() % 2 ? 1 : -1);
    for (int j = 0; j < (e < 0 ? -e : e); ++j) {
      w.push_back(e < 0 ? -l : l);
    }
  }
  return w;
}

// Half the targets are pattern values of random small words (so solutions
// exist), half are random QUAD words. Targets have at most 6 syllables;
// roughly one in seven allows exponent 2.
inline std::vector<SolverInstance> random_solver_instances(std::size_t n,
                                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto patterns = all_known_patterns();
  std::uniform_int_distribution<std::size_t> pick(0, patterns.size() - 1);
  std::vector<SolverInstance> out;
  while (out.size() < n) {
    const barbell::Pattern& p = patterns[pick(rng)];
    const int e = rng() % 7 == 0 ? 2 : 1;
    Letters target;
    if (out.size() % 2 == 0) {
      const auto vars = p.variables();
      std::vector<Letters> values;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        values.push_back(random_letters(rng, 2, e));
      }
      for (const Factor& f : factors_of(p, vars)) {
        const Letters& v = values[f.var];
        target = mul(target, sub(f.inverted ? inv(v) : v, f.subscript));
      }
    } else {
      target = random_quad_letters(rng, 6, e);
    }
    int syllables = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (i == 0 || std::abs(target[i]) != std::abs(target[i - 1])) {
        ++syllables;
      }
    }
    if (target.empty() || syllables > 6) {
      continue;
    }
    out.push_back({p, std::move(target)});
  }
  return out;
}

struct Comparison {
  bool sound = true;          // every solver output evaluates to the target
  bool equal = true;          // solver output inside the box == oracle output
  std::size_t solver_total = 0;
  std::size_t oracle_total = 0;
  std::string detail;
};

// Box for the oracle: at most 4 syllables, exponents up to one more than the
// largest exponent in the target.
inline Comparison compare_with_oracle(const SolverInstance& inst,
                                      bool allow_trivial = false) {
  using namespace barbell;
  const Word target = parse_word(text_of(inst.target), Alphabet::quad());
  const int box_syllables = 4;
  const int box_exponent = max_abs_exponent(inst.target) + 1;
  const auto solutions =
      solve(inst.pattern, target, SolveOptions{.allow_trivial = allow_trivial});
  const auto vars = inst.pattern.variables();
  Comparison cmp;
  cmp.solver_total = solutions.size();
  std::set<OracleSolution> in_box;
  for (const Solution& s : solutions) {
    if (eval_pattern(inst.pattern, s.assignment) != target) {
      cmp.sound = false;
    }
    OracleSolution values;
    bool inside = true;
    for (const auto& v : vars) {
      const Letters w = letters_of(s.assignment.at(v));
      inside = inside && syllable_count(w) <= box_syllables &&
               max_abs_exponent(w) <= box_exponent;
      values.push_back(w);
    }
    if (inside) {
      in_box.insert(values);
    }
  }
  const auto expected = brute_force_solve(inst.pattern, inst.target,
                                          box_syllables, box_exponent,
                                          allow_trivial);
  cmp.oracle_total = expected.size();
  cmp.equal = in_box == expected;
  if (!cmp.sound || !cmp.equal) {
    cmp.detail = to_string(inst.pattern) + " = " + text_of(inst.target) +
                 ": solver " + std::to_string(in_box.size()) + " in box, oracle " +
                 std::to_string(expected.size());
  }
  return cmp;
}

}  // namespace oracle
