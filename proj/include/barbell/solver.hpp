#pragma once

// Solves monomial equations M(x, y) = w in F = <t_1, u_1, t_3, u_3>, where M
// is a Pattern and the unknowns range over <t, u>.
//
// Method. Cut the pattern into groups of consecutive factors sharing a
// subscript, and cut the target into its maximal same-subscript blocks.
// Every group evaluates to a word in one subscript, so after dropping the
// groups that evaluate to 1 and merging neighbours with equal subscripts the
// surviving groups must match the target blocks one to one. For each choice
// of collapsing groups this yields a system of equations in <t, u>, which is
// solved by repeatedly isolating a variable that occurs once in some
// equation. The alignment is exhaustive for patterns with at most three
// groups, which covers every pattern used here; anything that does not
// resolve this way is brute-forced over a bounded box.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "barbell/barbell_w3.hpp"
#include "barbell/error.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/pattern.hpp"
#include "barbell/word.hpp"

namespace barbell {

struct Solution {
  Assignment assignment;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend bool operator<(const Solution& x, const Solution& y) {
    return x.assignment < y.assignment;
  }
};

struct SolveOptions {
  // Keep assignments in which some variable is the identity word.
  bool allow_trivial = false;
};

namespace detail {

// Either a constant BASE word (var < 0) or a variable power x^{+-1}.
struct SymItem {
  int var = -1;
  bool inverted = false;
  Word constant{Alphabet::base()};
};

using SymExpr = std::vector<SymItem>;

inline SymExpr normalize(const SymExpr& e) {
  SymExpr out;
  for (const SymItem& item : e) {
    if (item.var < 0) {
      if (item.constant.is_identity()) {
        continue;
      }
      if (!out.empty() && out.back().var < 0) {
        out.back().constant *= item.constant;
        if (out.back().constant.is_identity()) {
          out.pop_back();
        }
        continue;
      }
      out.push_back(item);
    } else {
      if (!out.empty() && out.back().var == item.var &&
          out.back().inverted != item.inverted) {
        out.pop_back();
        continue;
      }
      out.push_back(item);
    }
  }
  return out;
}

inline SymExpr inverse(const SymExpr& e) {
  SymExpr out;
  out.reserve(e.size());
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    SymItem item = *it;
    if (item.var < 0) {
      item.constant = invert(item.constant);
    } else {
      item.inverted = !item.inverted;
    }
    out.push_back(std::move(item));
  }
  return out;
}

inline SymExpr substitute(const SymExpr& e, int var, const SymExpr& value) {
  SymExpr out;
  const SymExpr value_inv = inverse(value);
  for (const SymItem& item : e) {
    if (item.var == var) {
      const SymExpr& v = item.inverted ? value_inv : value;
      out.insert(out.end(), v.begin(), v.end());
    } else {
      out.push_back(item);
    }
  }
  return normalize(out);
}

inline SymExpr constant_expr(const Word& w) {
  return normalize({SymItem{-1, false, w}});
}

inline std::size_t occurrences(const SymExpr& e, int var) {
  return static_cast<std::size_t>(std::count_if(
      e.begin(), e.end(), [&](const SymItem& i) { return i.var == var; }));
}

inline bool has_variables(const SymExpr& e) {
  return std::any_of(e.begin(), e.end(),
                     [](const SymItem& i) { return i.var >= 0; });
}

inline Word constant_value(const SymExpr& e) {
  Word w(Alphabet::base());
  for (const SymItem& item : e) {
    w *= item.constant;
  }
  return w;
}

struct Box {
  int max_syllables;
  int max_exponent;
  bool include_identity;
};

inline std::vector<Word> box_words(const Box& box) {
  std::vector<Word> out;
  if (box.include_identity) {
    out.push_back(Word(Alphabet::base()));
  }
  auto rest = enumerate_words(box.max_syllables, box.max_exponent);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Solves the relators r = 1 for `num_vars` unknowns. Returns every solution
// when the system is triangular, otherwise every solution inside `box`.
inline std::vector<std::vector<Word>> solve_relators(std::vector<SymExpr> relators,
                                                     int num_vars,
                                                     const Box& box) {
  std::vector<std::optional<SymExpr>> binding(num_vars);
  for (auto& r : relators) {
    r = normalize(r);
  }

  auto prune = [&]() -> bool {
    std::vector<SymExpr> kept;
    for (auto& r : relators) {
      if (r.empty()) {
        continue;
      }
      if (!has_variables(r)) {
        return false;
      }
      kept.push_back(std::move(r));
    }
    relators = std::move(kept);
    return true;
  };

  if (!prune()) {
    return {};
  }
  while (!relators.empty()) {
    // Prefer relators with a single unknown so constants get fixed first.
    std::optional<std::pair<std::size_t, int>> pick;
    for (std::size_t i = 0; i < relators.size() && !pick; ++i) {
      std::set<int> vars;
      for (const SymItem& item : relators[i]) {
        if (item.var >= 0) {
          vars.insert(item.var);
        }
      }
      if (vars.size() == 1 && occurrences(relators[i], *vars.begin()) == 1) {
        pick = {i, *vars.begin()};
      }
    }
    for (std::size_t i = 0; i < relators.size() && !pick; ++i) {
      for (int v = 0; v < num_vars; ++v) {
        if (occurrences(relators[i], v) == 1) {
          pick = {i, v};
          break;
        }
      }
    }
    if (!pick) {
      break;
    }
    auto [ri, var] = *pick;
    const SymExpr& r = relators[ri];
    auto at = std::find_if(r.begin(), r.end(),
                           [&](const SymItem& i) { return i.var == var; });
    // L x^s R = 1  =>  x^s = L^-1 R^-1.
    SymExpr left(r.begin(), at);
    SymExpr right(at + 1, r.end());
    SymExpr value = inverse(left);
    SymExpr right_inv = inverse(right);
    value.insert(value.end(), right_inv.begin(), right_inv.end());
    value = normalize(value);
    if (at->inverted) {
      value = inverse(value);
    }
    for (auto& other : relators) {
      other = substitute(other, var, value);
    }
    for (auto& b : binding) {
      if (b) {
        *b = substitute(*b, var, value);
      }
    }
    binding[var] = value;
    if (!prune()) {
      return {};
    }
  }

  std::vector<int> free_vars;
  for (int v = 0; v < num_vars; ++v) {
    if (!binding[v]) {
      free_vars.push_back(v);
    }
  }

  auto finish = [&](const std::vector<std::pair<int, Word>>& chosen)
      -> std::optional<std::vector<Word>> {
    std::vector<SymExpr> rs = relators;
    std::vector<std::optional<SymExpr>> bs = binding;
    for (const auto& [v, w] : chosen) {
      const SymExpr value = constant_expr(w);
      for (auto& r : rs) {
        r = substitute(r, v, value);
      }
      for (auto& b : bs) {
        if (b) {
          *b = substitute(*b, v, value);
        }
      }
      bs[v] = value;
    }
    for (const auto& r : rs) {
      if (!r.empty()) {
        return std::nullopt;
      }
    }
    std::vector<Word> values;
    for (const auto& b : bs) {
      values.push_back(constant_value(*b));
    }
    return values;
  };

  std::vector<std::vector<Word>> out;
  if (free_vars.empty()) {
    if (auto v = finish({})) {
      out.push_back(std::move(*v));
    }
    return out;
  }

  const std::vector<Word> candidates = box_words(box);
  std::vector<std::size_t> idx(free_vars.size(), 0);
  while (true) {
    std::vector<std::pair<int, Word>> chosen;
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
      chosen.push_back({free_vars[i], candidates[idx[i]]});
    }
    if (auto v = finish(chosen)) {
      out.push_back(std::move(*v));
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == candidates.size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == idx.size()) {
      break;
    }
  }
  return out;
}

struct PatternGroup {
  Subscript tag;
  SymExpr items;
};

inline std::vector<PatternGroup> pattern_groups(
    const Pattern& p, const std::map<std::string, int>& index) {
  std::vector<PatternGroup> groups;
  for (const PatternFactor& f : p.factors()) {
    if (groups.empty() || groups.back().tag != f.subscript) {
      groups.push_back({f.subscript, {}});
    }
    groups.back().items.push_back(
        SymItem{index.at(f.variable), f.inverted, Word(Alphabet::base())});
  }
  return groups;
}

inline Box fallback_box(const Word& target, bool allow_trivial) {
  Integer max_exp = 0;
  for (const Syllable& s : target.syllables()) {
    Integer e = abs(s.exponent);
    if (e > max_exp) {
      max_exp = e;
    }
  }
  return {static_cast<int>(target.size()) + 2,
          static_cast<int>(max_exp) + 1, allow_trivial};
}

}  // namespace detail

// Every assignment of BASE words to the pattern's variables whose evaluation
// reduces to `target`, sorted. Identity values are dropped unless
// options.allow_trivial is set.
inline std::vector<Solution> solve(const Pattern& p, const Word& target,
                                   const SolveOptions& options = {}) {
  if (target.alphabet() != Alphabet::quad()) {
    throw AlphabetError("solve: target must be a QUAD word");
  }
  if (target.is_identity()) {
    throw DomainError("solve: target must be a nontrivial word");
  }
  const auto& vars = p.variables();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    index[vars[i]] = static_cast<int>(i);
  }
  const int num_vars = static_cast<int>(vars.size());
  const auto groups = detail::pattern_groups(p, index);
  const auto blocks = split_blocks(target);
  const detail::Box box = detail::fallback_box(target, options.allow_trivial);

  std::set<Solution> found;
  auto accept = [&](const std::vector<Word>& values) {
    Solution s;
    for (int v = 0; v < num_vars; ++v) {
      if (values[v].is_identity() && !options.allow_trivial) {
        return;
      }
      s.assignment.emplace(vars[v], values[v]);
    }
    if (eval_pattern(p, s.assignment) == target) {
      found.insert(std::move(s));
    }
  };

  if (groups.size() > 3) {
    // No alignment enumeration; plain search over the box.
    for (auto& values : detail::solve_relators({}, num_vars, box)) {
      accept(values);
    }
    return {found.begin(), found.end()};
  }

  const unsigned branches = 1u << groups.size();
  for (unsigned mask = 0; mask < branches; ++mask) {
    std::vector<detail::SymExpr> relators;
    std::vector<detail::PatternGroup> merged;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (mask & (1u << g)) {
        relators.push_back(groups[g].items);
        continue;
      }
      if (!merged.empty() && merged.back().tag == groups[g].tag) {
        auto& items = merged.back().items;
        items.insert(items.end(), groups[g].items.begin(),
                     groups[g].items.end());
      } else {
        merged.push_back(groups[g]);
      }
    }
    if (merged.size() != blocks.size()) {
      continue;
    }
    bool aligned = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (merged[i].tag != blocks[i].tag) {
        aligned = false;
        break;
      }
    }
    if (!aligned) {
      continue;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      detail::SymExpr r = merged[i].items;
      r.push_back(detail::SymItem{-1, false, invert(blocks[i].word)});
      relators.push_back(std::move(r));
    }
    for (auto& values : detail::solve_relators(std::move(relators), num_vars, box)) {
      accept(values);
    }
  }
  return {found.begin(), found.end()};
}

inline std::string to_string(const Solution& s,
                             const std::vector<std::string>& order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) {
      out += ", ";
    }
    auto it = s.assignment.find(order[i]);
    out += it == s.assignment.end() ? "?" : to_string(it->second);
  }
  return out + ")";
}

// Distinct monomial patterns of T1, T3, T4, T6 in order of first appearance,
// each with the list of T-polynomials containing it (signs ignored).
struct DistinctMonomial {
  Pattern pattern;
  std::vector<int> appears_in;
};

inline std::vector<DistinctMonomial> distinct_t_monomials() {
  std::vector<DistinctMonomial> out;
  for (PolyKind kind : all_poly_kinds) {
    for (const SignedPattern& term : t_poly_terms(kind)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& d) {
        return d.pattern == term.pattern;
      });
      if (it == out.end()) {
        out.push_back({term.pattern, {poly_index(kind)}});
      } else if (it->appears_in.back() != poly_index(kind)) {
        it->appears_in.push_back(poly_index(kind));
      }
    }
  }
  return out;
}

struct TableRow {
  Pattern pattern;
  std::vector<int> appears_in;
  std::vector<Solution> m1_solutions;
  std::vector<Solution> m2_solutions;
};

// Solutions (a, c) of M(a, c) = m1(k) and M(a, c) = m2(k) for every distinct
// monomial M of the T-polynomials.
inline std::vector<TableRow> regenerate_table(const Integer& k) {
  const auto [m1, m2] = monomials_m(k);
  std::vector<TableRow> rows;
  for (auto& d : distinct_t_monomials()) {
    TableRow row{d.pattern, d.appears_in, solve(d.pattern, m1),
                 solve(d.pattern, m2)};
    rows.push_back(std::move(row));
  }
  return rows;
}

// The four hexagon terms as patterns in nu, mu, with their signs.
inline const std::array<SignedPattern, 4>& hexagon_patterns() {
  static const std::array<SignedPattern, 4> terms = {{
      {+1, Pattern::parse("nu_1 mu_3")},
      {+1, Pattern::parse("mu^-1_1 nu^-1_3")},
      {-1, Pattern::parse("nu^-1_1 mu_3 nu^-1_3")},
      {-1, Pattern::parse("nu_1 mu^-1_1 nu_3")},
  }};
  return terms;
}

struct HexagonCaseOutcome {
  Word nu;
  Word mu;
  std::array<Word, 4> term_values{Word(Alphabet::quad()), Word(Alphabet::quad()),
                                  Word(Alphabet::quad()), Word(Alphabet::quad())};
  Rational coeff_m1;
  Rational coeff_m2;
  // 1-based indices of the terms equal to m1(k) or m2(k).
  std::vector<int> matching_terms;
  // The other matching term besides the solved one, 0 if none.
  int partner = 0;
  // coeff_m1 == coeff_m2, exactly two terms match (one m1, one m2) and they
  // carry the same sign.
  bool paired = false;
};

struct HexagonCase {
  int term;    // 1..4
  int marker;  // 1 for m1(k), 2 for m2(k)
  std::vector<Solution> solutions;
  std::vector<HexagonCaseOutcome> outcomes;

  bool ok() const {
    return solutions.size() == 1 && outcomes.size() == 1 && outcomes[0].paired;
  }
};

struct HexagonCaseReport {
  Integer k;
  std::vector<HexagonCase> cases;

  bool ok() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const HexagonCase& c) { return c.ok(); });
  }
};

// For each hexagon term and each marker monomial, finds every (nu, mu)
// (identity words included) making the term equal the marker, then checks
// that the whole hexagon carries m1(k) and m2(k) with equal coefficients.
inline HexagonCaseReport hexagon_case_analysis(const Integer& k) {
  const auto [m1, m2] = monomials_m(k);
  const auto& patterns = hexagon_patterns();
  HexagonCaseReport report{k, {}};
  for (int term = 1; term <= 4; ++term) {
    for (int marker = 1; marker <= 2; ++marker) {
      HexagonCase hc{term, marker, {}, {}};
      hc.solutions = solve(patterns[term - 1].pattern, marker == 1 ? m1 : m2,
                           SolveOptions{.allow_trivial = true});
      for (const Solution& s : hc.solutions) {
        HexagonCaseOutcome out{s.assignment.at("nu"), s.assignment.at("mu")};
        const auto terms = hexagon_terms(out.nu, out.mu);
        std::optional<int> m1_sign, m2_sign;
        for (int i = 0; i < 4; ++i) {
          out.term_values[i] = terms[i].second;
          if (terms[i].second == m1) {
            out.matching_terms.push_back(i + 1);
            m1_sign = terms[i].first;
          } else if (terms[i].second == m2) {
            out.matching_terms.push_back(i + 1);
            m2_sign = terms[i].first;
          }
        }
        const RingElement h = hexagon(out.nu, out.mu);
        out.coeff_m1 = coeff(h, m1);
        out.coeff_m2 = coeff(h, m2);
        for (int t : out.matching_terms) {
          if (t != term) {
            out.partner = t;
          }
        }
        out.paired = out.coeff_m1 == out.coeff_m2 &&
                     out.matching_terms.size() == 2 && m1_sign && m2_sign &&
                     *m1_sign == *m2_sign;
        hc.outcomes.push_back(std::move(out));
      }
      report.cases.push_back(std::move(hc));
    }
  }
  return report;
}

}  // namespace barbell
