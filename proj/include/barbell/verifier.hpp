#pragma once

// Verification suites. Each suite produces a Report of named checks; a
// check is either bounded evidence (exhaustive over a finite box, or a
// seeded random sample) or a complete structural argument (solver-driven
// case analysis, table regeneration, exact rank).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "barbell/barbell_w3.hpp"
#include "barbell/error.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/reference_data.hpp"
#include "barbell/solver.hpp"
#include "barbell/word.hpp"

namespace barbell {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Status { pass, fail };

enum class CheckKind { exhaustive_bounded, sampled, structural_complete };

inline std::string_view status_name(Status s) {
  return s == Status::pass ? "pass" : "fail";
}

inline std::string_view check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::exhaustive_bounded:
      return "exhaustive-bounded";
    case CheckKind::sampled:
      return "sampled";
    case CheckKind::structural_complete:
      return "structural-complete";
  }
  return "";
}

struct Check {
  std::string name;
  std::string paper_anchor;
  CheckKind kind = CheckKind::structural_complete;
  Status status = Status::pass;
  std::string details;
  std::chrono::milliseconds elapsed{0};
};

struct Parameters {
  int kmax = 10;
  int max_syllables = 3;
  int max_exponent = 3;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

struct Report {
  std::string suite;
  Parameters parameters;
  std::vector<Check> checks;

  Status overall() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Status::pass; })
               ? Status::pass
               : Status::fail;
  }
};

struct VerifyConfig {
  int kmax = 10;
  int max_syllables = 3;
  int max_exponent = 3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  // Bounds for the random hexagon pairs.
  int random_max_syllables = 5;
  int random_max_exponent = 5;
  // Written-out target expansions the formula-built targets are compared to.
  std::span<const ClosedFormTerm> t4_closed_form = t4_target_closed_form;
  std::span<const ClosedFormTerm> t6_closed_form = t6_target_closed_form;
  // Replaces the W3 targets in the main-theorem suite (negative controls).
  std::function<RingElement(Disk, const Integer&)> target_override;

  Parameters parameters() const {
    return {kmax, max_syllables, max_exponent, seed, trials};
  }

  void validate() const {
    if (kmax < 1) {
      throw ConfigError("kmax must be at least 1");
    }
    if (max_syllables < 1 || max_exponent < 1) {
      throw ConfigError("max-syllables and max-exponent must be at least 1");
    }
    if (random_max_syllables < 0 || random_max_exponent < 1) {
      throw ConfigError("invalid random word bounds");
    }
    if (workers < 1) {
      throw ConfigError("workers must be at least 1");
    }
  }
};

namespace detail {

// Runs fn(begin, end) over fixed-size chunks of [0, n) on up to `workers`
// threads. Results come back in chunk order whatever the thread count.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::size_t n, std::size_t chunk,
                                    unsigned workers, Fn fn) {
  const std::size_t chunks = n == 0 ? 0 : (n + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < chunks; i = next++) {
      try {
        results[i] = fn(i * chunk, std::min(n, (i + 1) * chunk));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t extra =
      std::min<std::size_t>(workers, chunks) > 0
          ? std::min<std::size_t>(workers, chunks) - 1
          : 0;
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < extra; ++t) {
    threads.emplace_back(work);
  }
  work();
  for (auto& th : threads) {
    th.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return results;
}

// Per-k outcome of a scan: empty string when every instance passed,
// otherwise a description of the first failing instance.
struct VanishingScan {
  std::uint64_t instances = 0;
  std::vector<std::string> first_failure;  // index k - 1

  bool ok(int k) const { return first_failure[k - 1].empty(); }
};

inline void merge_scan(VanishingScan& into, const VanishingScan& part) {
  into.instances += part.instances;
  for (std::size_t i = 0; i < into.first_failure.size(); ++i) {
    if (into.first_failure[i].empty() && !part.first_failure[i].empty()) {
      into.first_failure[i] = part.first_failure[i];
    }
  }
}

inline std::vector<Functional> psi_family(int kmax) {
  std::vector<Functional> out;
  for (int k = 1; k <= kmax; ++k) {
    out.push_back(psi(k));
  }
  return out;
}

inline VanishingScan scan_hexagons(std::span<const std::pair<Word, Word>> pairs,
                                   int kmax, unsigned workers) {
  const auto psis = psi_family(kmax);
  auto parts = parallel_chunks<VanishingScan>(
      pairs.size(), 1024, workers, [&](std::size_t begin, std::size_t end) {
        VanishingScan s{0, std::vector<std::string>(kmax)};
        for (std::size_t i = begin; i < end; ++i) {
          const auto& [nu, mu] = pairs[i];
          const RingElement h = hexagon(nu, mu);
          ++s.instances;
          for (int k = 1; k <= kmax; ++k) {
            Rational v = psis[k - 1](h);
            if (!v.is_zero() && s.first_failure[k - 1].empty()) {
              s.first_failure[k - 1] = "Psi_" + std::to_string(k) + "(H(" +
                                       to_string(nu) + ", " + to_string(mu) +
                                       ")) = " + to_string(v);
            }
          }
        }
        return s;
      });
  VanishingScan total{0, std::vector<std::string>(kmax)};
  for (const auto& p : parts) {
    merge_scan(total, p);
  }
  return total;
}

inline Word random_base_word(std::mt19937_64& rng, int max_syllables,
                             int max_exponent) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> mag(1, max_exponent);
  Word w(Alphabet::base());
  const int n = len(rng);
  Letter l = coin(rng) ? Letter::t : Letter::u;
  for (int i = 0; i < n; ++i) {
    int e = mag(rng);
    w.append(l, coin(rng) ? e : -e);
    l = l == Letter::t ? Letter::u : Letter::t;
  }
  return w;
}

struct StructuralResult {
  bool ok = false;
  std::string details;
};

inline std::string describe_solutions(const std::vector<Solution>& sols,
                                      const std::vector<std::string>& order) {
  if (sols.empty()) {
    return "none";
  }
  std::string out;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) {
      out += "; ";
    }
    out += to_string(sols[i], order);
  }
  return out;
}

inline StructuralResult check_case_analysis(int k) {
  const HexagonCaseReport r = hexagon_case_analysis(k);
  const std::vector<std::string> order = {"nu", "mu"};
  std::ostringstream out;
  bool ok = r.ok();
  for (const HexagonCase& c : r.cases) {
    if (!c.ok()) {
      out << "term (" << c.term << ") = m" << c.marker << ": "
          << c.solutions.size() << " solution(s) "
          << describe_solutions(c.solutions, order);
      if (!c.outcomes.empty() && !c.outcomes[0].paired) {
        out << ", not paired (coeff m1 " << to_string(c.outcomes[0].coeff_m1)
            << ", coeff m2 " << to_string(c.outcomes[0].coeff_m2) << ")";
      }
      out << "; ";
    }
  }
  if (ok) {
    out << "8 cases, each with a unique (nu, mu); pairs:";
    for (const HexagonCase& c : r.cases) {
      out << " (" << c.term << ")=m" << c.marker << "<->("
          << c.outcomes[0].partner << ")";
    }
  }
  return {ok, out.str()};
}

inline bool has_t_boundaries(const Solution& s) {
  auto tail = boundary_letter(s.assignment.at("a"), Side::tail);
  auto head = boundary_letter(s.assignment.at("c"), Side::head);
  return tail && head && tail->letter == Letter::t && head->letter == Letter::t;
}

inline StructuralResult check_table(int k) {
  const auto rows = regenerate_table(k);
  const auto& reference = reference_solution_table();
  const std::vector<std::string> order = {"a", "c"};
  std::ostringstream out;
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    out << msg << "; ";
  };
  if (rows.size() != reference.size()) {
    fail(std::to_string(rows.size()) + " rows, expected " +
         std::to_string(reference.size()));
  }
  auto ref_solution = [&](std::string_view a, std::string_view c) {
    return Solution{{{"a", parse_word(instantiate_k(a, k), Alphabet::base())},
                     {"c", parse_word(instantiate_k(c, k), Alphabet::base())}}};
  };
  for (const TableRow& row : rows) {
    const std::string name = to_string(row.pattern);
    for (const auto* sols : {&row.m1_solutions, &row.m2_solutions}) {
      if (sols->size() != 1) {
        fail(name + ": " + std::to_string(sols->size()) + " solutions");
      }
      for (const Solution& s : *sols) {
        if (is_admissible(s.assignment.at("a"), s.assignment.at("c"))) {
          fail(name + ": admissible solution " + to_string(s, order));
        }
        if (!has_t_boundaries(s)) {
          fail(name + ": solution " + to_string(s, order) +
               " does not have a ending and c starting in a t-power");
        }
      }
    }
    auto it = std::find_if(reference.begin(), reference.end(), [&](const auto& r) {
      return Pattern::parse(r.pattern) == row.pattern;
    });
    if (it == reference.end()) {
      fail(name + ": not in the reference table");
      continue;
    }
    if (it->appears_in != row.appears_in) {
      fail(name + ": appears-in differs from the reference");
    }
    if (row.m1_solutions != std::vector<Solution>{ref_solution(it->m1_a, it->m1_c)}) {
      fail(name + ": m1 solutions " + describe_solutions(row.m1_solutions, order) +
           " differ from the reference");
    }
    if (row.m2_solutions != std::vector<Solution>{ref_solution(it->m2_a, it->m2_c)}) {
      fail(name + ": m2 solutions " + describe_solutions(row.m2_solutions, order) +
           " differ from the reference");
    }
  }
  if (ok) {
    out << rows.size()
        << " rows match the reference; every solution is unique and not "
           "admissible";
  }
  return {ok, out.str()};
}

template <typename T>
std::vector<T> per_k(int kmax, unsigned workers, T (*fn)(int)) {
  auto parts = parallel_chunks<T>(
      static_cast<std::size_t>(kmax), 1, workers,
      [&](std::size_t begin, std::size_t) { return fn(static_cast<int>(begin) + 1); });
  return parts;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string join_failures(const VanishingScan& scan, int kmax) {
  std::string out;
  for (int k = 1; k <= kmax; ++k) {
    if (!scan.ok(k)) {
      if (!out.empty()) {
        out += "; ";
      }
      out += scan.first_failure[k - 1];
    }
  }
  return out;
}

}  // namespace detail

// Lazily computed evidence shared between suites, so that running every
// suite does each expensive scan once.
class Evidence {
 public:
  explicit Evidence(const VerifyConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

  const VerifyConfig& config() const { return cfg_; }

  const detail::VanishingScan& hexagon_exhaustive() {
    if (!hex_exhaustive_) {
      std::vector<Word> words = {Word(Alphabet::base())};
      auto rest = enumerate_words(cfg_.max_syllables, cfg_.max_exponent);
      words.insert(words.end(), rest.begin(), rest.end());
      std::vector<std::pair<Word, Word>> pairs;
      pairs.reserve(words.size() * words.size());
      for (const Word& nu : words) {
        for (const Word& mu : words) {
          pairs.emplace_back(nu, mu);
        }
      }
      hex_exhaustive_ = detail::scan_hexagons(pairs, cfg_.kmax, cfg_.workers);
    }
    return *hex_exhaustive_;
  }

  const detail::VanishingScan& hexagon_random() {
    if (!hex_random_) {
      std::mt19937_64 rng(cfg_.seed);
      std::vector<std::pair<Word, Word>> pairs;
      pairs.reserve(cfg_.trials);
      for (std::uint64_t i = 0; i < cfg_.trials; ++i) {
        Word nu = detail::random_base_word(rng, cfg_.random_max_syllables,
                                           cfg_.random_max_exponent);
        Word mu = detail::random_base_word(rng, cfg_.random_max_syllables,
                                           cfg_.random_max_exponent);
        pairs.emplace_back(std::move(nu), std::move(mu));
      }
      hex_random_ = detail::scan_hexagons(pairs, cfg_.kmax, cfg_.workers);
    }
    return *hex_random_;
  }

  // Requires coeff_m1(k) = coeff_m2(k) = 0 on every generator (which
  // implies Psi_k = 0).
  const detail::VanishingScan& span() {
    if (!span_) {
      const auto pairs =
          enumerate_admissible(cfg_.max_syllables, cfg_.max_exponent);
      std::vector<MarkerMonomials> markers;
      for (int k = 1; k <= cfg_.kmax; ++k) {
        markers.push_back(monomials_m(k));
      }
      const int kmax = cfg_.kmax;
      auto parts = detail::parallel_chunks<detail::VanishingScan>(
          pairs.size(), 512, cfg_.workers,
          [&](std::size_t begin, std::size_t end) {
            detail::VanishingScan s{0, std::vector<std::string>(kmax)};
            for_each_span_generator(
                std::span(pairs).subspan(begin, end - begin), all_poly_kinds,
                [&](PolyKind kind, const AdmissiblePair& p,
                    const RingElement& value) {
                  ++s.instances;
                  for (int k = 1; k <= kmax; ++k) {
                    const Rational c1 = coeff(value, markers[k - 1].m1);
                    const Rational c2 = coeff(value, markers[k - 1].m2);
                    if ((!c1.is_zero() || !c2.is_zero()) &&
                        s.first_failure[k - 1].empty()) {
                      s.first_failure[k - 1] =
                          "k=" + std::to_string(k) + ": T" +
                          std::to_string(poly_index(kind)) + "(" +
                          to_string(p.a) + ", " + to_string(p.c) +
                          ") has coeff_m1 " + to_string(c1) + ", coeff_m2 " +
                          to_string(c2);
                    }
                  }
                });
            return s;
          });
      detail::VanishingScan total{0, std::vector<std::string>(kmax)};
      total.instances = 0;
      for (const auto& p : parts) {
        detail::merge_scan(total, p);
      }
      span_pairs_ = pairs.size();
      span_ = std::move(total);
    }
    return *span_;
  }

  std::size_t span_pair_count() {
    span();
    return span_pairs_;
  }

  const std::vector<detail::StructuralResult>& case_analyses() {
    if (!cases_) {
      cases_ = detail::per_k(cfg_.kmax, cfg_.workers, &detail::check_case_analysis);
    }
    return *cases_;
  }

  const std::vector<detail::StructuralResult>& tables() {
    if (!tables_) {
      tables_ = detail::per_k(cfg_.kmax, cfg_.workers, &detail::check_table);
    }
    return *tables_;
  }

 private:
  VerifyConfig cfg_;
  std::optional<detail::VanishingScan> hex_exhaustive_;
  std::optional<detail::VanishingScan> hex_random_;
  std::optional<detail::VanishingScan> span_;
  std::size_t span_pairs_ = 0;
  std::optional<std::vector<detail::StructuralResult>> cases_;
  std::optional<std::vector<detail::StructuralResult>> tables_;
};

namespace detail {

inline Check make_check(std::string name, std::string anchor, CheckKind kind,
                        bool ok, std::string details,
                        std::chrono::milliseconds elapsed) {
  Check c{std::move(name), std::move(anchor), kind,
          ok ? Status::pass : Status::fail, std::move(details), elapsed};
  if (c.status == Status::fail && c.details.empty()) {
    c.details = "failed";
  }
  return c;
}

inline Check psi_target_check(const VerifyConfig& cfg, Disk disk) {
  Stopwatch sw;
  const int expected = disk == Disk::delta1 ? 1 : 3;
  const int kmax = cfg.kmax;
  std::ostringstream bad;
  std::vector<RingElement> targets;
  for (int k = 1; k <= kmax; ++k) {
    RingElement formula = target_from_formulas(disk, k);
    RingElement closed =
        target_from_closed_form(disk, k, cfg.t4_closed_form, cfg.t6_closed_form);
    if (formula != closed) {
      bad << "k=" << k << ": formula target differs from closed form; ";
    }
    targets.push_back(std::move(formula));
  }
  for (int k = 1; k <= kmax; ++k) {
    const Functional f = psi(k);
    for (int j = 1; j <= kmax; ++j) {
      const Rational v = f(targets[j - 1]);
      const Rational want = k == j ? expected : 0;
      if (v != want) {
        bad << "Psi_" << k << "(target_" << j << ") = " << to_string(v)
            << ", expected " << to_string(want) << "; ";
      }
    }
  }
  const std::string ok_details =
      "k=1.." + std::to_string(kmax) +
      ": formula targets equal closed forms; Psi_k(target_j) = " +
      (expected == 1 ? std::string("delta_kj") : std::string("3 delta_kj"));
  const bool ok = bad.str().empty();
  return make_check(std::string("Psi_k on ") + std::string(disk_name(disk)) +
                        " targets",
                    std::string("target value, disk ") +
                        (disk == Disk::delta1 ? "1" : "2"),
                    CheckKind::structural_complete, ok,
                    ok ? ok_details : bad.str(), sw.elapsed());
}

}  // namespace detail

inline Report verify_psi_targets(Evidence& ev) {
  const VerifyConfig& cfg = ev.config();
  Report r{"psi", cfg.parameters(), {}};
  r.checks.push_back(detail::psi_target_check(cfg, Disk::delta1));
  r.checks.push_back(detail::psi_target_check(cfg, Disk::delta2));
  return r;
}

inline Report verify_hexagon_vanishing(Evidence& ev) {
  const VerifyConfig& cfg = ev.config();
  const std::string anchor = "Psi_k kills hexagon relations";
  Report r{"hexagon", cfg.parameters(), {}};
  {
    detail::Stopwatch sw;
    const auto& scan = ev.hexagon_exhaustive();
    std::string failures = detail::join_failures(scan, cfg.kmax);
    r.checks.push_back(detail::make_check(
        "exhaustive Psi_k(H(nu, mu)) = 0", anchor,
        CheckKind::exhaustive_bounded, failures.empty(),
        failures.empty()
            ? std::to_string(scan.instances) +
                  " pairs (identity included), k=1.." +
                  std::to_string(cfg.kmax)
            : failures,
        sw.elapsed()));
  }
  {
    detail::Stopwatch sw;
    const auto& scan = ev.hexagon_random();
    std::string failures = detail::join_failures(scan, cfg.kmax);
    r.checks.push_back(detail::make_check(
        "random Psi_k(H(nu, mu)) = 0", anchor, CheckKind::sampled,
        failures.empty(),
        failures.empty()
            ? std::to_string(scan.instances) + " seeded pairs with <= " +
                  std::to_string(cfg.random_max_syllables) +
                  " syllables, |exponent| <= " +
                  std::to_string(cfg.random_max_exponent)
            : failures,
        sw.elapsed()));
  }
  detail::Stopwatch sw;
  const auto& cases = ev.case_analyses();
  auto elapsed = sw.elapsed();
  for (int k = 1; k <= cfg.kmax; ++k) {
    const auto& c = cases[k - 1];
    r.checks.push_back(detail::make_check(
        "case analysis k=" + std::to_string(k), anchor,
        CheckKind::structural_complete, c.ok, c.details,
        k == 1 ? elapsed : std::chrono::milliseconds(0)));
  }
  return r;
}

inline Report verify_span_vanishing(Evidence& ev) {
  const VerifyConfig& cfg = ev.config();
  Report r{"span", cfg.parameters(), {}};
  {
    detail::Stopwatch sw;
    const auto& scan = ev.span();
    std::string failures = detail::join_failures(scan, cfg.kmax);
    r.checks.push_back(detail::make_check(
        "coeff_m1 = coeff_m2 = 0 on span generators",
        "Psi_k kills admissible T-polynomials", CheckKind::exhaustive_bounded,
        failures.empty(),
        failures.empty()
            ? std::to_string(scan.instances) + " generators from " +
                  std::to_string(ev.span_pair_count()) +
                  " admissible pairs, kinds 1,3,4,6, k=1.." +
                  std::to_string(cfg.kmax)
            : failures,
        sw.elapsed()));
  }
  detail::Stopwatch sw;
  const auto& tables = ev.tables();
  auto elapsed = sw.elapsed();
  for (int k = 1; k <= cfg.kmax; ++k) {
    const auto& t = tables[k - 1];
    r.checks.push_back(detail::make_check(
        "solution table k=" + std::to_string(k), "solution table",
        CheckKind::structural_complete, t.ok, t.details,
        k == 1 ? elapsed : std::chrono::milliseconds(0)));
  }
  return r;
}

inline Report verify_main_theorem(Evidence& ev) {
  const VerifyConfig& cfg = ev.config();
  Report r{"main", cfg.parameters(), {}};
  auto target = [&](Disk d, int k) {
    return cfg.target_override ? cfg.target_override(d, k)
                               : target_from_formulas(d, k);
  };
  const auto& hex = ev.hexagon_exhaustive();
  const auto& hex_random = ev.hexagon_random();
  const auto& span = ev.span();
  const auto& cases = ev.case_analyses();
  const auto& tables = ev.tables();

  for (int k = 1; k <= cfg.kmax; ++k) {
    for (Disk d : {Disk::delta1, Disk::delta2}) {
      detail::Stopwatch sw;
      const int expected = d == Disk::delta1 ? 1 : 3;
      const Rational v = psi(k)(target(d, k));
      std::string bad;
      auto need = [&](bool cond, const std::string& what) {
        if (!cond) {
          bad += what + "; ";
        }
      };
      need(v == expected, "Psi_" + std::to_string(k) + "(target) = " +
                              to_string(v) + ", expected " +
                              std::to_string(expected));
      need(hex.ok(k), "hexagon scan failed");
      need(hex_random.ok(k), "random hexagon scan failed");
      need(cases[k - 1].ok, "hexagon case analysis failed");
      need(span.ok(k), "span scan failed");
      need(tables[k - 1].ok, "solution table failed");
      r.checks.push_back(detail::make_check(
          "k=" + std::to_string(k) + " " + std::string(disk_name(d)) +
              " target outside span",
          "non-membership in span modulo hexagons",
          CheckKind::structural_complete, bad.empty(),
          bad.empty() ? "Psi_" + std::to_string(k) + "(target) = " +
                            to_string(v) +
                            " while Psi_k vanishes on hexagons and span "
                            "generators"
                      : bad,
          sw.elapsed()));
    }
  }
  for (Disk d : {Disk::delta1, Disk::delta2}) {
    detail::Stopwatch sw;
    std::vector<RingElement> targets;
    for (int k = 1; k <= cfg.kmax; ++k) {
      targets.push_back(target(d, k));
    }
    const std::size_t direct = rank(targets);
    std::vector<std::vector<Integer>> matrix;
    bool integral = true;
    for (int k = 1; k <= cfg.kmax; ++k) {
      const Functional f = psi(k);
      std::vector<Integer> row;
      for (const RingElement& x : targets) {
        Rational v = f(x);
        integral = integral && boost::multiprecision::denominator(v) == 1;
        row.push_back(boost::multiprecision::numerator(v));
      }
      matrix.push_back(std::move(row));
    }
    const std::size_t functional = integer_matrix_rank(std::move(matrix));
    const auto kmax = static_cast<std::size_t>(cfg.kmax);
    const bool ok = integral && direct == kmax && functional == kmax;
    r.checks.push_back(detail::make_check(
        std::string("rank of ") + std::string(disk_name(d)) + " targets",
        "linear independence of targets", CheckKind::structural_complete, ok,
        "elimination rank " + std::to_string(direct) +
            ", functional-matrix rank " + std::to_string(functional) +
            ", expected " + std::to_string(kmax),
        sw.elapsed()));
  }
  return r;
}

enum class Suite { all, psi, hexagon, span, main };

inline Suite suite_from_name(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "psi") return Suite::psi;
  if (name == "hexagon") return Suite::hexagon;
  if (name == "span") return Suite::span;
  if (name == "main") return Suite::main;
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

// Runs one suite, or all four in the order psi, hexagon, span, main. The
// combined report prefixes each check name with its suite.
inline Report run_suite(Suite suite, const VerifyConfig& cfg) {
  Evidence ev(cfg);
  switch (suite) {
    case Suite::psi:
      return verify_psi_targets(ev);
    case Suite::hexagon:
      return verify_hexagon_vanishing(ev);
    case Suite::span:
      return verify_span_vanishing(ev);
    case Suite::main:
      return verify_main_theorem(ev);
    case Suite::all:
      break;
  }
  Report all{"all", cfg.parameters(), {}};
  for (Report part : {verify_psi_targets(ev), verify_hexagon_vanishing(ev),
                      verify_span_vanishing(ev), verify_main_theorem(ev)}) {
    for (Check& c : part.checks) {
      c.name = part.suite + ": " + c.name;
      all.checks.push_back(std::move(c));
    }
  }
  return all;
}

}  // namespace barbell
