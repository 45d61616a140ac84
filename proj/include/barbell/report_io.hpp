#pragma once

// JSON and markdown serialization for ring elements, reports, solution
// tables and span-generator dumps. JSON output is deterministic: keys in a
// fixed order, terms in word order, coefficients in lowest terms.

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "barbell/barbell_w3.hpp"
#include "barbell/error.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/solver.hpp"
#include "barbell/verifier.hpp"
#include "barbell/word.hpp"

namespace barbell {

using Json = nlohmann::ordered_json;

class SchemaError : public Error {
 public:
  using Error::Error;
};

inline Json to_json(const RingElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"word", to_string(w)}, {"coeff", to_string(c)}});
  }
  return {{"alphabet", std::string(x.alphabet().name())}, {"terms", terms}};
}

inline RingElement ring_element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("terms") ||
      !j["alphabet"].is_string() || !j["terms"].is_array()) {
    throw SchemaError(
        "ring element JSON needs a string 'alphabet' and an array 'terms'");
  }
  const Alphabet a = Alphabet::from_name(j["alphabet"].get<std::string>());
  RingElement x(a);
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("word") || !t.contains("coeff") ||
        !t["word"].is_string() || !t["coeff"].is_string()) {
      throw SchemaError("each term needs string fields 'word' and 'coeff'");
    }
    x.add_term(parse_word(t["word"].get<std::string>(), a),
               parse_rational(t["coeff"].get<std::string>()));
  }
  return x;
}

inline Json to_json(const Check& c, bool include_timing = false) {
  Json j = {{"name", c.name},
            {"paper_anchor", c.paper_anchor},
            {"kind", std::string(check_kind_name(c.kind))},
            {"status", std::string(status_name(c.status))},
            {"details", c.details}};
  if (include_timing) {
    j["elapsed_ms"] = c.elapsed.count();
  }
  return j;
}

// Timings are left out by default so that reports are reproducible byte for
// byte.
inline Json to_json(const Report& r, bool include_timing = false) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(to_json(c, include_timing));
  }
  return {{"suite", r.suite},
          {"parameters",
           {{"kmax", r.parameters.kmax},
            {"max_syllables", r.parameters.max_syllables},
            {"max_exponent", r.parameters.max_exponent},
            {"seed", r.parameters.seed},
            {"trials", r.parameters.trials}}},
          {"checks", checks},
          {"overall", std::string(status_name(r.overall()))}};
}

namespace detail {

inline const Json& require(const Json& j, const char* key,
                           Json::value_t type) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  const Json& v = j.at(key);
  bool ok = v.type() == type ||
            (type == Json::value_t::number_unsigned &&
             v.type() == Json::value_t::number_integer && v.get<long long>() >= 0) ||
            (type == Json::value_t::number_integer &&
             v.type() == Json::value_t::number_unsigned);
  if (!ok) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
  return v;
}

inline Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  throw SchemaError("status must be 'pass' or 'fail', got '" + s + "'");
}

inline CheckKind check_kind_from_name(const std::string& s) {
  for (CheckKind k : {CheckKind::exhaustive_bounded, CheckKind::sampled,
                      CheckKind::structural_complete}) {
    if (check_kind_name(k) == s) {
      return k;
    }
  }
  throw SchemaError("unknown check kind '" + s + "'");
}

}  // namespace detail

// Parses and validates a report; rejects an 'overall' that is not the
// conjunction of the check statuses and failing checks without details.
inline Report report_from_json(const Json& j) {
  using T = Json::value_t;
  Report r;
  r.suite = detail::require(j, "suite", T::string).get<std::string>();
  const Json& p = detail::require(j, "parameters", T::object);
  r.parameters.kmax = detail::require(p, "kmax", T::number_integer).get<int>();
  r.parameters.max_syllables =
      detail::require(p, "max_syllables", T::number_integer).get<int>();
  r.parameters.max_exponent =
      detail::require(p, "max_exponent", T::number_integer).get<int>();
  r.parameters.seed =
      detail::require(p, "seed", T::number_unsigned).get<std::uint64_t>();
  r.parameters.trials =
      detail::require(p, "trials", T::number_unsigned).get<std::uint64_t>();
  for (const Json& c : detail::require(j, "checks", T::array)) {
    Check check;
    check.name = detail::require(c, "name", T::string).get<std::string>();
    check.paper_anchor =
        detail::require(c, "paper_anchor", T::string).get<std::string>();
    check.kind = detail::check_kind_from_name(
        detail::require(c, "kind", T::string).get<std::string>());
    check.status = detail::status_from_name(
        detail::require(c, "status", T::string).get<std::string>());
    check.details = detail::require(c, "details", T::string).get<std::string>();
    if (c.contains("elapsed_ms")) {
      check.elapsed = std::chrono::milliseconds(
          detail::require(c, "elapsed_ms", T::number_integer).get<long long>());
    }
    if (check.status == Status::fail && check.details.empty()) {
      throw SchemaError("failing check '" + check.name + "' has no details");
    }
    r.checks.push_back(std::move(check));
  }
  const Status overall = detail::status_from_name(
      detail::require(j, "overall", T::string).get<std::string>());
  if (overall != r.overall()) {
    throw SchemaError("'overall' disagrees with the check statuses");
  }
  return r;
}

namespace detail {

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') {
      out += "\\|";
    } else if (ch == '\n') {
      out += ' ';
    } else {
      out += ch;
    }
  }
  return out;
}

inline void md_table(std::ostringstream& out, const std::string& title,
                     const std::vector<const Check*>& checks) {
  bool pass = std::all_of(checks.begin(), checks.end(), [](const Check* c) {
    return c->status == Status::pass;
  });
  out << "## " << title << ": " << (pass ? "pass" : "fail") << "\n\n";
  out << "| check | kind | status | details |\n";
  out << "|---|---|---|---|\n";
  for (const Check* c : checks) {
    out << "| " << md_escape(c->name) << " | " << check_kind_name(c->kind)
        << " | " << status_name(c->status) << " | " << md_escape(c->details)
        << " |\n";
  }
  out << "\n";
}

}  // namespace detail

// One table per suite. A combined report is split on the "suite: " prefix
// of its check names.
inline std::string to_markdown(const Report& r) {
  std::ostringstream out;
  const Parameters& p = r.parameters;
  out << "# " << r.suite << ": " << status_name(r.overall()) << "\n\n";
  out << "kmax=" << p.kmax << ", max_syllables=" << p.max_syllables
      << ", max_exponent=" << p.max_exponent << ", seed=" << p.seed
      << ", trials=" << p.trials << "\n\n";
  if (r.suite != "all") {
    std::vector<const Check*> checks;
    for (const Check& c : r.checks) {
      checks.push_back(&c);
    }
    detail::md_table(out, r.suite, checks);
    return out.str();
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Check*>> groups;
  std::vector<Check> renamed;
  renamed.reserve(r.checks.size());
  for (const Check& c : r.checks) {
    auto colon = c.name.find(": ");
    std::string suite =
        colon == std::string::npos ? r.suite : c.name.substr(0, colon);
    Check copy = c;
    if (colon != std::string::npos) {
      copy.name = c.name.substr(colon + 2);
    }
    renamed.push_back(std::move(copy));
    if (!groups.count(suite)) {
      order.push_back(suite);
    }
    groups[suite].push_back(&renamed.back());
  }
  for (const std::string& suite : order) {
    detail::md_table(out, suite, groups[suite]);
  }
  return out.str();
}

inline Json solution_json(const std::vector<Solution>& sols) {
  auto one = [](const Solution& s) {
    Json j = Json::object();
    for (const auto& [var, w] : s.assignment) {
      j[var] = to_string(w);
    }
    return j;
  };
  if (sols.empty()) {
    return nullptr;
  }
  if (sols.size() == 1) {
    return one(sols.front());
  }
  Json arr = Json::array();
  for (const Solution& s : sols) {
    arr.push_back(one(s));
  }
  return arr;
}

inline bool any_admissible(const TableRow& row) {
  for (const auto* sols : {&row.m1_solutions, &row.m2_solutions}) {
    for (const Solution& s : *sols) {
      if (is_admissible(s.assignment.at("a"), s.assignment.at("c"))) {
        return true;
      }
    }
  }
  return false;
}

inline Json table_to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const TableRow& row : rows) {
    out.push_back({{"pattern", to_string(row.pattern)},
                   {"appears_in", row.appears_in},
                   {"m1_solution", solution_json(row.m1_solutions)},
                   {"m2_solution", solution_json(row.m2_solutions)},
                   {"admissible", any_admissible(row)}});
  }
  return out;
}

inline std::string table_to_markdown(const std::vector<TableRow>& rows) {
  const std::vector<std::string> order = {"a", "c"};
  std::ostringstream out;
  out << "| appears in | monomial term M(a,c) | (a,c) if M=m_1(k) | (a,c) if "
         "M=m_2(k) |\n";
  out << "|---|---|---|---|\n";
  for (const TableRow& row : rows) {
    std::string in = "T_{";
    for (std::size_t i = 0; i < row.appears_in.size(); ++i) {
      in += (i ? "," : "") + std::to_string(row.appears_in[i]);
    }
    in += "}";
    out << "| " << in << " | " << to_string(row.pattern) << " | "
        << detail::describe_solutions(row.m1_solutions, order) << " | "
        << detail::describe_solutions(row.m2_solutions, order) << " |\n";
  }
  return out.str();
}

inline Json span_dump_json(int max_syllables, int max_exponent,
                           std::span<const PolyKind> kinds) {
  Json out = Json::array();
  const auto pairs = enumerate_admissible(max_syllables, max_exponent);
  for_each_span_generator(pairs, kinds,
                          [&](PolyKind kind, const AdmissiblePair& p,
                              const RingElement& value) {
                            out.push_back({{"i", poly_index(kind)},
                                           {"a", to_string(p.a)},
                                           {"c", to_string(p.c)},
                                           {"value", to_json(value)}});
                          });
  return out;
}

}  // namespace barbell
