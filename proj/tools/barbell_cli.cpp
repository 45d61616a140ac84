#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "barbell/barbell.hpp"

namespace {

using namespace barbell;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

enum class Format { text, md, json };

// Each command fills one of these; the command handlers only read it.
struct Options {
  std::string word;
  std::string nu, mu;
  int poly = 0;
  std::string a, c;
  std::string disk;
  std::int64_t k = 1;
  std::string in_file;
  std::string expr;
  std::string suite;
  int kmax = 10;
  int max_syllables = 3;
  int max_exponent = 3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool timings = false;
  std::vector<int> kinds = {1, 3, 4, 6};
  Format format = Format::text;
};

void print_element(const RingElement& x, Format f) {
  if (f == Format::json) {
    std::cout << to_json(x).dump(2) << "\n";
  } else {
    std::cout << to_string(x) << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Refuses to run if any formula-built target disagrees with its written-out
// expansion.
void self_check() {
  for (int k = 1; k <= 3; ++k) {
    for (Disk d : {Disk::delta1, Disk::delta2}) {
      w3_target(d, k);
    }
  }
}

int cmd_eval(const Options& o) {
  print_element(parse_ring_expression(o.word, Alphabet::base()), o.format);
  return kExitPass;
}

int cmd_hexagon(const Options& o) {
  const Alphabet b = Alphabet::base();
  print_element(hexagon(parse_word(o.nu, b), parse_word(o.mu, b)), o.format);
  return kExitPass;
}

int cmd_tpoly(const Options& o) {
  const Alphabet b = Alphabet::base();
  print_element(t_poly(poly_kind_from_index(o.poly), parse_word(o.a, b),
                       parse_word(o.c, b)),
                o.format);
  return kExitPass;
}

int cmd_target(const Options& o) {
  const Disk d = o.disk == "d1" ? Disk::delta1 : Disk::delta2;
  print_element(w3_target(d, o.k).value, o.format);
  return kExitPass;
}

int cmd_psi(const Options& o) {
  if (o.in_file.empty() == o.expr.empty()) {
    throw ConfigError("psi needs exactly one of --in FILE or EXPR");
  }
  RingElement x =
      o.in_file.empty()
          ? parse_ring_expression(o.expr)
          : ring_element_from_json(Json::parse(read_file(o.in_file)));
  std::cout << to_string(evaluate(psi(o.k), x)) << "\n";
  return kExitPass;
}

int cmd_table(const Options& o) {
  const auto rows = regenerate_table(o.k);
  if (o.format == Format::json) {
    std::cout << table_to_json(rows).dump(2) << "\n";
  } else {
    std::cout << table_to_markdown(rows);
  }
  return kExitPass;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.kmax = o.kmax;
  cfg.max_syllables = o.max_syllables;
  cfg.max_exponent = o.max_exponent;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.validate();
  const Report r = run_suite(suite_from_name(o.suite), cfg);
  if (o.format == Format::json) {
    std::cout << to_json(r, o.timings).dump(2) << "\n";
  } else {
    std::cout << to_markdown(r);
  }
  return r.overall() == Status::pass ? kExitPass : kExitFail;
}

int cmd_span_dump(const Options& o) {
  std::vector<PolyKind> kinds;
  for (int i : o.kinds) {
    kinds.push_back(poly_kind_from_index(i));
  }
  if (o.max_syllables < 1 || o.max_exponent < 1) {
    throw ConfigError("max-syllables and max-exponent must be at least 1");
  }
  std::cout << span_dump_json(o.max_syllables, o.max_exponent, kinds).dump(2)
            << "\n";
  return kExitPass;
}

void add_format(CLI::App* cmd, Format& target, bool markdown) {
  std::map<std::string, Format> names =
      markdown ? std::map<std::string, Format>{{"md", Format::md},
                                               {"json", Format::json}}
               : std::map<std::string, Format>{{"text", Format::text},
                                               {"json", Format::json}};
  target = markdown ? Format::md : Format::text;
  cmd->add_option("--format", target, "output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for barbell W3 invariants in the free group on t, u"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto* eval = app.add_subcommand("eval", "reduce a word or a linear combination of words");
  eval->add_option("WORD", o.word, "word or expression")->required();
  add_format(eval, o.format, false);
  eval->callback([&] { handler = cmd_eval; });

  auto* hex = app.add_subcommand("hexagon", "expand the hexagon relation H(NU, MU)");
  hex->add_option("NU", o.nu, "word in t, u")->required();
  hex->add_option("MU", o.mu, "word in t, u")->required();
  add_format(hex, o.format, false);
  hex->callback([&] { handler = cmd_hexagon; });

  auto* tpoly = app.add_subcommand("tpoly", "expand T_i(A, C)");
  tpoly->add_option("I", o.poly, "polynomial index")
      ->required()
      ->check(CLI::IsMember({1, 3, 4, 6}));
  tpoly->add_option("A", o.a, "word in t, u")->required();
  tpoly->add_option("C", o.c, "word in t, u")->required();
  add_format(tpoly, o.format, false);
  tpoly->callback([&] { handler = cmd_tpoly; });

  auto* target = app.add_subcommand("target", "W3 value of the k-th target barbell");
  target->add_option("DISK", o.disk, "d1 or d2")
      ->required()
      ->check(CLI::IsMember({"d1", "d2"}));
  target->add_option("--k", o.k, "k >= 1")->required()->check(CLI::PositiveNumber);
  add_format(target, o.format, false);
  target->callback([&] { handler = cmd_target; });

  auto* psi_cmd = app.add_subcommand("psi", "evaluate Psi_k on an element");
  psi_cmd->add_option("--k", o.k, "k >= 1")->required()->check(CLI::PositiveNumber);
  psi_cmd->add_option("--in", o.in_file, "ring element JSON file")->check(CLI::ExistingFile);
  psi_cmd->add_option("EXPR", o.expr, "expression over t_1, u_1, t_3, u_3");
  psi_cmd->callback([&] { handler = cmd_psi; });

  auto* table = app.add_subcommand("table", "regenerate the solution table for k");
  table->add_option("--k", o.k, "k >= 1")->required()->check(CLI::PositiveNumber);
  add_format(table, o.format, true);
  table->callback([&] { handler = cmd_table; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("SUITE", o.suite, "all, psi, hexagon, span or main")
      ->required()
      ->check(CLI::IsMember({"all", "psi", "hexagon", "span", "main"}));
  verify->add_option("--kmax", o.kmax, "largest k")->check(CLI::PositiveNumber);
  verify->add_option("--max-syllables", o.max_syllables, "word length bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-exponent", o.max_exponent, "exponent bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--trials", o.trials, "random hexagon pairs");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", o.timings, "include elapsed_ms in JSON");
  add_format(verify, o.format, true);
  verify->callback([&] { handler = cmd_verify; });

  auto* dump = app.add_subcommand("span-dump", "list span generators as JSON");
  dump->add_option("--max-syllables", o.max_syllables, "word length bound")->required();
  dump->add_option("--max-exponent", o.max_exponent, "exponent bound")->required();
  dump->add_option("--kinds", o.kinds, "comma-separated subset of 1,3,4,6")
      ->delimiter(',')
      ->check(CLI::IsMember({1, 3, 4, 6}));
  dump->callback([&] { handler = cmd_span_dump; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "usage: barbell_cli {eval|hexagon|tpoly|target|psi|table|verify|span-dump} ... "
                 "(--help for details)\n";
    return kExitUsage;
  }

  try {
    self_check();
  } catch (const Error& e) {
    std::cerr << "self-check failed: " << e.what() << "\n";
    return kExitFail;
  }

  try {
    return handler(o);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
