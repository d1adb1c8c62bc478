// fourmove: obstruction calculator for trivializing welded links by 4-moves.
//
// Exit codes: 0 success (any verdict), 2 parse error, 3 validation error,
// 4 precondition error, 10 obstructed when --fail-on-obstructed is set.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fourmove/catalog.hpp"
#include "fourmove/errors.hpp"
#include "fourmove/magnus.hpp"
#include "fourmove/milnor.hpp"
#include "fourmove/obstruction.hpp"
#include "fourmove/underpass.hpp"

namespace {

using namespace fourmove;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitObstructed = 10;

struct InputOpts {
  std::string path;     // file path or "-" for stdin
  std::string catalog;  // catalog name
  bool gauss = false;   // parse the file as a signed Gauss code
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("input", in.path, "link file (JSON), or - for stdin");
  cmd->add_option("--catalog", in.catalog, "use a built-in catalog link instead of a file");
  cmd->add_flag("--gauss", in.gauss, "input is a signed Gauss code, one line per component");
}

UnderpassCode load_input(const InputOpts& in) {
  if (!in.catalog.empty()) {
    if (!in.path.empty())
      throw ValidationError("give either an input file or --catalog, not both");
    return catalog_get(in.catalog).code;
  }
  if (in.path.empty())
    throw ValidationError("no input: give a link file, -, or --catalog <name>");
  std::string text;
  if (in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(in.path);
    if (!f) throw ValidationError("cannot open input file '" + in.path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return in.gauss ? import_gauss(text, in.path == "-" ? "stdin" : in.path)
                  : parse_link_file(text);
}

std::vector<int> parse_seq(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError("--seq expects comma-separated indices, got '" + s + "'");
    }
  }
  if (out.empty()) throw PreconditionError("--seq must not be empty");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Magnus-expansion obstruction to trivializing a (welded) link by 4-moves"};
  app.require_subcommand(1);
  std::string format = "text";

  // check
  auto* check = app.add_subcommand("check", "evaluate the obstruction conditions");
  InputOpts check_in;
  add_input_opts(check, check_in);
  int check_q = 5;
  std::optional<int> check_D;
  bool fail_on_obstructed = false;
  check->add_option("--q", check_q, "nilpotency level (>= 5)");
  check->add_option("--D", check_D, "series truncation degree override");
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--fail-on-obstructed", fail_on_obstructed,
                  "exit 10 when the verdict is OBSTRUCTED");

  // lk
  auto* lk = app.add_subcommand("lk", "print the linking matrix");
  InputOpts lk_in;
  add_input_opts(lk, lk_in);
  lk->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // longitudes
  auto* lon = app.add_subcommand("longitudes", "print the longitude words");
  InputOpts lon_in;
  add_input_opts(lon, lon_in);
  bool lon_partials = false;
  lon->add_flag("--partials", lon_partials, "also print the partial words v_ij");

  // mu
  auto* mu = app.add_subcommand("mu", "Milnor invariant mod 2 of a diagram");
  InputOpts mu_in;
  add_input_opts(mu, mu_in);
  std::string mu_seq;
  int mu_target = 0, mu_q = 5;
  mu->add_option("--seq", mu_seq, "index sequence k1,k2,...")->required();
  mu->add_option("--target", mu_target, "target component i")->required();
  mu->add_option("--q", mu_q, "nilpotency level");

  // expand
  auto* expand = app.add_subcommand("expand", "Magnus Z2-expansion of a meridian word");
  std::string expand_word_text;
  int expand_m = 0, expand_D = 4;
  expand->add_option("--word", expand_word_text, "word such as \"a1 a2^-1\"")->required();
  expand->add_option("--m", expand_m, "number of meridians/variables")->required();
  expand->add_option("--D", expand_D, "truncation degree");

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in example links");
  auto* cat_list = cat->add_subcommand("list", "list catalog names");
  auto* cat_show = cat->add_subcommand("show", "print a catalog link as JSON");
  std::string cat_name;
  cat_show->add_option("name", cat_name, "catalog entry name")->required();
  cat->require_subcommand(1);

  // selftest
  auto* st = app.add_subcommand("selftest", "randomized property suites");
  std::string st_suite = "all";
  int st_trials = 200, st_m = 2, st_q = 4, st_n = 8, st_len = 12;
  std::uint64_t st_seed = 1;
  st->add_option("--suite", st_suite, "relators, power, lcs, or all")
      ->check(CLI::IsMember({"relators", "power", "lcs", "all"}));
  st->add_option("--trials", st_trials, "trials per suite");
  st->add_option("--m", st_m, "number of meridians");
  st->add_option("--q", st_q, "commutator weight for the lcs suite");
  st->add_option("--n", st_n, "power (a power of 2) for the power suite");
  st->add_option("--len", st_len, "max base word length");
  st->add_option("--seed", st_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (check->parsed()) {
    UnderpassCode code = load_input(check_in);
    ObstructionReport rep = check_link(code, check_q, check_D);
    std::cout << (format == "json" ? report_json(rep) + "\n" : report_text(rep));
    if (fail_on_obstructed && rep.verdict == Verdict::obstructed)
      return kExitObstructed;
    return 0;
  }

  if (lk->parsed()) {
    UnderpassCode code = load_input(lk_in);
    auto mat = linking_matrix(code);
    std::string rows;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      rows += i ? ",[" : "[";
      for (std::size_t j = 0; j < mat[i].size(); ++j)
        rows += (j ? "," : "") + std::to_string(mat[i][j]);
      rows += "]";
    }
    if (format == "json")
      std::cout << "{\"name\":\"" << code.name() << "\",\"linking_matrix\":[" << rows
                << "]}\n";
    else
      std::cout << "[" << rows << "]\n";
    return 0;
  }

  if (lon->parsed()) {
    UnderpassCode code = load_input(lon_in);
    LongitudeData data = longitudes(code);
    for (int i = 1; i <= code.m(); ++i) {
      std::cout << "lambda" << i << " = " << to_string(data.lambda[i - 1]) << "\n";
      if (lon_partials)
        for (std::size_t j = 0; j < data.partials[i - 1].size(); ++j)
          std::cout << "  v" << i << "_" << j + 1 << " = "
                    << to_string(data.partials[i - 1][j]) << "\n";
    }
    return 0;
  }

  if (mu->parsed()) {
    UnderpassCode code = load_input(mu_in);
    std::vector<int> seq = parse_seq(mu_seq);
    int value = mu_mod2(code, seq, mu_target, mu_q);
    std::cout << "mu(" << mu_seq << "; " << mu_target << ") mod 2 = " << value << "\n";
    return 0;
  }

  if (expand->parsed()) {
    if (expand_m < 1) throw PreconditionError("--m must be >= 1");
    Word w = parse_word(Alphabet::meridians(expand_m), expand_word_text);
    std::cout << to_string(expand_word(w, expand_m, expand_D)) << "\n";
    return 0;
  }

  if (cat_list->parsed()) {
    for (const std::string& n : catalog_list()) std::cout << n << "\n";
    return 0;
  }
  if (cat_show->parsed()) {
    std::cout << serialize_link(catalog_get(cat_name).code) << "\n";
    return 0;
  }

  if (st->parsed()) {
    bool all_ok = true;
    std::mt19937_64 rng(st_seed);
    if (st_suite == "relators" || st_suite == "all") {
      SelftestSummary s = relator_conditions_selftest(st_trials, st_m, st_seed);
      bool ok = s.failures == 0;
      all_ok = all_ok && ok;
      std::cout << "relators: " << (ok ? "pass" : "FAIL") << " (" << s.trials
                << " trials, " << s.failures << " failures)";
      if (!ok) std::cout << " first: " << s.first_failure;
      std::cout << "\n";
    }
    if (st_suite == "power" || st_suite == "all") {
      if (st_n < 2 || (st_n & (st_n - 1)) != 0)
        throw PreconditionError("--n must be a power of 2");
      Alphabet A = Alphabet::meridians(st_m);
      std::uniform_int_distribution<int> pick_gen(0, st_m - 1);
      std::uniform_int_distribution<int> pick_len(0, st_len);
      int failures = 0;
      for (int t = 0; t < st_trials; ++t) {
        Word w(A);
        int len = pick_len(rng);
        for (int p = 0; p < len; ++p) w.push_run(pick_gen(rng), rng() & 1 ? 1 : -1);
        // n is a power of two: square log2(n) times
        TruncatedSeries acc = expand_word(w, st_m, st_n - 1);
        for (int b = st_n; b > 1; b >>= 1) acc = mul(acc, acc);
        if (!acc.is_one()) ++failures;
      }
      bool ok = failures == 0;
      all_ok = all_ok && ok;
      std::cout << "power: " << (ok ? "pass" : "FAIL") << " (" << st_trials
                << " trials, n = " << st_n << ", " << failures << " failures)\n";
    }
    if (st_suite == "lcs" || st_suite == "all") {
      Alphabet A = Alphabet::meridians(st_m);
      int failures = 0;
      for (int t = 0; t < st_trials; ++t) {
        Word u = sample_gamma_q(A, st_q, rng);
        if (!expand_word(u, st_m, st_q - 1).is_one()) ++failures;
      }
      bool ok = failures == 0;
      all_ok = all_ok && ok;
      std::cout << "lcs: " << (ok ? "pass" : "FAIL") << " (" << st_trials
                << " trials, q = " << st_q << ", " << failures << " failures)\n";
    }
    return all_ok ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
