#include "hopfcalc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfcalc/corpus.hpp"
#include "hopfcalc/error.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/oracle.hpp"

namespace hopfcalc {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

struct Source {
  std::string pres_file;
  std::string corpus_name;
};

struct Config {
  Source source;
  std::vector<std::uint64_t> primes;
  bool generators = false;
  std::string format = "text";
  Budget budget;
  std::size_t order_cap = HopfOptions{}.order_cap;
  std::size_t max_order = 24;
  std::string dump_matrix;
  std::string dump_rules;
  std::string map_file;
  std::vector<std::string> groups;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  std::string name;
  Presentation pres;
};

Loaded load(const Source& s) {
  if (!s.pres_file.empty() && !s.corpus_name.empty())
    throw UsageError("give either --pres or --corpus, not both");
  if (!s.corpus_name.empty()) return {s.corpus_name, corpus(s.corpus_name)};
  if (!s.pres_file.empty())
    return {std::filesystem::path(s.pres_file).stem().string(),
            parse_presentation(read_file(s.pres_file))};
  throw UsageError("a presentation is required (--pres FILE or --corpus NAME)");
}

void check_primes(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw UsageError("no primes given");
  for (auto p : primes)
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

HopfOptions options_of(const Config& c) {
  if (c.budget.max_rules == 0 || c.budget.max_rule_length == 0 || c.budget.max_steps == 0)
    throw UsageError("budget limits must be positive");
  return HopfOptions{c.budget, c.order_cap};
}

std::string h2_cell(const HopfResult& r) {
  return (r.h2_kind == BoundKind::Exact ? "" : "≤ ") + std::to_string(r.h2_value);
}

std::string with_prime_suffix(const std::string& path, std::uint64_t p, bool several) {
  return several ? path + ".p" + std::to_string(p) : path;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void print_text(std::ostream& out, const HopfResult& r, bool generators) {
  const bool exact = r.h2_kind == BoundKind::Exact;
  out << "group: " << r.group << "\nprime: " << r.prime << "\n";
  out << "h1 = " << r.h1_dim << ", h2 " << (exact ? "= " : "≤ ") << r.h2_value
      << (exact ? " (exact)" : " (upper bound)") << "\n";
  out << "dim A " << (exact ? "= " : "≤ ") << r.dim_A << ", rank of image = " << r.rank_image
      << ", spanning set " << r.spanning_set.size() << " of " << r.budget.initial_spanning_set
      << "\n";
  out << "confluent: base " << (r.confluent_base ? "yes" : "no") << ", cover "
      << (r.confluent_cover ? "yes" : "no") << "\n";
  if (generators) {
    out << "candidates:\n";
    for (const Candidate& c : r.candidates) {
      out << "  [";
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) out << (i ? " " : "") << c.coeffs[i];
      out << "] " << render_word(c.word, r.generator_names) << "\n";
    }
  }
}

int cmd_compute(const Config& c, std::ostream& out) {
  check_primes(c.primes);
  HopfOptions opt = options_of(c);
  Loaded in = load(c.source);
  if (!c.dump_rules.empty())
    write_file(c.dump_rules,
               knuth_bendix(initial_rules(in.pres), opt.budget).dump(in.pres.generator_names()));
  std::vector<HopfResult> results;
  for (auto p : c.primes) {
    results.push_back(compute_hopf(in.pres, p, opt, in.name));
    if (!c.dump_matrix.empty())
      write_file(with_prime_suffix(c.dump_matrix, p, c.primes.size() > 1),
                 image_matrix(results.back().spanning_set, in.pres.arity(), p).to_csv());
  }
  if (c.format == "json") {
    if (results.size() == 1) {
      out << to_json(results[0], 2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : results) arr.push_back(json::parse(to_json(r)));
      out << arr.dump(2) << "\n";
    }
  } else if (c.format == "csv") {
    out << "group,prime,n_generators,h1_dim,dim_A,rank_image,h2_value,h2_kind\n";
    for (const auto& r : results)
      out << r.group << "," << r.prime << "," << r.n_generators << "," << r.h1_dim << ","
          << r.dim_A << "," << r.rank_image << "," << r.h2_value << "," << to_string(r.h2_kind)
          << "\n";
  } else if (c.format == "markdown") {
    out << "| group | p | h1 | h2 |\n|---|---|---|---|\n";
    for (const auto& r : results)
      out << "| " << r.group << " | " << r.prime << " | " << r.h1_dim << " | " << h2_cell(r)
          << " |\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) out << "\n";
      print_text(out, results[i], c.generators);
    }
  }
  return 0;
}

std::size_t thread_count(std::size_t jobs) {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HOPFCALC_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = v;
  }
  return std::min(n, std::max<std::size_t>(jobs, 1));
}

int cmd_table(const Config& c, std::ostream& out) {
  check_primes(c.primes);
  HopfOptions opt = options_of(c);
  std::vector<std::string> names = c.groups.empty() ? table_group_names() : c.groups;
  std::vector<Presentation> pres;
  for (const auto& n : names) pres.push_back(corpus(n));

  const std::size_t cols = c.primes.size();
  const std::size_t jobs = names.size() * cols;
  std::vector<HopfResult> cells(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next++) < jobs;) {
      try {
        cells[j] = compute_hopf(pres[j / cols], c.primes[j % cols], opt, names[j / cols]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0, n = thread_count(jobs); i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto cell = [&](std::size_t g, std::size_t k) -> const HopfResult& { return cells[g * cols + k]; };
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : cells)
      arr.push_back({{"group", r.group},
                     {"prime", r.prime},
                     {"h1_dim", r.h1_dim},
                     {"h2_value", r.h2_value},
                     {"h2_kind", to_string(r.h2_kind)}});
    out << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "quantity,group";
    for (auto p : c.primes) out << ",p" << p;
    out << "\n";
    for (int q = 1; q <= 2; ++q)
      for (std::size_t g = 0; g < names.size(); ++g) {
        out << "h" << q << "," << names[g];
        for (std::size_t k = 0; k < cols; ++k)
          out << "," << (q == 1 ? std::to_string(cell(g, k).h1_dim) : h2_cell(cell(g, k)));
        out << "\n";
      }
  } else {
    for (int q = 1; q <= 2; ++q) {
      if (q == 2) out << "\n";
      out << "H" << q << "(G;F_p)\n\n| group |";
      for (auto p : c.primes) out << " p=" << p << " |";
      out << "\n|---|";
      for (std::size_t k = 0; k < cols; ++k) out << "---|";
      out << "\n";
      for (std::size_t g = 0; g < names.size(); ++g) {
        out << "| " << names[g] << " |";
        for (std::size_t k = 0; k < cols; ++k)
          out << " " << (q == 1 ? std::to_string(cell(g, k).h1_dim) : h2_cell(cell(g, k))) << " |";
        out << "\n";
      }
    }
  }
  return 0;
}

int cmd_simplify(const Config& c, std::ostream& out) {
  Loaded in = load(c.source);
  if (c.map_file.empty()) throw UsageError("--map FILE is required");
  SubstitutionMap m = parse_substitution(read_file(c.map_file));
  Presentation result = simplify(apply_substitution(in.pres, m));
  out << "# " << result.arity() << " generators, " << result.relators().size() << " relators\n"
      << render(result) << "\n";
  return 0;
}

int cmd_oracle_check(const Config& c, std::ostream& out) {
  check_primes(c.primes);
  HopfOptions opt = options_of(c);
  Loaded in = load(c.source);
  std::vector<OracleReport> reports;
  for (auto p : c.primes) reports.push_back(oracle_check(in.pres, p, opt, c.max_order, in.name));
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back({{"group", r.group},
                     {"prime", r.prime},
                     {"pipeline_h1", r.pipeline_h1},
                     {"pipeline_h2", r.pipeline_h2},
                     {"pipeline_kind", to_string(r.pipeline_kind)},
                     {"oracle_h1", r.oracle_h1},
                     {"oracle_h2", r.oracle_h2},
                     {"verdict", r.verdict}});
    out << arr.dump(2) << "\n";
  } else {
    const bool csv = c.format == "csv";
    const char* sep = csv ? "," : " ";
    out << "group" << sep << "prime" << sep << "pipeline_h1" << sep << "pipeline_h2" << sep
        << "pipeline_kind" << sep << "oracle_h1" << sep << "oracle_h2" << sep << "verdict\n";
    for (const auto& r : reports)
      out << r.group << sep << r.prime << sep << r.pipeline_h1 << sep << r.pipeline_h2 << sep
          << to_string(r.pipeline_kind) << sep << r.oracle_h1 << sep << r.oracle_h2 << sep
          << r.verdict << "\n";
  }
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all ? 0 : 3;
}

void add_source(CLI::App* cmd, Config& c) {
  cmd->add_option("--pres", c.source.pres_file, "Presentation file");
  cmd->add_option("--corpus", c.source.corpus_name, "Built-in presentation name");
}

void add_budget(CLI::App* cmd, Config& c) {
  cmd->add_option("--budget-rules", c.budget.max_rules, "Maximum number of rewriting rules");
  cmd->add_option("--budget-len", c.budget.max_rule_length, "Maximum rule length");
  cmd->add_option("--budget-steps", c.budget.max_steps, "Maximum critical pairs examined");
  cmd->add_option("--order-cap", c.order_cap, "Largest group order enumerated");
}

void add_primes(CLI::App* cmd, Config& c, bool single) {
  if (single) {
    auto* one = cmd->add_option("--prime", c.primes, "Prime");
    auto* many = cmd->add_option("--primes", c.primes, "Comma-separated primes")->delimiter(',');
    one->excludes(many);
  } else {
    cmd->add_option("--primes", c.primes, "Comma-separated primes")->delimiter(',');
  }
}

void add_format(CLI::App* cmd, Config& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of finitely presented groups via Hopf's formula", "hopfcalc"};
  app.require_subcommand(1);
  Config c;

  auto* compute = app.add_subcommand("compute", "Compute h1 and h2 for one presentation");
  add_source(compute, c);
  add_primes(compute, c, true);
  add_format(compute, c);
  add_budget(compute, c);
  compute->add_flag("--generators", c.generators, "List candidate H2 generator words");
  compute->add_option("--dump-matrix", c.dump_matrix, "Write the image matrix as CSV");
  compute->add_option("--dump-rules", c.dump_rules, "Write the completed rewriting rules");

  auto* table = app.add_subcommand("table", "Dimension tables over corpus groups");
  c.primes = {2, 3, 5, 7};
  add_primes(table, c, false);
  add_format(table, c);
  add_budget(table, c);
  table->add_option("--groups", c.groups, "Comma-separated corpus names")->delimiter(',');

  auto* simp = app.add_subcommand("simplify", "Apply a substitution map and simplify");
  add_source(simp, c);
  simp->add_option("--map", c.map_file, "Substitution map file");

  auto* oracle = app.add_subcommand("oracle-check", "Compare against the bar-complex oracle");
  add_source(oracle, c);
  add_primes(oracle, c, true);
  add_format(oracle, c);
  add_budget(oracle, c);
  oracle->add_option("--max-order", c.max_order, "Largest group order for the oracle");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  // Subcommand defaults for --primes were set up front; compute and
  // oracle-check need an explicit prime.
  auto* chosen = app.get_subcommands().front();
  if ((chosen == compute || chosen == oracle) &&
      chosen->count("--prime") + chosen->count("--primes") == 0) {
    err << "error: --prime or --primes is required\n";
    return 1;
  }

  try {
    if (chosen == compute) return cmd_compute(c, out);
    if (chosen == table) return cmd_table(c, out);
    if (chosen == simp) return cmd_simplify(c, out);
    return cmd_oracle_check(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const OracleUnavailable& e) {
    err << "oracle unavailable: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hopfcalc
