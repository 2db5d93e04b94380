// Command-line front end for the chi tables and verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 integrality violation,
// 3 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "chigen/genus0.hpp"
#include "chigen/genus1.hpp"
#include "chigen/verify.hpp"
#include "chigen/version.hpp"

namespace {

using namespace chigen;

struct RunConfig {
  int genus = 1;
  int n = 1;
  int cap_d = 0;
  int cap_di = 0;
  std::string format = "csv";
  std::optional<std::string> cache_dir;
  int threads = 1;
  std::vector<std::string> suites;
};

PipelineOptions pipeline_options(const RunConfig& cfg) {
  PipelineOptions opts;
  opts.threads = cfg.threads;
  if (cfg.cache_dir) {
    opts.cache_dir = *cfg.cache_dir;
  } else if (const char* env = std::getenv("CHI_CACHE_DIR")) {
    opts.cache_dir = std::string(env);
  }
  return opts;
}

void print_chi_csv(const ChiTable& t, std::ostream& os) {
  os << "d";
  for (int i = 1; i <= t.n; ++i) os << ",d" << i;
  os << ",chi\n";
  for (const auto& [key, value] : t.entries) {
    os << key.d;
    for (int di : key.di) os << "," << di;
    os << "," << value.str() << "\n";
  }
}

void print_chi_json(const ChiTable& t, std::ostream& os) {
  os << "{\"n\":" << t.n << ",\"cap_d\":" << t.cap_d
     << ",\"cap_di\":" << t.cap_di << ",\"engine_version\":\""
     << kEngineVersion << "\",\"entries\":[";
  bool first = true;
  for (const auto& [key, value] : t.entries) {
    os << (first ? "" : ",") << "{\"d\":" << key.d << ",\"di\":[";
    for (size_t i = 0; i < key.di.size(); ++i)
      os << (i ? "," : "") << key.di[i];
    os << "],\"chi\":\"" << value.str() << "\"}";
    first = false;
  }
  os << "]}\n";
}

void print_chi(const ChiTable& t, const RunConfig& cfg) {
  if (cfg.format == "json")
    print_chi_json(t, std::cout);
  else
    print_chi_csv(t, std::cout);
}

void print_series_csv(const MultiSeries& s, const std::string& value_col,
                      int first_var, std::ostream& os) {
  // Column names: d for the Hodge slot (first_var 0) then d1..; genus-0
  // series start the cotangent numbering at the first slot.
  if (first_var == 0) {
    os << "d";
    for (int i = 1; i < s.arity(); ++i) os << ",d" << i;
  } else {
    for (int i = 0; i < s.arity(); ++i) os << (i ? "," : "") << "d" << (i + 1);
  }
  os << "," << value_col << "\n";
  for (const auto& [e, c] : s.terms()) {
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "," << rat_str(c) << "\n";
  }
}

void print_series_json(const MultiSeries& s, const std::string& value_col,
                       std::ostream& os) {
  os << "{\"engine_version\":\"" << kEngineVersion << "\",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    os << (first ? "" : ",") << "{\"e\":[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "],\"" << value_col << "\":\"" << rat_str(c) << "\"}";
    first = false;
  }
  os << "]}\n";
}

int run_chi(const RunConfig& cfg) {
  if (cfg.genus == 0) {
    Genus0Series g = genus0_series(std::max(cfg.n, 3), cfg.cap_di);
    if (cfg.format == "json")
      print_series_json(g.series, "chi", std::cout);
    else
      print_series_csv(g.series, "chi", 1, std::cout);
    return 0;
  }
  print_chi(chi_table(cfg.n, cfg.cap_d, cfg.cap_di, pipeline_options(cfg)),
            cfg);
  return 0;
}

int run_x1(const RunConfig& cfg) {
  print_chi(chi_table(1, cfg.cap_d, cfg.cap_di, pipeline_options(cfg)), cfg);
  return 0;
}

int run_phi(const RunConfig& cfg) {
  MultiSeries s = phi(cfg.n, cfg.cap_d, cfg.cap_di);
  if (cfg.format == "json")
    print_series_json(s, "phi", std::cout);
  else
    print_series_csv(s, "phi", 0, std::cout);
  return 0;
}

int run_genus0(const RunConfig& cfg) {
  Genus0Series g = genus0_series(cfg.n, cfg.cap_di);
  auto violations = check_nonnegative(g.series);
  if (!violations.empty()) {
    std::cerr << "nonnegativity violated on the " << g.n
              << "-pointed series\n";
    return 3;
  }
  if (cfg.format == "json")
    print_series_json(g.series, "chi", std::cout);
  else
    print_series_csv(g.series, "chi", 1, std::cout);
  return 0;
}

int run_verify_cmd(const RunConfig& cfg) {
  auto results = run_verify(cfg.suites);
  bool all_passed = true;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << "\n";
    } else {
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
      all_passed = false;
    }
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of cotangent line bundles on the "
               "moduli of pointed genus-1 stable curves"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd, bool with_n) {
    if (with_n) cmd->add_option("-n", cfg.n, "number of marked points");
    cmd->add_option("--cap-d", cfg.cap_d, "maximum Hodge exponent d");
    cmd->add_option("--cap-di", cfg.cap_di, "maximum cotangent exponent d_i");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--cache-dir", cfg.cache_dir,
                    "cache directory for intermediate series "
                    "(default: $CHI_CACHE_DIR)");
    cmd->add_option("--threads", cfg.threads, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* chi = app.add_subcommand("chi", "compute a chi table");
  chi->add_option("--genus", cfg.genus, "genus (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  add_common(chi, true);

  CLI::App* x1 = app.add_subcommand("x1", "the one-pointed base-case table");
  add_common(x1, false);

  CLI::App* phi_cmd =
      app.add_subcommand("phi", "twisted-sector generating function Phi_n");
  add_common(phi_cmd, true);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suites,
                     "suite name (repeatable; default: all)");

  CLI::App* genus0 =
      app.add_subcommand("genus0", "iterated genus-0 pushforward table");
  add_common(genus0, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (chi->parsed()) {
      if (cfg.n < 1 || cfg.cap_d < 0 || cfg.cap_di < 0) {
        std::cerr << "chi requires n >= 1 and nonnegative caps\n";
        return 1;
      }
      return run_chi(cfg);
    }
    if (x1->parsed()) return run_x1(cfg);
    if (phi_cmd->parsed()) {
      if (cfg.n < 2) {
        std::cerr << "phi requires n >= 2\n";
        return 1;
      }
      return run_phi(cfg);
    }
    if (verify->parsed()) return run_verify_cmd(cfg);
    if (genus0->parsed()) {
      if (cfg.n < 3) {
        std::cerr << "genus0 requires n >= 3\n";
        return 1;
      }
      return run_genus0(cfg);
    }
  } catch (const chigen::IntegralityError& e) {
    std::cerr << "integrality violation: " << e.what() << " at (";
    for (size_t i = 0; i < e.exponent.size(); ++i)
      std::cerr << (i ? "," : "") << e.exponent[i];
    std::cerr << ") value " << chigen::rat_str(e.value) << "\n";
    return 2;
  } catch (const chigen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
