#include "lsp/context.hpp"
#include "lsp/modular.hpp"
#include "lsp/series.hpp"
#include "lsp/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_precision() {
  const char* env = std::getenv("LSP_PRECISION_BITS");
  if (!env || !*env) return lsp::kDefaultPrecisionBits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64 || v > 65536) throw UsageError("LSP_PRECISION_BITS must be an integer in [64, 65536]");
  return static_cast<unsigned>(v);
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "minus" || s == "-1") return -1;
  throw UsageError("--sign must be + or -");
}

const lsp::PrimeContext& checked_context(std::int64_t p) {
  try {
    return lsp::context_for(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// writes to path, or stdout for "-"
void emit(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("write to stdout failed");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << data;
  f.close();
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::string oracle_csv(const lsp::SignedPartitionTable& t) {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += t.values[n].get_str();
    out += '\n';
  }
  return out;
}

std::string oracle_json(const lsp::SignedPartitionTable& t) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t n = 0; n < t.values.size(); ++n) values.push_back({n, t.values[n].get_str()});
  nlohmann::json j = {{"schema", lsp::kReportSchema},
                      {"p", t.p},
                      {"sign", t.sign > 0 ? "+" : "-"},
                      {"n_max", t.values.size() - 1},
                      {"values", values}};
  return j.dump() + "\n";
}

void print_summary(const lsp::Report& r) {
  for (const auto& c : r.checks) std::cout << to_string(c.status) << "  " << c.id << "  " << c.witness << "\n";
  std::cout << "suite " << r.suite << " (" << to_string(r.scale) << "): " << r.count(lsp::Status::pass) << " pass, "
            << r.count(lsp::Status::fail) << " fail, " << r.count(lsp::Status::inconclusive) << " inconclusive, "
            << r.elapsed_seconds << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre-signed partition numbers: exact tables, series evaluation and verification suites"};
  app.require_subcommand(1);
  unsigned precision = 0;
  app.add_option("--precision", precision, "working precision in bits (default: $LSP_PRECISION_BITS or 128)")
      ->check(CLI::Range(64u, 65536u));

  auto* oracle = app.add_subcommand("oracle", "exact table of p(n, sign * (./p)) for 0 <= n <= n_max");
  std::int64_t o_p = 0, o_nmax = 0;
  std::string o_sign = "+", o_format = "csv", o_out = "-";
  oracle->add_option("--p", o_p, "prime, p = 1 mod 4")->required();
  oracle->add_option("--sign", o_sign, "+ or -");
  oracle->add_option("--n-max", o_nmax, "largest n")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--format", o_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  oracle->add_option("--out", o_out, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all", v_scale = "quick", v_report;
  std::vector<std::string> suites = lsp::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", v_suite, "dedekind, charsums, tau, feq, rademacher or all")->check(CLI::IsMember(suites));
  verify->add_option("--scale", v_scale, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--report", v_report, "JSON report path (default lsp-verify-<suite>.json, - for stdout)");

  auto* scan = app.add_subcommand("scan", "residue classes mod 2p on which p(n, sign * (./p)) vanishes");
  std::int64_t s_pmin = 5, s_pmax = 50, s_nmax = 5000;
  std::string s_sign = "+", s_out = "-";
  scan->add_option("--p-min", s_pmin, "smallest prime");
  scan->add_option("--p-max", s_pmax, "largest prime");
  scan->add_option("--sign", s_sign, "+ or -");
  scan->add_option("--n-max", s_nmax, "largest n")->check(CLI::PositiveNumber);
  scan->add_option("--out", s_out, "CSV output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (precision == 0) precision = default_precision();

    if (*oracle) {
      const auto& ctx = checked_context(o_p);
      auto table = lsp::oracle_table(ctx, parse_sign(o_sign), o_nmax);
      emit(o_out, o_format == "csv" ? oracle_csv(table) : oracle_json(table));
      return 0;
    }

    if (*verify) {
      auto report = lsp::run_suite(v_suite, v_scale == "full" ? lsp::Scale::full : lsp::Scale::quick, precision);
      print_summary(report);
      std::string path = v_report.empty() ? "lsp-verify-" + v_suite + ".json" : v_report;
      emit(path, lsp::to_json(report).dump(2) + "\n");
      return lsp::exit_code(report);
    }

    if (*scan) {
      int sign = parse_sign(s_sign);
      if (s_pmin > s_pmax) throw UsageError("--p-min exceeds --p-max");
      std::ostringstream csv;
      csv << "p,sign,modulus,n_min,n_max,vanishing_residues\n";
      std::vector<std::int64_t> hits;
      for (std::int64_t p = std::max<std::int64_t>(s_pmin, 5); p <= s_pmax; ++p) {
        if (p % 4 != 1 || !lsp::is_prime(p)) continue;
        std::int64_t n_min = std::max<std::int64_t>(2 * p, 50);
        std::set<std::int64_t> res;
        if (n_min <= s_nmax) res = lsp::scan_vanishing(lsp::context_for(p), sign, 2 * p, n_min, s_nmax);
        csv << p << ',' << (sign > 0 ? '+' : '-') << ',' << 2 * p << ',' << n_min << ',' << s_nmax << ',';
        bool first = true;
        for (auto r : res) {
          csv << (first ? "" : " ") << r;
          first = false;
        }
        csv << '\n';
        if (!res.empty()) hits.push_back(p);
      }
      emit(s_out, csv.str());
      std::ostream& log = s_out == "-" ? std::cerr : std::cout;
      log << "primes with a vanishing class:";
      for (auto p : hits) log << ' ' << p;
      log << (hits.empty() ? " none\n" : "\n");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
