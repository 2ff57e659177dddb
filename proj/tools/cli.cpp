#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpmom/error.hpp"
#include "fpmom/oracle.hpp"
#include "fpmom/recurrence.hpp"
#include "fpmom/ring.hpp"
#include "fpmom/series.hpp"

namespace fpmom::cli {

namespace {

struct RunConfig {
  int rank = 2;
  unsigned max_order = 8;
  unsigned power = 1;
  std::string format;
  std::string source = "recurrence";
  std::string oracle = "both";
  std::optional<unsigned> ring_max_order;
  std::optional<std::uint64_t> support_cap;
  std::string output;
  std::string timestamp = "off";
  bool table = false;
  bool self_test = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t effective_cap(const RunConfig& cfg) {
  if (cfg.support_cap) return *cfg.support_cap;
  if (const char* env = std::getenv("FPMOM_SUPPORT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("FPMOM_SUPPORT_CAP must be a positive integer, got '") + env +
                     "'");
  }
  return kDefaultSupportCap;
}

std::optional<std::string> timestamp(const RunConfig& cfg) {
  if (cfg.timestamp != "on") return std::nullopt;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return std::string(buf);
}

void require_rank(int rank, int minimum) {
  if (rank < minimum) {
    if (minimum >= 2 && rank == 1) {
      throw UsageError(
          "rank 1 is degenerate for amalgamation: h = g1 g1^-1 is the identity, "
          "so there is no cyclic subgroup to project onto");
    }
    throw UsageError("--rank must be >= " + std::to_string(minimum));
  }
}

void require_order(unsigned n, const char* flag) {
  if (n < 1) throw UsageError(std::string(flag) + " must be >= 1");
}

std::string erratum_note(const XDecomposition& d, const KnownErratum& e) {
  return "erratum: coefficient of X_" + std::to_string(e.m) + " in G^" + std::to_string(e.n) +
         " is " + d.coefficient(e.m).get_str() + "; the often quoted value " +
         e.printed.get_str() + " is an arithmetic error";
}

std::string cmd_scalar(const RunConfig& cfg) {
  require_rank(cfg.rank, 1);
  require_order(cfg.max_order, "--max-order");
  const SeriesFormat format = parse_series_format(cfg.format.empty() ? "json" : cfg.format);
  MomentSeries series = [&] {
    if (cfg.source == "tree") return tree_scalar_series(cfg.rank, cfg.max_order);
    if (cfg.source == "ring") return ring_scalar_series(cfg.rank, cfg.max_order, effective_cap(cfg));
    return scalar_series(cfg.rank, cfg.max_order);
  }();
  return emit(series, format, {timestamp(cfg)});
}

std::string cmd_amalg(const RunConfig& cfg) {
  require_rank(cfg.rank, 2);
  require_order(cfg.max_order, "--max-order");
  const SeriesFormat format = parse_series_format(cfg.format.empty() ? "json" : cfg.format);
  MomentSeries series = cfg.source == "ring"
                            ? ring_amalgamated_series(cfg.rank, cfg.max_order, effective_cap(cfg))
                            : amalgamated_series(cfg.rank, cfg.max_order);
  return emit(series, format, {timestamp(cfg)});
}

std::string cmd_xdecomp(const RunConfig& cfg, std::ostream& err) {
  require_rank(cfg.rank, 1);
  require_order(cfg.power, "--power");
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format != "csv" && format != "json" && format != "tex") {
    throw UsageError("unknown format '" + format + "'");
  }

  if (cfg.table) {
    if (cfg.power < 2) throw UsageError("--table needs --power >= 2");
    const PqTable table(cfg.power, cfg.rank);
    if (format == "csv") return table.to_csv();
    if (format == "tex") return table.to_tex();
    nlohmann::ordered_json doc;
    doc["rank"] = cfg.rank;
    doc["max_n"] = cfg.power;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& e : table.entries()) {
      rows.push_back({{"n", e.n},
                      {"m", e.m},
                      {"kind", e.kind == PqKind::kP ? "p" : "q"},
                      {"coeff", e.value.get_str()}});
    }
    doc["entries"] = std::move(rows);
    return doc.dump() + "\n";
  }

  const XDecomposition d = decomposition_of(cfg.power, cfg.rank);
  std::vector<std::string> notes;
  for (const auto& e : known_errata()) {
    if (e.rank == cfg.rank && e.n == cfg.power) notes.push_back(erratum_note(d, e));
  }

  std::ostringstream out;
  if (format == "csv") {
    out << "m,coefficient\n";
    for (const auto& [m, c] : d.terms()) out << m << ',' << c.get_str() << '\n';
    for (const auto& n : notes) err << n << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["rank"] = cfg.rank;
    doc["power"] = cfg.power;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [m, c] : d.terms()) rows.push_back({{"m", m}, {"coeff", c.get_str()}});
    doc["coefficients"] = std::move(rows);
    doc["notes"] = notes;
    out << doc.dump() << '\n';
  } else {
    out << "% G^" << cfg.power << " in the radial basis, N = " << cfg.rank << "\n";
    out << "\\begin{tabular}{rr}\n$m$ & coefficient of $X_m$ \\\\\n\\hline\n";
    for (const auto& [m, c] : d.terms()) {
      const bool flagged = std::any_of(known_errata().begin(), known_errata().end(),
                                       [&](const KnownErratum& e) {
                                         return e.rank == cfg.rank && e.n == cfg.power && e.m == m;
                                       });
      out << m << " & " << c.get_str() << (flagged ? "$^{*}$" : "") << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    for (const auto& n : notes) out << "% * " << n << '\n';
  }
  return out.str();
}

std::string cmd_verify(const RunConfig& cfg, std::ostream& err, bool& failed) {
  require_rank(cfg.rank, 1);
  require_order(cfg.max_order, "--max-order");
  VerifyOptions options;
  options.oracles = parse_oracle_selection(cfg.oracle);
  options.ring_max_order = cfg.ring_max_order;
  options.support_cap = effective_cap(cfg);

  std::vector<DiffReport> reports;
  VerifyOptions scalar_options = options;
  if (cfg.self_test) scalar_options.inject_fault_at = std::min(2u, cfg.max_order);
  reports.push_back(verify_scalar(cfg.rank, cfg.max_order, scalar_options));

  if (options.oracles != OracleSelection::kTree) {
    reports.push_back(verify_radiality(cfg.rank, cfg.max_order, options));
    if (cfg.rank >= 2) {
      reports.push_back(verify_amalgamated(cfg.rank, cfg.max_order, options));
    } else {
      err << "skipping amalgamated check: rank 1 has no nontrivial h\n";
    }
  }

  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.to_json() << '\n';
    err << r.verdict() << ": " << r.subject << '\n';
    for (const auto& m : r.mismatches) {
      err << "  " << m.location << ": expected " << m.expected << ", got " << m.actual << '\n';
    }
    failed = failed || !r.passed();
  }
  return out.str();
}

std::string cmd_expand(const RunConfig& cfg) {
  require_rank(cfg.rank, 1);
  const RingElement g = generating_operator(cfg.rank);
  return to_json(power(g, cfg.power, effective_cap(cfg))) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of the generating operator of a free group factor"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rank,-N", cfg.rank, "free group rank N")->capture_default_str();
    sub->add_option("--support-cap", cfg.support_cap,
                    "max terms in any ring element (env FPMOM_SUPPORT_CAP)");
    sub->add_option("--output,-o", cfg.output, "write data here instead of stdout");
  };
  auto add_series = [&](CLI::App* sub, std::vector<std::string> sources) {
    sub->add_option("--max-order,-n", cfg.max_order, "highest moment order")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "json | csv | tex")
        ->check(CLI::IsMember({"json", "csv", "tex"}));
    sub->add_option("--source", cfg.source, "which engine computes the values")
        ->check(CLI::IsMember(sources))
        ->capture_default_str();
    sub->add_option("--timestamp", cfg.timestamp, "on | off")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
  };

  auto* scalar = app.add_subcommand("scalar", "tau(G^n) for n = 1..max-order");
  add_common(scalar);
  add_series(scalar, {"recurrence", "tree", "ring"});

  auto* amalg = app.add_subcommand("amalg", "E(G^n) onto <h>, h = g1..gN g1^-1..gN^-1");
  add_common(amalg);
  add_series(amalg, {"recurrence", "ring"});

  auto* xdecomp = app.add_subcommand("xdecomp", "coefficients of G^power in the X_m basis");
  add_common(xdecomp);
  xdecomp->add_option("--power,-p", cfg.power, "power of G")->capture_default_str();
  xdecomp->add_option("--format", cfg.format, "csv | json | tex")
      ->check(CLI::IsMember({"json", "csv", "tex"}));
  xdecomp->add_flag("--table", cfg.table, "every p/q coefficient up to G^power");

  auto* verify = app.add_subcommand("verify", "cross-check the recurrence against the oracles");
  add_common(verify);
  verify->add_option("--max-order,-n", cfg.max_order, "highest order checked")
      ->capture_default_str();
  verify->add_option("--oracle", cfg.oracle, "ring | tree | both")
      ->check(CLI::IsMember({"ring", "tree", "both"}))
      ->capture_default_str();
  verify->add_option("--ring-max-order", cfg.ring_max_order,
                     "highest order expanded in the group ring");
  verify->add_flag("--self-test", cfg.self_test, "perturb one recurrence value; must fail");

  auto* expand = app.add_subcommand("expand", "G^power expanded in Z[F_N] as JSON");
  add_common(expand);
  expand->add_option("--power,-p", cfg.power, "power of G")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsageError;
  }

  bool failed = false;
  std::string data;
  try {
    if (scalar->parsed()) {
      data = cmd_scalar(cfg);
    } else if (amalg->parsed()) {
      data = cmd_amalg(cfg);
    } else if (xdecomp->parsed()) {
      data = cmd_xdecomp(cfg, err);
    } else if (verify->parsed()) {
      data = cmd_verify(cfg, err, failed);
    } else {
      data = cmd_expand(cfg);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DegenerateSubgroupError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.output.empty()) {
    out << data;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "cannot open output file '" << cfg.output << "'\n";
      return kUsageError;
    }
    file << data;
  }
  return failed ? kVerificationFailed : kSuccess;
}

}  // namespace fpmom::cli
