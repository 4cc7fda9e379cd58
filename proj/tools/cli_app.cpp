#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "knotmosaic/errors.hpp"
#include "knotmosaic/mosaic_io.hpp"
#include "knotmosaic/oracle.hpp"
#include "knotmosaic/render.hpp"
#include "knotmosaic/transfer.hpp"
#include "knotmosaic/verify.hpp"
#include "knotmosaic/xfree.hpp"

namespace knotmosaic::cli {
namespace {

using nlohmann::json;

enum class Engine { kDense, kMatrixFree, kAuto };
enum class Format { kPlain, kJson, kCsv };

const std::map<std::string, Engine> kEngineNames = {
    {"dense", Engine::kDense}, {"matrixfree", Engine::kMatrixFree}, {"auto", Engine::kAuto}};
const std::map<std::string, Format> kFormatNames = {
    {"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}};

// Dense matrices stay small enough through p = 6.
constexpr int kAutoDenseMaxOrder = 6;

Engine resolve(Engine engine, int m) {
  if (engine != Engine::kAuto) return engine;
  return m - 2 <= kAutoDenseMaxOrder ? Engine::kDense : Engine::kMatrixFree;
}

const char* engine_name(Engine engine) {
  switch (engine) {
    case Engine::kDense:
      return "dense";
    case Engine::kMatrixFree:
      return "matrixfree";
    case Engine::kAuto:
      return "auto";
  }
  return "?";
}

Natural count_with(Engine engine, int m, int n) {
  return resolve(engine, m) == Engine::kDense ? count_dense(m, n) : count_matrixfree(m, n);
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const Natural value = parse_natural(raw);
  if (value == 0 || !value.fits_ulong_p()) {
    throw InvalidInput(std::string(name) + " must be a positive 64-bit integer");
  }
  return value.get_ui();
}

oracle::EnumBudget budget_from_env() {
  const oracle::EnumBudget defaults;
  return {env_budget("KNOTMOSAIC_MAX_CELLS", defaults.max_cells),
          env_budget("KNOTMOSAIC_MAX_NODES", defaults.max_nodes)};
}

std::vector<Mosaic> read_documents(const std::string& path, std::istream& in) {
  if (path == "-") return read_mosaic_documents(in);
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot open '" + path + "'");
  return read_mosaic_documents(file);
}

void write_documents(std::ostream& out, const std::vector<Mosaic>& mosaics) {
  for (std::size_t i = 0; i < mosaics.size(); ++i) {
    if (i > 0) out << '\n';
    write_mosaic(out, mosaics[i]);
  }
}

double growth_ratio(const Natural& count, int n) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, count.get_mpz_t());
  const double log_count = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
  return std::exp(log_count / (static_cast<double>(n) * n));
}

struct Args {
  int m = 0;
  int n = 0;
  int max_n = 0;
  int p = 0;
  int q = 1;
  std::string kind = "N";
  Engine engine = Engine::kAuto;
  Format format = Format::kPlain;
  bool full = false;
  bool knot = false;
  std::uint64_t limit = 0;
  std::string path;
};

int cmd_count(const Args& a, std::ostream& out) {
  const Natural count = count_with(a.engine, a.m, a.n);
  const Engine used = resolve(a.engine, a.m);
  switch (a.format) {
    case Format::kPlain:
      out << to_decimal(count) << '\n';
      break;
    case Format::kJson:
      out << json{{"m", a.m}, {"n", a.n}, {"count", to_decimal(count)}, {"engine", engine_name(used)}}
                 .dump()
          << '\n';
      break;
    case Format::kCsv:
      out << "m,n,count,engine\n"
          << a.m << ',' << a.n << ',' << to_decimal(count) << ',' << engine_name(used) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_table(const Args& a, std::ostream& out) {
  if (a.max_n < 1) throw InvalidInput("table needs max_n >= 1");
  json rows = json::array();
  if (a.format == Format::kCsv) out << "n,count\n";
  for (int n = 1; n <= a.max_n; ++n) {
    const std::string count = to_decimal(count_with(Engine::kAuto, n, n));
    switch (a.format) {
      case Format::kPlain:
        out << n << ' ' << count << '\n';
        break;
      case Format::kCsv:
        out << n << ',' << count << '\n';
        break;
      case Format::kJson:
        rows.push_back({{"n", n}, {"count", count}});
        break;
    }
  }
  if (a.format == Format::kJson) out << rows.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  VerifyOptions options;
  options.level = a.full ? VerifyLevel::kFull : VerifyLevel::kQuick;
  options.budget = budget_from_env();
  const VerifyReport report = run_verification(options);
  int passed = 0, mismatched = 0, budget = 0;
  for (const auto& check : report.checks) {
    out << json{{"check", check.name}, {"status", to_string(check.status)}, {"detail", check.detail}}
               .dump()
        << '\n';
    passed += check.status == CheckStatus::kPass;
    mismatched += check.status == CheckStatus::kMismatch;
    budget += check.status == CheckStatus::kBudget;
  }
  out << json{{"summary", {{"passed", passed}, {"mismatch", mismatched}, {"budget", budget}}}}.dump()
      << '\n';
  if (report.any_mismatch()) return kExitMismatch;
  if (report.any_budget()) return kExitBudget;
  return kExitOk;
}

int cmd_enumerate(const Args& a, std::ostream& out) {
  const auto budget = budget_from_env();
  std::uint64_t emitted = 0;
  auto visit = [&](const Mosaic& mosaic) {
    if (a.limit != 0 && emitted >= a.limit) return false;
    if (emitted > 0) out << '\n';
    write_mosaic(out, mosaic);
    ++emitted;
    return a.limit == 0 || emitted < a.limit;
  };
  if (a.knot) {
    oracle::enumerate_knot_mosaics(a.m, a.n, budget, visit);
  } else {
    oracle::enumerate_suitably_connected(a.m, a.n, budget, visit);
  }
  if (emitted > 0) out << '\n';
  out << "count " << emitted << '\n';
  return kExitOk;
}

int cmd_complete(const Args& a, std::istream& in, std::ostream& out) {
  const auto docs = read_documents(a.path, in);
  if (docs.size() != 1) throw InvalidInput("complete expects exactly one mosaic document");
  write_documents(out, oracle::complete_to_knot(docs.front(), budget_from_env()));
  return kExitOk;
}

int cmd_render(const Args& a, std::istream& in, std::ostream& out) {
  const auto docs = read_documents(a.path, in);
  if (docs.empty()) throw InvalidInput("no mosaic documents to render");
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out << '\n';
    out << render_mosaic(docs[i]);
  }
  return kExitOk;
}

int cmd_growth(const Args& a, std::ostream& out) {
  if (a.max_n < 2) throw InvalidInput("growth needs max_n >= 2");
  for (int n = 2; n <= a.max_n; ++n) {
    out << n << ' ' << std::fixed << std::setprecision(6)
        << growth_ratio(count_with(Engine::kAuto, n, n), n) << '\n';
  }
  return kExitOk;
}

int cmd_dump_matrix(const Args& a, std::ostream& out) {
  if (a.p < 0) throw InvalidInput("p must be non-negative");
  if (a.q < 1) throw InvalidInput("q must be at least 1");
  const char kind = a.kind.front();
  if (kind != 'N' && a.q != 1) throw InvalidInput("--q applies only to kind N");
  const auto split = build_split(a.p);
  switch (kind) {
    case 'X':
      write_state_matrix(out, split.x, 'X');
      break;
    case 'O':
      write_state_matrix(out, split.o, 'O');
      break;
    default:
      write_state_matrix(out, mat_power(mat_add(split.x, split.o), a.q), 'N');
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact counting and manipulation of knot mosaics", "knotmosaic"};
  app.require_subcommand(1);
  Args a;

  auto* count = app.add_subcommand("count", "Number of knot (m,n)-mosaics");
  count->add_option("m", a.m)->required();
  count->add_option("n", a.n)->required();
  count->add_option("--engine", a.engine)->transform(CLI::CheckedTransformer(kEngineNames));
  count->add_option("--format", a.format)->transform(CLI::CheckedTransformer(kFormatNames));

  auto* table = app.add_subcommand("table", "Knot n-mosaic counts for n = 1..max_n");
  table->add_option("max_n", a.max_n)->required();
  table->add_option("--format", a.format)->transform(CLI::CheckedTransformer(kFormatNames));

  auto* verify = app.add_subcommand("verify", "Check the recurrence against brute force");
  verify->add_flag("--full", a.full);

  auto* enumerate = app.add_subcommand("enumerate", "List suitably connected or knot mosaics");
  enumerate->add_option("m", a.m)->required();
  enumerate->add_option("n", a.n)->required();
  enumerate->add_flag("--knot", a.knot);
  enumerate->add_option("--limit", a.limit, "Stop after N documents (0 = no limit)");

  auto* complete = app.add_subcommand("complete", "Border a mosaic into knot mosaics");
  complete->add_option("file", a.path)->required();

  auto* render = app.add_subcommand("render", "ASCII drawing of mosaic documents");
  render->add_option("file", a.path)->required();

  auto* growth = app.add_subcommand("growth", "D(n,n)^(1/n^2) for n = 2..max_n");
  growth->add_option("max_n", a.max_n)->required();

  auto* dump = app.add_subcommand("dump-matrix", "Print X_p, O_p or N^(p,q)");
  dump->add_option("p", a.p)->required();
  dump->add_option("--kind", a.kind)->check(CLI::IsMember({"X", "O", "N"}));
  dump->add_option("--q", a.q);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*count) return cmd_count(a, out);
    if (*table) return cmd_table(a, out);
    if (*verify) return cmd_verify(a, out);
    if (*enumerate) return cmd_enumerate(a, out);
    if (*complete) return cmd_complete(a, in, out);
    if (*render) return cmd_render(a, in, out);
    if (*growth) return cmd_growth(a, out);
    if (*dump) return cmd_dump_matrix(a, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  return kExitInvalidInput;
}

}  // namespace knotmosaic::cli
