#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncstirling/identities.hpp"
#include "ncstirling/jet.hpp"
#include "ncstirling/stirling.hpp"

namespace ncs::cli {

namespace {

// Writes `body` to config.out_path, or to `out` when no path is set.
bool emit(const RunConfig& config, const std::string& body, std::ostream& out, std::ostream& err) {
  if (config.out_path.empty()) {
    out << body;
    return static_cast<bool>(out);
  }
  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << config.out_path << "' for writing\n";
    return false;
  }
  file << body;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << config.out_path << "'\n";
    return false;
  }
  return true;
}

void print_failures(const SuiteResult& suite, std::span<const ResidualReport> oracle,
                    std::ostream& err) {
  for (const auto& r : suite.poly) {
    if (r.holds) continue;
    err << "FAIL " << r.identity << " n=" << r.n << " k=" << r.k << ": " << r.lhs.to_string()
        << " != " << r.rhs.to_string() << '\n';
  }
  for (const auto& r : suite.scalar) {
    if (r.holds) continue;
    err << "FAIL " << r.identity << " n=" << r.n;
    if (r.alpha) err << " alpha=" << *r.alpha;
    err << ": " << r.lhs << " != " << r.rhs << '\n';
  }
  for (const auto& r : oracle) {
    if (r.pass) continue;
    err << "FAIL eq1 n=" << r.n << " alpha=" << r.alpha << " beta=" << r.beta << " x0=" << r.x0
        << ": jet=" << r.jet_value << " expansion=" << r.expansion_value
        << " rel_residual=" << r.rel_residual << '\n';
  }
}

}  // namespace

int cmd_triangle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const NoncentralTriangle tri = config.construction == Construction::kRecurrence
                                     ? build_by_recurrence(config.n_max)
                                     : build_by_explicit(config.n_max);
  std::ostringstream body;
  if (config.format == Format::kJson) {
    write_triangle_json(body, tri);
  } else {
    write_triangle_csv(body, tri);
  }
  return emit(config, body.str(), out, err) ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SuiteOptions opts = SuiteOptions::for_order(config.n_max, config.seed);
  const std::size_t order = opts.required_order();

  // The two constructions are independent; build them side by side.
  auto classical = std::async(std::launch::async, [order] { return build_stirling_table(order); });
  auto recurrence = std::async(std::launch::async, [order] { return build_by_recurrence(order); });
  const StirlingTable table = classical.get();
  const NoncentralTriangle explicit_form = build_by_explicit(order, table);
  NoncentralTriangle primary = recurrence.get();

  if (config.corrupt) {
    const auto [n, k, power] = *config.corrupt;
    primary = primary.with_perturbed_coefficient(n, k, power, ExactInt(1));
  }

  const SuiteResult suite = run_suite(primary, explicit_form, table, opts);

  std::vector<ResidualReport> oracle;
  if (config.with_oracle) {
    OracleGrid grid = OracleGrid::standard();
    grid.n_max = std::min(grid.n_max, config.n_max);
    oracle = run_oracle_grid(primary, grid, config.tolerance);
  }

  std::ostringstream body;
  if (config.format == Format::kJson) {
    std::ostringstream suite_json;
    write_suite_json(suite_json, suite);
    auto doc = nlohmann::ordered_json::parse(suite_json.str());
    if (config.with_oracle) {
      std::ostringstream oracle_json;
      write_residuals_json(oracle_json, oracle);
      doc["oracle_tolerance"] = std::to_string(config.tolerance);
      doc["oracle"] = nlohmann::ordered_json::parse(oracle_json.str());
    }
    body << doc.dump(1) << '\n';
  } else {
    write_suite_csv(body, suite);
    if (config.with_oracle) {
      body << '\n';
      write_residuals_csv(body, oracle);
    }
  }
  if (!emit(config, body.str(), out, err)) return kExitFailure;

  const auto oracle_failures = static_cast<std::size_t>(
      std::count_if(oracle.begin(), oracle.end(), [](const auto& r) { return !r.pass; }));
  const std::size_t failures = suite.failures() + oracle_failures;
  print_failures(suite, oracle, err);
  err << "verify: " << suite.poly.size() + suite.scalar.size() << " identity reports";
  if (config.with_oracle) err << ", " << oracle.size() << " oracle points";
  err << ", " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.n || !config.k || !config.alpha) {
    err << "error: eval needs --n, --k and --alpha\n";
    return kExitUsage;
  }
  const std::size_t n = *config.n;
  const std::size_t k = *config.k;
  if (k > n) {
    err << "error: --k must not exceed --n\n";
    return kExitUsage;
  }
  if (config.beta.has_value() != config.x0.has_value()) {
    err << "error: --beta and --x0 must be given together\n";
    return kExitUsage;
  }
  const NoncentralTriangle tri = build_by_recurrence(n);
  out << noncentral_eval(tri, n, k, *config.alpha) << '\n';
  if (config.beta) {
    try {
      out << "expansion " << evaluate_expansion(tri, *config.x0, *config.alpha, *config.beta, n)
          << '\n';
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-central Stirling numbers of the first kind: tables, identities, oracle"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string construction = "recurrence";
  std::string alpha_text;
  std::string corrupt_text;
  std::size_t n_max_triangle = 64;
  std::size_t n_max_verify = 20;
  std::size_t n_value = 0;
  std::size_t k_value = 0;
  double beta = 0.0;
  double x0 = 0.0;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "Output file (default: stdout)");
  };

  auto* triangle = app.add_subcommand("triangle", "Emit the non-central triangle s(n,k,alpha)");
  triangle->add_option("--n-max", n_max_triangle, "Largest n")->capture_default_str();
  triangle->add_option("--construction", construction, "Construction")
      ->check(CLI::IsMember({"recurrence", "explicit"}))
      ->capture_default_str();
  add_output(triangle);

  auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
  verify->add_option("--n-max", n_max_verify, "Largest n")->capture_default_str();
  verify->add_flag("--with-oracle", config.with_oracle, "Also run the jet derivative grid");
  verify->add_option("--tol", config.tolerance, "Relative tolerance for the oracle grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for random rational alpha")->capture_default_str();
  verify->add_option("--corrupt-coefficient", corrupt_text, "Test hook: n,k,power")
      ->group("");
  add_output(verify);

  auto* eval = app.add_subcommand("eval", "Evaluate s(n,k,alpha) exactly");
  eval->add_option("--n", n_value, "n")->required();
  eval->add_option("--k", k_value, "k")->required();
  eval->add_option("--alpha", alpha_text, "alpha as an integer or p/q")->required();
  auto* beta_opt = eval->add_option("--beta", beta, "beta for the derivative expansion");
  auto* x0_opt = eval->add_option("--x0", x0, "Expansion point, x0 > 1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    config.format = format == "csv" ? Format::kCsv : Format::kJson;
    if (triangle->parsed()) {
      config.subcommand = "triangle";
      config.n_max = n_max_triangle;
      config.construction = parse_construction(construction);
      return cmd_triangle(config, out, err);
    }
    if (verify->parsed()) {
      config.subcommand = "verify";
      config.n_max = n_max_verify;
      if (!corrupt_text.empty()) {
        std::array<std::size_t, 3> idx{};
        std::istringstream in(corrupt_text);
        char c1 = 0;
        char c2 = 0;
        if (!(in >> idx[0] >> c1 >> idx[1] >> c2 >> idx[2]) || c1 != ',' || c2 != ',') {
          err << "error: --corrupt-coefficient expects n,k,power\n";
          return kExitUsage;
        }
        config.corrupt = idx;
      }
      return cmd_verify(config, out, err);
    }
    config.subcommand = "eval";
    config.n = n_value;
    config.k = k_value;
    config.alpha = Rational::parse(alpha_text);
    if (*beta_opt) config.beta = beta;
    if (*x0_opt) config.x0 = x0;
    return cmd_eval(config, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ncs::cli
