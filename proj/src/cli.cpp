#include "lerch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lerch/bench.hpp"
#include "lerch/errors.hpp"
#include "lerch/exact.hpp"
#include "lerch/rational.hpp"
#include "lerch/verify.hpp"

namespace lerch::cli {

namespace {

using nlohmann::json;
using series::Complex;

constexpr double kDefaultTol = 1e-12;
constexpr std::uint64_t kDefaultMaxTerms = 10000;

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("malformed number '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("malformed number '" + text + "'");
  return value;
}

json finite_or_null(double value) {
  return std::isfinite(value) ? json(value) : json(nullptr);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
  file << contents;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, T (*convert)(const std::string&)) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty entry in list '" + text + "'");
    values.push_back(convert(item));
  }
  if (values.empty()) throw InvalidArgument("empty list");
  return values;
}

unsigned parse_unsigned(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("malformed integer '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("malformed integer '" + text + "'");
  return static_cast<unsigned>(value);
}

struct EvalOptions {
  unsigned s = 0;
  std::string w;
  std::string z;
  std::string alpha;
  std::string alpha_rat;
  std::string method = "accelerated";
  double tol = kDefaultTol;
  std::uint64_t max_terms = kDefaultMaxTerms;
  std::string json_path;
};

struct ZetaOptions {
  unsigned s = 0;
  double tol = kDefaultTol;
  std::uint64_t max_terms = kDefaultMaxTerms;
  std::string json_path;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<unsigned> q_max;
  std::optional<unsigned> s_max;
  std::optional<unsigned> p_max;
  std::vector<std::string> betas;
  std::string json_path;
};

struct BenchOptions {
  std::string s_list = "2,3,4,5,6";
  std::string tol_list = "1e-6,1e-8,1e-10,1e-12";
  std::uint64_t max_terms = bench::BenchConfig{}.max_terms;
  std::string csv_path;
  std::string json_path;
};

int cmd_eval(const EvalOptions& opts, std::ostream& out) {
  if (opts.s == 0) throw InvalidArgument("--s must be >= 1");
  if (opts.w.empty() == opts.z.empty()) throw InvalidArgument("exactly one of --w or --z is required");

  std::optional<Rational> alpha_exact;
  Complex alpha(0.0, 0.0);
  if (!opts.alpha_rat.empty()) {
    alpha_exact = Rational::parse(opts.alpha_rat);
    alpha = Complex(alpha_exact->to_double(), 0.0);
  } else if (!opts.alpha.empty()) {
    alpha = parse_complex(opts.alpha);
  }
  const series::ShiftParam shift(alpha);
  const bool have_z = !opts.z.empty();
  const Complex point = parse_complex(have_z ? opts.z : opts.w);

  series::SeriesResult result;
  if (opts.method == "accelerated") {
    result = have_z ? series::lerch_accelerated_z(point, shift, opts.s, opts.tol, opts.max_terms)
                    : series::lerch_accelerated(point, shift, opts.s, opts.tol, opts.max_terms);
  } else if (opts.method == "direct") {
    const Complex w = have_z ? series::w_from_z(point) : point;
    result = series::lerch_direct(w, shift, opts.s, opts.tol, opts.max_terms);
  } else if (opts.method == "euler") {
    if (!have_z && !(point.real() < 0.5)) throw DomainError("Euler-transform form requires Re(w) < 1/2");
    const Complex z = have_z ? point : series::z_from_w(point);
    // The exchanged series has the same coefficients, so the accelerated
    // stopping rule picks its truncation index and bound.
    const auto guide = series::lerch_accelerated_z(z, shift, opts.s, opts.tol, opts.max_terms);
    const auto terms = static_cast<unsigned>(
        std::min<std::uint64_t>(guide.terms_used, series::kEulerMaxTerms));
    result.value = series::euler_transform_eval(z, shift, opts.s, terms);
    result.terms_used = terms;
    result.error_bound = terms == guide.terms_used
                             ? guide.error_bound
                             : series::accelerated_tail_bound(std::abs(z), shift, opts.s, terms);
    result.converged = guide.converged && terms == guide.terms_used;
  } else {
    throw InvalidArgument("unknown --method '" + opts.method + "'");
  }

  json doc{{"value_re", result.value.real()},
           {"value_im", result.value.imag()},
           {"terms_used", result.terms_used},
           {"error_bound", finite_or_null(result.error_bound)},
           {"converged", result.converged}};
  if (alpha_exact) {
    // Cross-check the binary64 coefficients against exact rationals.
    const auto p_max = static_cast<unsigned>(std::min<std::uint64_t>(result.terms_used, 40));
    series::CoefficientSequence seq(shift, opts.s);
    double worst = 0.0;
    for (unsigned p = 1; p <= p_max; ++p) {
      const double exact = exact::coefficient_exact(p, *alpha_exact, opts.s).to_double();
      worst = std::max(worst, std::abs(seq.next() - exact) / std::abs(exact));
    }
    doc["exact_check"] = {{"p_max", p_max}, {"max_rel_diff", worst}};
  }
  const std::string text = doc.dump();
  out << text << '\n';
  if (!opts.json_path.empty()) write_file(opts.json_path, text + "\n");
  return result.converged ? kExitOk : kExitNotConverged;
}

int cmd_zeta(const ZetaOptions& opts, std::ostream& out) {
  const auto result = series::zeta_accelerated(opts.s, opts.tol, opts.max_terms);
  json doc{{"s", opts.s},
           {"value", result.value.real()},
           {"terms_used", result.terms_used},
           {"error_bound", finite_or_null(result.error_bound)},
           {"converged", result.converged}};
  const std::string text = doc.dump();
  out << text << '\n';
  if (!opts.json_path.empty()) write_file(opts.json_path, text + "\n");
  return result.converged ? kExitOk : kExitNotConverged;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  auto grids = verify::Grids::defaults();
  if (opts.q_max) grids.q_max = *opts.q_max;
  if (opts.s_max) {
    if (*opts.s_max == 0) throw InvalidArgument("--s-max must be >= 1");
    grids.s_max = *opts.s_max;
  }
  if (opts.p_max) {
    if (*opts.p_max == 0) throw InvalidArgument("--p-max must be >= 1");
    grids.p_max_float = *opts.p_max;
    grids.p_max_exact = std::min(grids.p_max_exact, *opts.p_max);
    grids.p_max_euler = std::min(grids.p_max_euler, *opts.p_max);
  }
  if (!opts.betas.empty()) {
    grids.betas.clear();
    for (const auto& text : opts.betas) {
      Rational beta = Rational::parse(text);
      if (exact::is_nonpositive_integer(beta)) {
        throw InvalidShift("beta must avoid {0, -1, -2, ...}, got " + beta.to_string());
      }
      grids.betas.push_back(std::move(beta));
    }
  }
  const auto reports = verify::run_suite(opts.suite, grids);
  json doc = json::array();
  bool all_passed = true;
  for (const auto& report : reports) {
    doc.push_back(verify::to_json(report));
    all_passed = all_passed && report.passed();
  }
  const std::string text = doc.dump(2);
  out << text << '\n';
  if (!opts.json_path.empty()) write_file(opts.json_path, text + "\n");
  return all_passed ? kExitOk : kExitNotConverged;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out) {
  bench::BenchConfig config;
  config.s_list = parse_list<unsigned>(opts.s_list, &parse_unsigned);
  config.tol_list = parse_list<double>(opts.tol_list, &parse_real);
  config.max_terms = opts.max_terms;
  const auto output = bench::run_bench(config);

  std::ostringstream csv;
  bench::write_csv(csv, output);
  if (opts.csv_path.empty()) {
    out << csv.str();
  } else {
    write_file(opts.csv_path, csv.str());
  }
  if (!opts.json_path.empty()) write_file(opts.json_path, bench::to_json(output).dump(2) + "\n");
  const bool all_converged = std::all_of(output.rows.begin(), output.rows.end(),
                                         [](const auto& row) { return row.converged(); });
  return all_converged ? kExitOk : kExitNotConverged;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s(text);
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s), 0.0};
  return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lerch function, polylogarithm and zeta evaluation by multiple harmonic power series"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate Li_s^alpha(w) on Re(w) < 1/2");
  eval_cmd->add_option("--s", eval.s, "Order s >= 1")->required();
  auto* w_opt = eval_cmd->add_option("--w", eval.w, "Argument w as RE[,IM]");
  auto* z_opt = eval_cmd->add_option("--z", eval.z, "Series variable z = w/(w-1) as RE[,IM]");
  w_opt->excludes(z_opt);
  auto* alpha_opt = eval_cmd->add_option("--alpha", eval.alpha, "Shift alpha as RE[,IM]");
  auto* alpha_rat_opt = eval_cmd->add_option("--alpha-rat", eval.alpha_rat, "Rational shift P/Q");
  alpha_opt->excludes(alpha_rat_opt);
  eval_cmd->add_option("--method", eval.method, "accelerated | direct | euler")
      ->check(CLI::IsMember({"accelerated", "direct", "euler"}));
  eval_cmd->add_option("--tol", eval.tol, "Target absolute error");
  eval_cmd->add_option("--max-terms", eval.max_terms, "Term cap");
  eval_cmd->add_option("--json", eval.json_path, "Also write the result to this file");

  ZetaOptions zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate zeta(s), s >= 2");
  zeta_cmd->add_option("--s", zeta.s, "Order s >= 2")->required();
  zeta_cmd->add_option("--tol", zeta.tol, "Target absolute error");
  zeta_cmd->add_option("--max-terms", zeta.max_terms, "Term cap");
  zeta_cmd->add_option("--json", zeta.json_path, "Also write the result to this file");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity and bound verification suites");
  verify_cmd->add_option("--suite", verify_opts.suite,
                         "lemma | recurrences | splitting | proposition | bounds | sondow | all");
  verify_cmd->add_option("--q-max", verify_opts.q_max, "Largest q for the exact lemma grid");
  verify_cmd->add_option("--s-max", verify_opts.s_max, "Largest order s for the exact grids");
  verify_cmd->add_option("--p-max", verify_opts.p_max, "Largest p for the bound grids");
  verify_cmd->add_option("--beta", verify_opts.betas, "Rational beta values (P/Q)")->delimiter(',');
  verify_cmd->add_option("--json", verify_opts.json_path, "Also write the reports to this file");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Terms-to-tolerance comparison at w = -1");
  bench_cmd->add_option("--s-list", bench_opts.s_list, "Comma-separated orders");
  bench_cmd->add_option("--tol-list", bench_opts.tol_list, "Comma-separated tolerances");
  bench_cmd->add_option("--max-terms", bench_opts.max_terms, "Term cap per method");
  bench_cmd->add_option("--csv", bench_opts.csv_path, "Write CSV here instead of stdout");
  bench_cmd->add_option("--json", bench_opts.json_path, "Also write rows as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*zeta_cmd) return cmd_zeta(zeta, out);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
    if (*bench_cmd) return cmd_bench(bench_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("lerch");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (auto& arg : storage) argv.push_back(arg.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lerch::cli
