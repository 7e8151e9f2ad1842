#pragma once

// Terms-to-tolerance comparison of the accelerated series, its
// Euler-transform form, and the plain alternating series at w = -1
// (z = 1/2, alpha = 0), where Li_s(-1) = -(1 - 2^(1-s)) zeta(s).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lerch/series.hpp"

namespace lerch::bench {

enum class Method { accelerated, euler_transform, direct_alternating };

std::string_view method_name(Method method);
/// Throws InvalidArgument for unknown names.
Method parse_method(std::string_view name);

struct ConvergenceRow {
  Method method = Method::accelerated;
  unsigned s = 0;
  /// z for the power-series methods, w for the alternating baseline.
  series::Complex z_or_w;
  double tolerance = 0.0;
  std::uint64_t terms_needed = 0;
  double achieved_error = 0.0;

  bool converged() const { return achieved_error <= tolerance; }
  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct BenchConfig {
  std::vector<unsigned> s_list{2, 3, 4, 5, 6};
  std::vector<double> tol_list{1e-6, 1e-8, 1e-10, 1e-12};
  /// Cap on terms for every method; the alternating baseline is the one that
  /// needs a large cap (about 7e4 terms at s = 2, tol = 1e-10).
  std::uint64_t max_terms = 10'000'000;
};

struct BenchOutput {
  std::vector<ConvergenceRow> rows;
  std::vector<std::string> notes;
};

/// One row per (method, s, tol), sorted by method, then s, then tol.
/// s = 1 produces a note instead of rows.
BenchOutput run_bench(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader = "method,s,z_re,z_im,tol,terms,achieved_error";

/// Header, then one line per row; notes are emitted as leading "# " lines.
void write_csv(std::ostream& os, const BenchOutput& output);
BenchOutput read_csv(std::istream& is);

nlohmann::json to_json(const BenchOutput& output);
BenchOutput bench_from_json(const nlohmann::json& doc);

}  // namespace lerch::bench
