#include "lerch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "lerch/detail/double_double.hpp"
#include "lerch/errors.hpp"

namespace lerch::bench {

namespace {

using series::Complex;
using series::ShiftParam;

constexpr Complex kHalf{0.5, 0.0};
constexpr Complex kMinusOne{-1.0, 0.0};

// Shortest %g rendering that parses back to the same double.
std::string format_double(double value) {
  char buf[40];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

double parse_double(const std::string& field) {
  std::size_t used = 0;
  const double value = std::stod(field, &used);
  if (used != field.size()) throw InvalidArgument("malformed number '" + field + "' in CSV");
  return value;
}

ConvergenceRow accelerated_row(const ShiftParam& shift, unsigned s, double tol, double reference,
                               std::uint64_t max_terms) {
  const auto result = series::lerch_accelerated(kMinusOne, shift, s, tol, max_terms);
  return {Method::accelerated, s, kHalf, tol, result.terms_used,
          std::abs(result.value.real() - reference)};
}

ConvergenceRow euler_row(const ShiftParam& shift, unsigned s, double tol, double reference,
                         std::uint64_t max_terms) {
  const auto cap = static_cast<unsigned>(
      std::min<std::uint64_t>(max_terms, series::kEulerMaxTerms));
  const auto partial = series::euler_transform_partial_sums(kHalf, shift, s, cap);
  ConvergenceRow row{Method::euler_transform, s, kHalf, tol, cap, 0.0};
  for (std::size_t i = 0; i < partial.size(); ++i) {
    row.terms_needed = i + 1;
    row.achieved_error = std::abs(partial[i].real() - reference);
    if (row.achieved_error <= tol) break;
  }
  return row;
}

ConvergenceRow alternating_row(const ShiftParam& shift, unsigned s, double tol, double reference,
                               std::uint64_t max_terms) {
  ConvergenceRow row{Method::direct_alternating, s, kMinusOne, tol, 0, 0.0};
  detail::DoubleDouble sum;
  for (std::uint64_t n = 1; n <= max_terms; ++n) {
    sum += series::alternating_term(shift, s, n).real();
    row.terms_needed = n;
    row.achieved_error = std::abs((sum - detail::DoubleDouble(reference)).to_double());
    if (row.achieved_error <= tol) break;
  }
  return row;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::accelerated:
      return "accelerated";
    case Method::euler_transform:
      return "euler_transform";
    case Method::direct_alternating:
      return "direct_alternating";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::accelerated, Method::euler_transform, Method::direct_alternating}) {
    if (method_name(m) == name) return m;
  }
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

BenchOutput run_bench(const BenchConfig& config) {
  if (config.max_terms == 0) throw InvalidArgument("max_terms must be >= 1");
  for (double tol : config.tol_list) {
    if (!(tol >= series::kMinTolerance)) {
      throw PrecisionError("bench tolerance " + format_double(tol) + " is below 1e-13");
    }
  }
  const ShiftParam zero_shift(Complex(0.0, 0.0));
  BenchOutput output;
  for (unsigned s : config.s_list) {
    if (s == 0) throw InvalidArgument("order s must be >= 1");
    if (s == 1) {
      output.notes.push_back("s=1 omitted: zeta has its pole at s=1");
      continue;
    }
    // High-accuracy value of Li_s(-1) shared by all rows for this s.
    const auto reference =
        series::lerch_accelerated(kMinusOne, zero_shift, s, series::kMinTolerance, 10000);
    const double ref = reference.value.real();
    for (double tol : config.tol_list) {
      output.rows.push_back(accelerated_row(zero_shift, s, tol, ref, config.max_terms));
      output.rows.push_back(euler_row(zero_shift, s, tol, ref, config.max_terms));
      output.rows.push_back(alternating_row(zero_shift, s, tol, ref, config.max_terms));
    }
  }
  std::sort(output.rows.begin(), output.rows.end(), [](const auto& a, const auto& b) {
    return std::tuple(static_cast<int>(a.method), a.s, a.tolerance) <
           std::tuple(static_cast<int>(b.method), b.s, b.tolerance);
  });
  return output;
}

void write_csv(std::ostream& os, const BenchOutput& output) {
  for (const auto& note : output.notes) os << "# " << note << '\n';
  os << kCsvHeader << '\n';
  for (const auto& row : output.rows) {
    os << method_name(row.method) << ',' << row.s << ',' << format_double(row.z_or_w.real()) << ','
       << format_double(row.z_or_w.imag()) << ',' << format_double(row.tolerance) << ','
       << row.terms_needed << ',' << format_double(row.achieved_error) << '\n';
  }
}

BenchOutput read_csv(std::istream& is) {
  BenchOutput output;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      output.notes.push_back(line.substr(2));
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw InvalidArgument("unexpected CSV header '" + line + "'");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw InvalidArgument("CSV row has " + std::to_string(fields.size()) + " fields");
    ConvergenceRow row;
    row.method = parse_method(fields[0]);
    row.s = static_cast<unsigned>(std::stoul(fields[1]));
    row.z_or_w = Complex(parse_double(fields[2]), parse_double(fields[3]));
    row.tolerance = parse_double(fields[4]);
    row.terms_needed = std::stoull(fields[5]);
    row.achieved_error = parse_double(fields[6]);
    output.rows.push_back(row);
  }
  if (!header_seen) throw InvalidArgument("CSV is missing its header");
  return output;
}

nlohmann::json to_json(const BenchOutput& output) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : output.rows) {
    rows.push_back({{"method", method_name(row.method)},
                    {"s", row.s},
                    {"z", {{"re", row.z_or_w.real()}, {"im", row.z_or_w.imag()}}},
                    {"tol", row.tolerance},
                    {"terms", row.terms_needed},
                    {"achieved_error", row.achieved_error},
                    {"converged", row.converged()}});
  }
  return {{"rows", rows}, {"notes", output.notes}};
}

BenchOutput bench_from_json(const nlohmann::json& doc) {
  BenchOutput output;
  for (const auto& item : doc.at("rows")) {
    ConvergenceRow row;
    row.method = parse_method(item.at("method").get<std::string>());
    row.s = item.at("s").get<unsigned>();
    row.z_or_w = Complex(item.at("z").at("re").get<double>(), item.at("z").at("im").get<double>());
    row.tolerance = item.at("tol").get<double>();
    row.terms_needed = item.at("terms").get<std::uint64_t>();
    row.achieved_error = item.at("achieved_error").get<double>();
    output.rows.push_back(row);
  }
  output.notes = doc.at("notes").get<std::vector<std::string>>();
  return output;
}

}  // namespace lerch::bench
