#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcont/acceptance.hpp"
#include "fcont/analysis.hpp"
#include "fcont/finite_diff.hpp"
#include "fcont/pipeline.hpp"
#include "fcont/table.hpp"

namespace fcont::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kAcceptanceFailure = 2, kIoError = 3 };

struct RunConfig {
  std::optional<std::string> function;
  std::optional<std::string> data_path;
  int n = 256;
  int r = 4;
  int p = 4;
  int grid = kDefaultDenseGrid;
  std::string format = "csv";
  std::optional<std::string> out_path;
  // convergence range, as exponents of two
  int from = 6;
  int to = 12;
};

/// Relative deviation allowed between a file's x column and the grid j/n.
inline constexpr double kGridTolerance = 1e-10;

namespace detail {

inline std::string num(double v) { return fcont::detail::printf_double("%.17g", v); }

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double v = std::stod(t, &used);
    if (used != t.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

/// Tabular output: rows of numbers rendered as csv or a json array of objects.
inline std::string render_rows(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                               const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << num(row[c]);
      out << '\n';
    }
    return out.str();
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  throw Error(ErrorCode::unknown_format, "data output supports csv or json, not '" + format + "'");
}

}  // namespace detail

/// Reads `x,f` rows (header optional) or a single `f` column. With an x column
/// the nodes must be j/n within kGridTolerance of the spacing.
inline std::vector<double> parse_samples(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::vector<std::string> fields = detail::split_fields(t);
    std::vector<double> values;
    bool numeric = true;
    for (const std::string& f : fields) {
      const auto v = detail::parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (!numeric) {
      if (rows.empty() && !seen_header) {
        seen_header = true;
        continue;
      }
      throw Error(ErrorCode::invalid_parameter, "line " + std::to_string(line_no) + " is not numeric");
    }
    if (values.size() != 1 && values.size() != 2)
      throw Error(ErrorCode::invalid_parameter,
                  "line " + std::to_string(line_no) + " must hold 1 or 2 columns, got " + std::to_string(values.size()));
    if (!rows.empty() && values.size() != rows.front().size())
      throw Error(ErrorCode::invalid_parameter, "line " + std::to_string(line_no) + " changes the column count");
    rows.push_back(std::move(values));
  }
  if (rows.size() < 3)
    throw Error(ErrorCode::insufficient_samples, "data needs at least 3 samples, got " + std::to_string(rows.size()));

  const int n = static_cast<int>(rows.size()) - 1;
  std::vector<double> samples;
  samples.reserve(rows.size());
  for (int j = 0; j <= n; ++j) {
    const auto& row = rows[static_cast<std::size_t>(j)];
    if (row.size() == 2) {
      const double expected = static_cast<double>(j) / n;
      const double spacing = 1.0 / n;
      if (!(std::abs(row[0] - expected) <= kGridTolerance * spacing))
        throw Error(ErrorCode::invalid_parameter, "sample index " + std::to_string(j) + " has x = " +
                                                       detail::num(row[0]) + ", expected " + detail::num(expected) +
                                                       " on an equispaced grid over [0, 1]");
    }
    samples.push_back(row.back());
  }
  return samples;
}

inline std::vector<double> load_samples(const RunConfig& config) {
  if (config.data_path) {
    std::ifstream in(*config.data_path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open data file '" + *config.data_path + "'");
    return parse_samples(in);
  }
  if (!config.function) throw Error(ErrorCode::invalid_parameter, "one of --fn or --data is required");
  return sample(lookup_function(*config.function), config.n);
}

/// Continued profile on the full grid x_j = j/n, j = -n..n.
inline std::string cmd_continue(const RunConfig& config) {
  const std::vector<double> samples = load_samples(config);
  const int n = static_cast<int>(samples.size()) - 1;
  const std::vector<double> extended = discrete_continuation(samples, config.r, config.p);
  std::vector<std::vector<double>> rows;
  for (int j = -n; j <= n; ++j) {
    const double value = j < n ? extended[static_cast<std::size_t>(j + n)] : samples.back();
    rows.push_back({static_cast<double>(j) / n, value});
  }
  return detail::render_rows({"x", "value"}, rows, config.format);
}

/// Approximant on the dense grid z_j = j/N; exact and error columns need a built-in function.
inline std::string cmd_approximate(const RunConfig& config) {
  const std::vector<double> samples = load_samples(config);
  const FcApproximant approx = fc_approximate(samples, config.r, config.p);
  const int N = config.grid;
  const std::vector<double> values = evaluate_dense(approx, N);
  std::vector<std::vector<double>> rows;
  if (config.data_path) {
    for (int j = 0; j <= N; ++j) rows.push_back({static_cast<double>(j) / N, values[static_cast<std::size_t>(j)]});
    return detail::render_rows({"z", "approx"}, rows, config.format);
  }
  const TestFunction f = lookup_function(*config.function);
  for (int j = 0; j <= N; ++j) {
    const double z = static_cast<double>(j) / N;
    const double exact = f(z);
    const double v = values[static_cast<std::size_t>(j)];
    rows.push_back({z, v, exact, std::abs(v - exact)});
  }
  return detail::render_rows({"z", "approx", "exact", "abs_error"}, rows, config.format);
}

inline std::string cmd_coeffs(const RunConfig& config) {
  const FcApproximant approx = fc_approximate(load_samples(config), config.r, config.p);
  std::vector<std::vector<double>> rows;
  for (int k = -approx.n; k < approx.n; ++k) {
    const Complex c = approx.coefficients[k];
    rows.push_back({static_cast<double>(k), c.real(), c.imag()});
  }
  return detail::render_rows({"k", "re", "im"}, rows, config.format);
}

inline std::string cmd_convergence(const RunConfig& config) {
  if (config.data_path || !config.function)
    throw Error(ErrorCode::invalid_parameter, "convergence studies need a built-in function (--fn)");
  const TestFunction f = lookup_function(*config.function);
  const std::vector<int> ns = powers_of_two(config.from, config.to);
  const std::vector<ConvergenceRecord> recs = convergence_study(f, config.r, config.p, ns, {config.grid, 0.0});
  return emit_table(recs, parse_table_format(config.format));
}

/// Exact rational weights, comma separated.
inline std::string cmd_stencil(int m, int p) {
  const Stencil st = make_stencil({m, p, StencilSide::forward});
  std::ostringstream out;
  for (std::size_t k = 0; k < st.exact_weights.size(); ++k) out << (k ? ", " : "") << st.exact_weights[k].str();
  out << '\n';
  return out.str();
}

inline int cmd_selftest(std::ostream& out, double weight_perturbation = 0.0) {
  return acceptance::run_all(out, {weight_perturbation}) ? kSuccess : kAcceptanceFailure;
}

inline int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::io_error ? kIoError : kValidationError;
}

}  // namespace fcont::cli
