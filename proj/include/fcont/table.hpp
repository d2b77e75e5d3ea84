#pragma once

#include <cstdio>
#include <span>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fcont/analysis.hpp"
#include "fcont/error.hpp"

namespace fcont {

enum class TableFormat { csv, json, markdown };

inline TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw Error(ErrorCode::unknown_format, "unknown table format '" + name + "'");
}

namespace detail {
inline std::string printf_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}
}  // namespace detail

/// Renders convergence records with columns n, e_n, ratio, order.
inline std::string emit_table(std::span<const ConvergenceRecord> records, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::csv:
      out << "n,e_n,ratio,order\n";
      for (const ConvergenceRecord& rec : records) {
        out << rec.n << ',' << detail::printf_double("%.17g", rec.e_n) << ',';
        if (rec.ratio) out << detail::printf_double("%.17g", *rec.ratio);
        out << ',';
        if (rec.order) out << detail::printf_double("%.17g", *rec.order);
        out << '\n';
      }
      break;
    case TableFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const ConvergenceRecord& rec : records) {
        nlohmann::json row;
        row["n"] = rec.n;
        row["e_n"] = rec.e_n;
        row["ratio"] = rec.ratio ? nlohmann::json(*rec.ratio) : nlohmann::json(nullptr);
        row["order"] = rec.order ? nlohmann::json(*rec.order) : nlohmann::json(nullptr);
        rows.push_back(std::move(row));
      }
      out << rows.dump(2) << '\n';
      break;
    }
    case TableFormat::markdown:
      out << "| n | e_n | ratio | order |\n|---:|---:|---:|---:|\n";
      for (const ConvergenceRecord& rec : records) {
        out << "| " << rec.n << " | " << detail::printf_double("%.2e", rec.e_n) << " | "
            << (rec.ratio ? detail::printf_double("%.2f", *rec.ratio) : std::string("---")) << " | "
            << (rec.order ? detail::printf_double("%.2f", *rec.order) : std::string("---")) << " |\n";
      }
      break;
  }
  return out.str();
}

}  // namespace fcont
