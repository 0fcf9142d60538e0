#include "wck/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wck {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

double parse_field_double(const std::string& field) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0') {
    throw std::invalid_argument("malformed numeric field: " + field);
  }
  return value;
}

}  // namespace

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.16e", x);
  return buffer;
}

std::string csv_quote(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

std::string emit_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = kConvergenceCsvHeader;
  out += "\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ",";
    out += format_double(row.lhs.real());
    out += ",";
    out += format_double(row.lhs.imag());
    out += ",";
    out += format_double(row.rhs.real());
    out += ",";
    out += format_double(row.rhs.imag());
    out += ",";
    out += format_double(row.error);
    out += "\n";
  }
  return out;
}

std::vector<ConvergenceRow> parse_csv(const std::string& text) {
  std::vector<ConvergenceRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kConvergenceCsvHeader) {
        throw std::invalid_argument("malformed convergence CSV header: " + line);
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 6) {
      throw std::invalid_argument("expected 6 CSV fields, got " +
                                  std::to_string(fields.size()));
    }
    ConvergenceRow row;
    row.n = static_cast<long>(std::strtol(fields[0].c_str(), nullptr, 10));
    row.lhs = {parse_field_double(fields[1]), parse_field_double(fields[2])};
    row.rhs = {parse_field_double(fields[3]), parse_field_double(fields[4])};
    row.error = parse_field_double(fields[5]);
    rows.push_back(row);
  }
  if (!header_seen) throw std::invalid_argument("convergence CSV has no header line");
  return rows;
}

ScaledFields scaled_fields(const ScaledReal& value) {
  if (is_zero(value)) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {sc_log10_abs(value), value.mantissa > 0 ? 1.0 : -1.0};
}

ScaledFields scaled_fields(const ScaledComplex& value) {
  if (is_zero(value)) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {sc_log10_abs(value), std::arg(value.mantissa)};
}

std::string format_table(const std::vector<ConvergenceRow>& rows) {
  std::string out =
      "    N                     lhs                     rhs        error\n";
  for (const auto& row : rows) {
    char lhs_buf[64];
    if (row.lhs.imag() == 0.0 && row.rhs.imag() == 0.0) {
      std::snprintf(lhs_buf, sizeof lhs_buf, "%23.9e %23.9e", row.lhs.real(),
                    row.rhs.real());
    } else {
      std::snprintf(lhs_buf, sizeof lhs_buf, "%10.3e%+.3ei %10.3e%+.3ei",
                    row.lhs.real(), row.lhs.imag(), row.rhs.real(), row.rhs.imag());
    }
    char line[160];
    std::snprintf(line, sizeof line, "%5ld %s %12.4e%s\n", row.n, lhs_buf, row.error,
                  row.error_is_absolute ? " (abs)" : "");
    out += line;
  }
  return out;
}

}  // namespace wck
