#pragma once

#include <string>
#include <vector>

#include "wck/asymptotics.hpp"
#include "wck/scaled.hpp"

namespace wck {

// 17 significant digits in lowercase scientific notation ("%.16e"): enough
// to round-trip any double bit-exactly through text.
std::string format_double(double x);

// RFC-4180 field quoting: wrap in double quotes when the field contains a
// comma, quote, CR, or LF, doubling any embedded quotes.
std::string csv_quote(const std::string& field);

inline constexpr const char* kConvergenceCsvHeader =
    "N,lhs_re,lhs_im,rhs_re,rhs_im,rel_error";

// Header plus one line per row, every real rendered via format_double.
std::string emit_csv(const std::vector<ConvergenceRow>& rows);

// Inverse of emit_csv: skips '#'-prefixed annotation lines, demands the
// pinned header, and parses values bit-exactly. The absolute-error marker is
// not carried by the CSV schema, so parsed rows always report relative.
std::vector<ConvergenceRow> parse_csv(const std::string& text);

// How a scaled value crosses a text boundary: magnitude as log10 and either
// a sign (+-1, real case) or a phase in radians (complex case). A zero value
// maps to {-infinity, 0}.
struct ScaledFields {
  double log10_abs = 0;
  double sign_or_phase = 0;
};

ScaledFields scaled_fields(const ScaledReal& value);
ScaledFields scaled_fields(const ScaledComplex& value);

// Fixed-width human-readable table of a convergence study; errors computed
// against a vanishing rhs are marked "(abs)".
std::string format_table(const std::vector<ConvergenceRow>& rows);

}  // namespace wck
