#pragma once

#include <iosfwd>
#include <string>

#include "macir/types.hpp"

namespace macir {

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

/// Reads a single-column numeric CSV: one observation per line, an optional
/// "z" header, blank lines ignored. Rejects NaN/Inf tokens, anything
/// unparseable and empty input.
/// Throws std::runtime_error with a line-numbered message.
TimeSeries read_series_csv(std::istream& in);
TimeSeries read_series_csv(const std::string& path);

/// Writes the series with a "z" header; byte-identical for identical input.
void write_series_csv(std::ostream& out, const TimeSeries& z);
void write_series_csv(const std::string& path, const TimeSeries& z);

}  // namespace macir
