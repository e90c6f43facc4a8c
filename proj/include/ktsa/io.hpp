#pragma once

#include <iosfwd>
#include <string>

#include "ktsa/time_series.hpp"

namespace ktsa::io {

/// Parses the UCR-style text format: one series per non-empty line,
/// `label, v1, v2, ..., vT` with comma, tab or whitespace separators.
/// Labels are kept verbatim; every series is scalar (d = 1).
/// Throws ParseError (with line number) on a non-numeric or non-finite
/// value field, EmptySetError on an input with no series.
LabeledDataset parse_ucr(std::istream& in);
LabeledDataset parse_ucr(const std::string& text);

/// Writes a scalar dataset back in the UCR text format, one comma-separated
/// line per series, with round-trip double formatting.
void write_ucr(std::ostream& out, const LabeledDataset& dataset);

/// Parses the multivariate text format: a `#dims D` header line, then
/// records separated by blank lines. Each record is a label line followed
/// by T lines of D numbers. Throws FormatError on a missing header,
/// ParseError (with record index) on a row of the wrong width.
LabeledDataset parse_multivariate(std::istream& in);
LabeledDataset parse_multivariate(const std::string& text);

/// Writes any dataset in the multivariate text format.
void write_multivariate(std::ostream& out, const LabeledDataset& dataset);

/// Serializes one series as CSV: one row per timestamp, d comma-separated
/// columns, '.' decimal point, round-trip double formatting.
void write_series_csv(std::ostream& out, const TimeSeries& series);

/// Reads a dataset from a file path, choosing the multivariate parser when
/// the file starts with `#dims`, the UCR parser otherwise.
LabeledDataset read_dataset_file(const std::string& path);

/// Shortest decimal representation of v that parses back to the same double.
std::string format_double(double v);

}  // namespace ktsa::io
