#include "ktsa/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace ktsa::io {

namespace {

bool is_separator(char c) { return c == ',' || c == '\t' || c == ' '; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_separator(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double parse_value(std::string_view field, const std::string& where) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError("invalid numeric value '" + std::string(field) + "' " +
                     where);
  }
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool blank(std::string_view line) {
  for (char c : line) {
    if (!is_separator(c)) return false;
  }
  return true;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

LabeledDataset parse_ucr(std::istream& in) {
  std::vector<LabeledSeries> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (blank(line)) continue;
    const auto fields = split_fields(line);
    if (fields.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a label followed by at least one value");
    }
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      values.push_back(
          parse_value(fields[k], "at line " + std::to_string(line_no)));
    }
    entries.push_back(
        {std::string(fields[0]), TimeSeries::scalar(std::move(values))});
  }
  if (entries.empty()) {
    throw EmptySetError("input contains no series");
  }
  return LabeledDataset(std::move(entries));
}

LabeledDataset parse_ucr(const std::string& text) {
  std::istringstream in(text);
  return parse_ucr(in);
}

void write_ucr(std::ostream& out, const LabeledDataset& dataset) {
  if (dataset.dims() != 1) {
    throw FormatError("UCR format only holds scalar series; "
                      "use the multivariate format");
  }
  for (const auto& e : dataset.entries()) {
    out << e.label;
    for (std::size_t t = 0; t < e.series.length(); ++t) {
      out << ',' << format_double(e.series.at(t));
    }
    out << '\n';
  }
}

LabeledDataset parse_multivariate(std::istream& in) {
  std::string raw;
  if (!std::getline(in, raw)) {
    throw FormatError("multivariate input is empty; expected '#dims D'");
  }
  const std::string header = strip_cr(raw);
  std::size_t dims = 0;
  {
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "#dims" || !(hs >> dims) || dims < 1) {
      throw FormatError("missing or malformed '#dims D' header");
    }
  }

  std::vector<LabeledSeries> entries;
  std::string label;
  std::vector<double> rows;
  std::size_t record_no = 0;
  bool in_record = false;

  auto flush = [&]() {
    if (!in_record) return;
    if (rows.empty()) {
      throw ParseError("record " + std::to_string(record_no) +
                       " ('" + label + "') has no sample rows");
    }
    entries.push_back(
        {label, TimeSeries(rows.size() / dims, dims, std::move(rows))});
    rows = {};
    in_record = false;
  };

  while (std::getline(in, raw)) {
    const std::string line = strip_cr(raw);
    if (blank(line)) {
      flush();
      continue;
    }
    if (!in_record) {
      ++record_no;
      label = line;
      in_record = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != dims) {
      throw ParseError("record " + std::to_string(record_no) + ": row has " +
                       std::to_string(fields.size()) + " values, expected " +
                       std::to_string(dims));
    }
    for (const auto& f : fields) {
      rows.push_back(
          parse_value(f, "in record " + std::to_string(record_no)));
    }
  }
  flush();
  if (entries.empty()) {
    throw EmptySetError("input contains no series");
  }
  return LabeledDataset(std::move(entries));
}

LabeledDataset parse_multivariate(const std::string& text) {
  std::istringstream in(text);
  return parse_multivariate(in);
}

void write_multivariate(std::ostream& out, const LabeledDataset& dataset) {
  out << "#dims " << dataset.dims() << '\n';
  for (const auto& e : dataset.entries()) {
    out << e.label << '\n';
    for (std::size_t t = 0; t < e.series.length(); ++t) {
      for (std::size_t c = 0; c < e.series.dims(); ++c) {
        if (c) out << ' ';
        out << format_double(e.series.at(t, c));
      }
      out << '\n';
    }
    out << '\n';
  }
}

void write_series_csv(std::ostream& out, const TimeSeries& series) {
  for (std::size_t t = 0; t < series.length(); ++t) {
    for (std::size_t c = 0; c < series.dims(); ++c) {
      if (c) out << ',';
      out << format_double(series.at(t, c));
    }
    out << '\n';
  }
}

LabeledDataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParameterError("cannot open dataset file '" + path + "'");
  }
  std::string first;
  std::getline(in, first);
  in.seekg(0);
  if (strip_cr(first).rfind("#dims", 0) == 0) {
    return parse_multivariate(in);
  }
  return parse_ucr(in);
}

}  // namespace ktsa::io
