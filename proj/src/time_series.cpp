#include "ktsa/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ktsa {

TimeSeries::TimeSeries(std::size_t length, std::size_t dims,
                       std::vector<double> data)
    : length_(length), dims_(dims), data_(std::move(data)) {
  if (length_ < 1 || dims_ < 1) {
    throw ParameterError("time series must have length >= 1 and dims >= 1");
  }
  if (data_.size() != length_ * dims_) {
    throw ParameterError("time series data size does not match shape");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw ParameterError("time series samples must be finite");
    }
  }
}

TimeSeries TimeSeries::scalar(std::vector<double> values) {
  const std::size_t n = values.size();
  return TimeSeries(n, 1, std::move(values));
}

TimeSeries TimeSeries::reversed() const {
  std::vector<double> out(data_.size());
  for (std::size_t t = 0; t < length_; ++t) {
    std::copy_n(data_.data() + (length_ - 1 - t) * dims_, dims_,
                out.data() + t * dims_);
  }
  return TimeSeries(length_, dims_, std::move(out));
}

TimeSeries TimeSeries::z_normalized() const {
  std::vector<double> out(data_.size());
  for (std::size_t c = 0; c < dims_; ++c) {
    double mean = 0.0;
    for (std::size_t t = 0; t < length_; ++t) mean += at(t, c);
    mean /= static_cast<double>(length_);
    double var = 0.0;
    for (std::size_t t = 0; t < length_; ++t) {
      const double d = at(t, c) - mean;
      var += d * d;
    }
    var /= static_cast<double>(length_);
    const double sd = std::sqrt(var);
    for (std::size_t t = 0; t < length_; ++t) {
      const double centered = at(t, c) - mean;
      out[t * dims_ + c] = sd > 0.0 ? centered / sd : centered;
    }
  }
  return TimeSeries(length_, dims_, std::move(out));
}

LabeledDataset::LabeledDataset(std::vector<LabeledSeries> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw EmptySetError("dataset must contain at least one series");
  }
  const std::size_t d = entries_.front().series.dims();
  for (const auto& e : entries_) {
    if (e.series.dims() != d) {
      throw DimensionError("all series in a dataset must share dims");
    }
  }
}

std::vector<std::string> LabeledDataset::labels() const {
  std::set<std::string> uniq;
  for (const auto& e : entries_) uniq.insert(e.label);
  return {uniq.begin(), uniq.end()};
}

std::vector<TimeSeries> LabeledDataset::series_with_label(
    const std::string& label) const {
  std::vector<TimeSeries> out;
  for (const auto& e : entries_) {
    if (e.label == label) out.push_back(e.series);
  }
  return out;
}

LabeledDataset LabeledDataset::z_normalized() const {
  std::vector<LabeledSeries> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back({e.label, e.series.z_normalized()});
  }
  return LabeledDataset(std::move(out));
}

void validate(const KernelParams& params) {
  if (!(params.nu > 0.0) || !std::isfinite(params.nu)) {
    throw ParameterError("stiffness nu must be a positive finite real");
  }
}

}  // namespace ktsa
