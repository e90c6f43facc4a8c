#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktsa/error.hpp"

namespace ktsa {

/// A length-T sequence of d-dimensional real samples, immutable after
/// construction. Storage is row-major: sample t occupies
/// [t*dims, (t+1)*dims). All entries are finite; T >= 1 and d >= 1.
class TimeSeries {
public:
  /// Builds a series from row-major data. Throws ParameterError on empty
  /// shape, size mismatch, or non-finite entries.
  TimeSeries(std::size_t length, std::size_t dims, std::vector<double> data);

  /// Convenience constructor for scalar (d = 1) series.
  static TimeSeries scalar(std::vector<double> values);

  std::size_t length() const { return length_; }
  std::size_t dims() const { return dims_; }

  /// Value at timestamp t (0-based), channel c.
  double at(std::size_t t, std::size_t c = 0) const {
    return data_[t * dims_ + c];
  }

  /// The d values of sample t.
  std::span<const double> sample(std::size_t t) const {
    return {data_.data() + t * dims_, dims_};
  }

  const std::vector<double>& data() const { return data_; }

  /// The same samples in reverse temporal order.
  TimeSeries reversed() const;

  /// Per-series z-normalization: zero mean, unit variance per channel.
  /// Channels with zero variance are only centered.
  TimeSeries z_normalized() const;

  bool operator==(const TimeSeries& other) const = default;

private:
  std::size_t length_;
  std::size_t dims_;
  std::vector<double> data_;
};

struct LabeledSeries {
  std::string label;
  TimeSeries series;
};

/// A non-empty, ordered collection of labeled series sharing one
/// dimensionality (lengths may differ).
class LabeledDataset {
public:
  explicit LabeledDataset(std::vector<LabeledSeries> entries);

  std::size_t size() const { return entries_.size(); }
  std::size_t dims() const { return entries_.front().series.dims(); }

  const std::string& label(std::size_t i) const { return entries_[i].label; }
  const TimeSeries& series(std::size_t i) const { return entries_[i].series; }
  const std::vector<LabeledSeries>& entries() const { return entries_; }

  /// The distinct labels in lexicographic order.
  std::vector<std::string> labels() const;

  /// All series carrying the given label, in dataset order.
  std::vector<TimeSeries> series_with_label(const std::string& label) const;

  /// A copy with every series z-normalized.
  LabeledDataset z_normalized() const;

private:
  std::vector<LabeledSeries> entries_;
};

/// Parameters of the regularized alignment kernel. The stiffness nu weights
/// the local sample distances; an absent corridor_radius means the
/// recursion is unconstrained (the gate h is identically 1).
struct KernelParams {
  double nu = 1.0;
  std::optional<std::size_t> corridor_radius;
};

/// Throws ParameterError unless nu > 0.
void validate(const KernelParams& params);

}  // namespace ktsa
