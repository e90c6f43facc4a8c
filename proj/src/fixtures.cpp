#include "ktsa/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace ktsa::fixtures {

namespace {

std::vector<double> triangle(std::size_t length, std::size_t center,
                             std::size_t half_width) {
  std::vector<double> v(length, 0.0);
  const double c = static_cast<double>(center);
  const double w = static_cast<double>(half_width);
  for (std::size_t t = 1; t <= length; ++t) {
    const double d = std::abs(static_cast<double>(t) - c);
    if (d < w) v[t - 1] = 1.0 - d / w;
  }
  return v;
}

}  // namespace

LabeledDataset triangle_pair(std::size_t length, std::size_t center1,
                             std::size_t center2, std::size_t half_width) {
  if (length < 3) {
    throw ParameterError("triangle_pair needs length >= 3");
  }
  if (center1 < 1 || center1 > length || center2 < 1 || center2 > length) {
    throw ParameterError("triangle peak center outside [1, T]");
  }
  if (center1 == center2) {
    throw ParameterError("triangle peak centers must differ");
  }
  if (half_width == 0) half_width = std::max<std::size_t>(2, length / 5);
  std::vector<LabeledSeries> entries;
  entries.push_back(
      {"1", TimeSeries::scalar(triangle(length, center1, half_width))});
  entries.push_back(
      {"2", TimeSeries::scalar(triangle(length, center2, half_width))});
  return LabeledDataset(std::move(entries));
}

LabeledDataset sine_halfwave(std::size_t length) {
  if (length < 8) {
    throw ParameterError("sine_halfwave needs length >= 8");
  }
  std::vector<double> half(length), sine(length);
  for (std::size_t t = 0; t < length; ++t) {
    const double u = static_cast<double>(t) / static_cast<double>(length - 1);
    half[t] = std::sin(std::numbers::pi * u);
    sine[t] = std::sin(5.0 * std::numbers::pi * u);
  }
  std::vector<LabeledSeries> entries;
  entries.push_back({"halfwave", TimeSeries::scalar(std::move(half))});
  entries.push_back({"sine", TimeSeries::scalar(std::move(sine))});
  return LabeledDataset(std::move(entries));
}

LabeledDataset pwm_like(std::size_t length, std::size_t per_class) {
  if (length < 16 || per_class < 1) {
    throw ParameterError("pwm_like needs length >= 16 and per_class >= 1");
  }
  const double duties[3] = {0.25, 0.5, 0.75};
  const std::size_t period = length / 4;
  std::vector<LabeledSeries> entries;
  for (std::size_t cls = 0; cls < 3; ++cls) {
    for (std::size_t s = 0; s < per_class; ++s) {
      const std::size_t phase = s * period / per_class;
      std::vector<double> v(length);
      for (std::size_t t = 0; t < length; ++t) {
        const std::size_t pos = (t + phase) % period;
        v[t] = pos < static_cast<std::size_t>(duties[cls] * period) ? 1.0
                                                                    : 0.0;
      }
      entries.push_back(
          {std::to_string(cls + 1), TimeSeries::scalar(std::move(v))});
    }
  }
  return LabeledDataset(std::move(entries));
}

}  // namespace ktsa::fixtures
