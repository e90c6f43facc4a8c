#pragma once

#include <cstddef>

#include "ktsa/time_series.hpp"

namespace ktsa::fixtures {

/// Two identical unit-peak triangles of the given length, centered at the
/// 1-based timestamps center1 and center2 (labels "1" and "2"). half_width
/// of 0 selects the default length/5. Throws ParameterError when a center
/// lies outside [1, length] or the centers coincide.
LabeledDataset triangle_pair(std::size_t length, std::size_t center1,
                             std::size_t center2, std::size_t half_width = 0);

/// A non-negative positive halfwave (label "halfwave") together with a full
/// sine wave spanning 2.5 periods (label "sine"), both of the given length.
/// The sine contains three positive halfwaves the halfwave can align with.
LabeledDataset sine_halfwave(std::size_t length);

/// A labeled approximation of a pulse-width-modulation dataset: three duty-
/// cycle classes ("1" = 25%, "2" = 50%, "3" = 75%), per_class series each,
/// phase-shifted deterministically.
LabeledDataset pwm_like(std::size_t length, std::size_t per_class = 10);

}  // namespace ktsa::fixtures
