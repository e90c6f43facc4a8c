#include "ktsa/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace ktsa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_non_empty(const std::vector<TimeSeries>& series) {
  if (series.empty()) {
    throw EmptySetError("centroid estimation needs a non-empty set");
  }
}

void require_same_dims(const TimeSeries& ref,
                       const std::vector<TimeSeries>& series) {
  for (const auto& s : series) {
    if (s.dims() != ref.dims()) {
      throw DimensionError("series dimensionality mismatch in set");
    }
  }
}

}  // namespace

double inertia(const TimeSeries& c, const std::vector<TimeSeries>& series,
               InertiaMeasure measure, const KernelParams& params) {
  require_non_empty(series);
  double total = 0.0;
  for (const auto& s : series) {
    total += measure == InertiaMeasure::dtw_distance ? dtw(c, s).cost
                                                     : kdtw(c, s, params);
  }
  return total;
}

double log_similarity_inertia(const TimeSeries& c,
                              const std::vector<TimeSeries>& series,
                              const KernelParams& params) {
  require_non_empty(series);
  std::vector<double> logs;
  logs.reserve(series.size());
  double m = kNegInf;
  for (const auto& s : series) {
    logs.push_back(log_kdtw(c, s, params));
    m = std::max(m, logs.back());
  }
  double acc = 0.0;
  for (double lv : logs) acc += std::exp(lv - m);
  return m + std::log(acc);
}

TimeSeries pairwise_dtw_centroid(const TimeSeries& x, const TimeSeries& y) {
  const auto result = dtw(x, y);
  const std::size_t d = x.dims();
  std::vector<double> out;
  out.reserve(result.path.steps.size() * d);
  for (const auto& [i, j] : result.path.steps) {
    const auto xs = x.sample(i - 1);
    const auto ys = y.sample(j - 1);
    for (std::size_t c = 0; c < d; ++c) {
      out.push_back(0.5 * (xs[c] + ys[c]));
    }
  }
  return TimeSeries(result.path.steps.size(), d, std::move(out));
}

TimeSeries dba_step(const TimeSeries& reference,
                    const std::vector<TimeSeries>& series) {
  require_non_empty(series);
  require_same_dims(reference, series);
  const std::size_t len = reference.length(), d = reference.dims();
  std::vector<double> acc(len * d, 0.0);
  std::vector<std::size_t> count(len, 0);
  for (const auto& s : series) {
    const auto path = dtw(reference, s).path;
    for (const auto& [i, j] : path.steps) {
      const auto ys = s.sample(j - 1);
      for (std::size_t c = 0; c < d; ++c) {
        acc[(i - 1) * d + c] += ys[c];
      }
      ++count[i - 1];
    }
  }
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t c = 0; c < d; ++c) {
      acc[t * d + c] /= static_cast<double>(count[t]);
    }
  }
  return TimeSeries(len, d, std::move(acc));
}

CentroidResult dba(const std::vector<TimeSeries>& series,
                   std::size_t max_iter, const TimeSeries& init) {
  require_non_empty(series);
  if (max_iter < 1) {
    throw ParameterError("max_iter must be >= 1");
  }
  CentroidResult result{init, {}, 0};
  double best = inertia(init, series, InertiaMeasure::dtw_distance);
  result.inertia_trace.push_back(best);
  for (std::size_t k = 1; k <= max_iter; ++k) {
    result.iterations_run = k;
    TimeSeries candidate = dba_step(result.centroid, series);
    const double value =
        inertia(candidate, series, InertiaMeasure::dtw_distance);
    if (!(value < best)) break;
    best = value;
    result.centroid = std::move(candidate);
    result.inertia_trace.push_back(value);
  }
  return result;
}

TimeSeries kdba(const TimeSeries& reference,
                const std::vector<TimeSeries>& series,
                const KernelParams& params) {
  require_non_empty(series);
  require_same_dims(reference, series);
  const std::size_t len = reference.length(), d = reference.dims();
  std::vector<double> acc(len * d, 0.0);
  for (std::size_t n = 0; n < series.size(); ++n) {
    const auto& s = series[n];
    AmaMatrix m = [&] {
      try {
        return ama(reference, s, params);
      } catch (const UnderflowError& e) {
        throw UnderflowError("kdba: series " + std::to_string(n + 1) + ": " +
                             e.what());
      }
    }();
    for (std::size_t i = 0; i < len; ++i) {
      double norm = 0.0;
      for (std::size_t j = 0; j < s.length(); ++j) norm += m.at(i, j);
      if (!(norm > 0.0)) {
        throw UnderflowError("kdba: series " + std::to_string(n + 1) +
                             ": alignment row " + std::to_string(i + 1) +
                             " has zero mass");
      }
      for (std::size_t j = 0; j < s.length(); ++j) {
        const double w = m.at(i, j) / norm;
        const auto ys = s.sample(j);
        for (std::size_t c = 0; c < d; ++c) {
          acc[i * d + c] += w * ys[c];
        }
      }
    }
  }
  const double inv_n = 1.0 / static_cast<double>(series.size());
  for (double& v : acc) v *= inv_n;
  return TimeSeries(len, d, std::move(acc));
}

CentroidResult ikdba(const std::vector<TimeSeries>& series,
                     const KernelParams& params, std::size_t max_iter,
                     const TimeSeries& init) {
  require_non_empty(series);
  if (max_iter < 1) {
    throw ParameterError("max_iter must be >= 1");
  }
  CentroidResult result{init, {}, 0};
  double best = log_similarity_inertia(init, series, params);
  result.inertia_trace.push_back(best);
  for (std::size_t k = 1; k <= max_iter; ++k) {
    result.iterations_run = k;
    TimeSeries candidate = kdba(result.centroid, series, params);
    const double value = log_similarity_inertia(candidate, series, params);
    if (!(value > best)) break;
    best = value;
    result.centroid = std::move(candidate);
    result.inertia_trace.push_back(value);
  }
  return result;
}

TimeSeries kdtw_pwa(const TimeSeries& x, const TimeSeries& y,
                    const KernelParams& params) {
  const AmaMatrix m = ama(x, y, params);
  const std::size_t p = x.length(), q = y.length(), d = x.dims();
  const std::size_t len = std::max(p, q);
  std::vector<double> a(len * d, 0.0), b(len * d, 0.0);
  std::vector<double> na(len, 0.0), nb(len, 0.0);

  // Deposits value*weight at the averaged time (i+j)/2, split between the
  // floor index (weight alpha) and the ceiling index (weight 1-alpha).
  auto deposit = [d](std::vector<double>& sums, std::vector<double>& norms,
                     std::size_t i, std::size_t j,
                     std::span<const double> xs, std::span<const double> ys,
                     double weight) {
    const std::size_t fl = (i + j) / 2;
    const std::size_t ce = (i + j + 1) / 2;
    const double alpha = 0.5 * static_cast<double>(i + j) -
                         static_cast<double>(fl);
    for (std::size_t c = 0; c < d; ++c) {
      const double v = (xs[c] + ys[c]) * weight;
      sums[(fl - 1) * d + c] += alpha * v;
      sums[(ce - 1) * d + c] += (1.0 - alpha) * v;
    }
    norms[fl - 1] += alpha * weight;
    norms[ce - 1] += (1.0 - alpha) * weight;
  };

  for (std::size_t i = 1; i <= len; ++i) {
    if (i < p) {
      for (std::size_t j = 1; j <= q; ++j) {
        deposit(a, na, i, j, x.sample(i - 1), y.sample(j - 1),
                m.at(i - 1, j - 1));
      }
    }
    if (i < q) {
      for (std::size_t j = 1; j <= p; ++j) {
        deposit(b, nb, i, j, x.sample(j - 1), y.sample(i - 1),
                m.at(j - 1, i - 1));
      }
    }
  }

  std::vector<double> out(len * d);
  for (std::size_t t = 0; t < len; ++t) {
    if (!(na[t] > 0.0) || !(nb[t] > 0.0)) {
      throw CoverageError("kdtw_pwa output index " + std::to_string(t + 1) +
                          " received no alignment mass");
    }
    for (std::size_t c = 0; c < d; ++c) {
      out[t * d + c] =
          (a[t * d + c] / na[t] + b[t * d + c] / nb[t]) / 4.0;
    }
  }
  return TimeSeries(len, d, std::move(out));
}

TimeSeries pkdtw_pwa(const std::vector<TimeSeries>& series,
                     const KernelParams& params, MergeOrdering ordering) {
  require_non_empty(series);
  std::vector<TimeSeries> working = series;
  while (working.size() > 1) {
    std::vector<TimeSeries> merged;
    std::vector<TimeSeries> rest;
    if (ordering == MergeOrdering::input_order) {
      std::size_t k = 0;
      for (; k + 1 < working.size(); k += 2) {
        merged.push_back(kdtw_pwa(working[k], working[k + 1], params));
      }
      if (k < working.size()) rest.push_back(std::move(working[k]));
    } else {
      // Greedy pairing by descending similarity; ties pick the earliest
      // index pair.
      const std::size_t n = working.size();
      std::vector<std::tuple<double, std::size_t, std::size_t>> sims;
      sims.reserve(n * (n - 1) / 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          sims.emplace_back(log_kdtw(working[i], working[j], params), i, j);
        }
      }
      std::stable_sort(sims.begin(), sims.end(),
                       [](const auto& lhs, const auto& rhs) {
                         return std::get<0>(lhs) > std::get<0>(rhs);
                       });
      std::vector<bool> used(n, false);
      for (const auto& [sim, i, j] : sims) {
        if (used[i] || used[j]) continue;
        used[i] = used[j] = true;
        merged.push_back(kdtw_pwa(working[i], working[j], params));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) rest.push_back(std::move(working[i]));
      }
    }
    working = std::move(merged);
    for (auto& s : rest) working.push_back(std::move(s));
  }
  return working.front();
}

}  // namespace ktsa
