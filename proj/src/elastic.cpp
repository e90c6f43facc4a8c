#include "ktsa/elastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ktsa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogThird = -std::log(3.0);

inline double lse2(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == kNegInf) return kNegInf;
  return a + std::log1p(std::exp(b - a));
}

inline double lse3(double a, double b, double c) {
  const double m = std::max(a, std::max(b, c));
  if (m == kNegInf) return kNegInf;
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

inline double sq_dist(const double* x, const double* y, std::size_t d) {
  double s = 0.0;
  for (std::size_t l = 0; l < d; ++l) {
    const double diff = x[l] - y[l];
    s += diff * diff;
  }
  return s;
}

void check_pair(const TimeSeries& x, const TimeSeries& y,
                const KernelParams& params) {
  if (x.dims() != y.dims()) {
    throw DimensionError("series dimensionality mismatch: " +
                         std::to_string(x.dims()) + " vs " +
                         std::to_string(y.dims()));
  }
  validate(params);
  if (params.corridor_radius) {
    const std::size_t p = x.length(), q = y.length();
    const std::size_t gap = p > q ? p - q : q - p;
    if (*params.corridor_radius < gap) {
      throw InfeasibleError(
          "corridor_radius " + std::to_string(*params.corridor_radius) +
          " is smaller than the length difference " + std::to_string(gap));
    }
  }
}

inline bool gate(std::size_t a, std::size_t b, std::size_t radius) {
  const std::size_t gap = a > b ? a - b : b - a;
  return gap <= radius;
}

// Log-domain evaluation of the summed-path-weight recursion (the cross
// term): cell (i,j) = (1/3) e^{-nu d2(x(i),y(j))} * (sum of the three
// gated predecessors). Returns the full (p+1)x(q+1) log matrix.
std::vector<double> fill_log_forward(const TimeSeries& x, const TimeSeries& y,
                                     const KernelParams& params) {
  const std::size_t p = x.length(), q = y.length(), d = x.dims();
  const double nu = params.nu;
  const std::size_t stride = q + 1;
  std::vector<double> lm((p + 1) * stride, kNegInf);
  lm[0] = 0.0;

  if (!params.corridor_radius) {
    for (std::size_t i = 1; i <= p; ++i) {
      const double* xi = x.sample(i - 1).data();
      double* row = lm.data() + i * stride;
      const double* up = lm.data() + (i - 1) * stride;
      for (std::size_t j = 1; j <= q; ++j) {
        const double lw =
            kLogThird - nu * sq_dist(xi, y.sample(j - 1).data(), d);
        row[j] = lw + lse3(up[j], up[j - 1], row[j - 1]);
      }
    }
  } else {
    const std::size_t r = *params.corridor_radius;
    for (std::size_t i = 1; i <= p; ++i) {
      const double* xi = x.sample(i - 1).data();
      double* row = lm.data() + i * stride;
      const double* up = lm.data() + (i - 1) * stride;
      for (std::size_t j = 1; j <= q; ++j) {
        const double lw =
            kLogThird - nu * sq_dist(xi, y.sample(j - 1).data(), d);
        const double a = gate(i - 1, j, r) ? up[j] : kNegInf;
        const double b = gate(i - 1, j - 1, r) ? up[j - 1] : kNegInf;
        const double c = gate(i, j - 1, r) ? row[j - 1] : kNegInf;
        row[j] = lw + lse3(a, b, c);
      }
    }
  }
  return lm;
}

// Log-domain evaluation of the self-alignment term: the diagonal step
// exists only when i == j, and the off-diagonal steps are weighted by the
// same-index local weights e^{-nu d2(x(t),y(t))}, which vanish beyond
// min(p,q).
std::vector<double> fill_log_self(const TimeSeries& x, const TimeSeries& y,
                                  const KernelParams& params) {
  const std::size_t p = x.length(), q = y.length(), d = x.dims();
  const double nu = params.nu;
  const std::size_t stride = q + 1;
  const std::size_t tmax = std::min(p, q);

  std::vector<double> ldiag(std::max(p, q) + 1, kNegInf);
  for (std::size_t t = 1; t <= tmax; ++t) {
    ldiag[t] =
        -nu * sq_dist(x.sample(t - 1).data(), y.sample(t - 1).data(), d);
  }

  std::vector<double> lm((p + 1) * stride, kNegInf);
  lm[0] = 0.0;
  const std::size_t r = params.corridor_radius
                            ? *params.corridor_radius
                            : std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i <= p; ++i) {
    double* row = lm.data() + i * stride;
    const double* up = lm.data() + (i - 1) * stride;
    for (std::size_t j = 1; j <= q; ++j) {
      const double a =
          gate(i - 1, j, r) ? up[j] + ldiag[i] : kNegInf;
      const double b = (i == j && gate(i, j, r)) ? up[j - 1] + ldiag[i]
                                                 : kNegInf;
      const double c =
          gate(i, j - 1, r) ? row[j - 1] + ldiag[j] : kNegInf;
      row[j] = kLogThird + lse3(a, b, c);
    }
  }
  return lm;
}

}  // namespace

double squared_euclidean(std::span<const double> x,
                         std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionError("sample dimensionality mismatch: " +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
  return sq_dist(x.data(), y.data(), x.size());
}

DtwResult dtw(const TimeSeries& x, const TimeSeries& y) {
  if (x.dims() != y.dims()) {
    throw DimensionError("series dimensionality mismatch: " +
                         std::to_string(x.dims()) + " vs " +
                         std::to_string(y.dims()));
  }
  const std::size_t p = x.length(), q = y.length(), d = x.dims();
  const std::size_t stride = q + 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp((p + 1) * stride, inf);
  dp[0] = 0.0;
  for (std::size_t i = 1; i <= p; ++i) {
    const double* xi = x.sample(i - 1).data();
    double* row = dp.data() + i * stride;
    const double* up = dp.data() + (i - 1) * stride;
    for (std::size_t j = 1; j <= q; ++j) {
      const double cost = sq_dist(xi, y.sample(j - 1).data(), d);
      row[j] = cost + std::min({up[j], up[j - 1], row[j - 1]});
    }
  }

  DtwResult result;
  result.cost = dp[p * stride + q];

  // Backtrack; ties prefer diagonal, then (i-1,j), then (i,j-1).
  std::vector<std::pair<std::size_t, std::size_t>> rev;
  std::size_t i = p, j = q;
  rev.emplace_back(i, j);
  while (i > 1 || j > 1) {
    const double diag = (i > 1 && j > 1) ? dp[(i - 1) * stride + (j - 1)] : inf;
    const double vert = i > 1 ? dp[(i - 1) * stride + j] : inf;
    const double horz = j > 1 ? dp[i * stride + (j - 1)] : inf;
    const double best = std::min({diag, vert, horz});
    if (diag == best) {
      --i;
      --j;
    } else if (vert == best) {
      --i;
    } else {
      --j;
    }
    rev.emplace_back(i, j);
  }
  result.path.steps.assign(rev.rbegin(), rev.rend());
  return result;
}

ForwardMatrix::ForwardMatrix(std::size_t p, std::size_t q,
                             std::vector<double> log_values)
    : p_(p), q_(q), log_(std::move(log_values)) {
  if (log_.size() != (p_ + 1) * (q_ + 1)) {
    throw ParameterError("forward matrix storage does not match shape");
  }
}

double ForwardMatrix::value(std::size_t i, std::size_t j) const {
  return std::exp(log_value(i, j));
}

ForwardMatrix forward_matrix(const TimeSeries& x, const TimeSeries& y,
                             const KernelParams& params) {
  check_pair(x, y, params);
  return ForwardMatrix(x.length(), y.length(),
                       fill_log_forward(x, y, params));
}

double log_kdtw(const TimeSeries& x, const TimeSeries& y,
                const KernelParams& params) {
  check_pair(x, y, params);
  const std::size_t p = x.length(), q = y.length();
  const auto lxy = fill_log_forward(x, y, params);
  const auto lxx = fill_log_self(x, y, params);
  return lse2(lxy[p * (q + 1) + q], lxx[p * (q + 1) + q]);
}

double kdtw(const TimeSeries& x, const TimeSeries& y,
            const KernelParams& params) {
  const double lv = log_kdtw(x, y, params);
  const double v = std::exp(lv);
  if (v == 0.0) {
    throw UnderflowError(
        "kdtw value underflows double precision; use log_kdtw");
  }
  if (std::isinf(v)) {
    throw OverflowError(
        "kdtw value overflows double precision; use log_kdtw");
  }
  return v;
}

double kdtw_normalized(const TimeSeries& x, const TimeSeries& y,
                       const KernelParams& params) {
  const double lxy = log_kdtw(x, y, params);
  const double lxx = log_kdtw(x, x, params);
  const double lyy = log_kdtw(y, y, params);
  return std::exp(lxy - 0.5 * (lxx + lyy));
}

AmaMatrix::AmaMatrix(std::size_t rows, std::size_t cols,
                     std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ < 1 || cols_ < 1 || values_.size() != rows_ * cols_) {
    throw ParameterError("alignment matrix storage does not match shape");
  }
  bool any_positive = false;
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ParameterError("alignment matrix entries must be finite and >= 0");
    }
    any_positive |= v > 0.0;
  }
  if (!any_positive) {
    throw UnderflowError("alignment matrix has no positive entry");
  }
}

AmaMatrix ama(const TimeSeries& x, const TimeSeries& y,
              const KernelParams& params) {
  check_pair(x, y, params);
  const std::size_t p = x.length(), q = y.length();
  const std::size_t stride = q + 1;
  const auto fw = fill_log_forward(x, y, params);
  const auto fwr = fill_log_forward(x.reversed(), y.reversed(), params);

  std::vector<double> lama(p * q);
  double lmax = kNegInf;
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t j = 1; j <= q; ++j) {
      const double v =
          fw[i * stride + j] + fwr[(p - i + 1) * stride + (q - j + 1)];
      lama[(i - 1) * q + (j - 1)] = v;
      lmax = std::max(lmax, v);
    }
  }

  std::vector<double> out(p * q);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::exp(lama[k] - lmax);
  }

  for (std::size_t i = 0; i < p; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < q; ++j) any |= out[i * q + j] > 0.0;
    if (!any) {
      throw UnderflowError("ama row " + std::to_string(i + 1) +
                           " is zero after rescaling; no representable path "
                           "mass passes through it");
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < p; ++i) any |= out[i * q + j] > 0.0;
    if (!any) {
      throw UnderflowError("ama column " + std::to_string(j + 1) +
                           " is zero after rescaling; no representable path "
                           "mass passes through it");
    }
  }
  return AmaMatrix(p, q, std::move(out));
}

AlignmentProbability alignment_probabilities(const AmaMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      row_sum[i] += m.at(i, j);
      col_sum[j] += m.at(i, j);
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_sum[i] <= 0.0) {
      throw DegenerateError("row " + std::to_string(i + 1) +
                            " sums to zero; conditional undefined");
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (col_sum[j] <= 0.0) {
      throw DegenerateError("column " + std::to_string(j + 1) +
                            " sums to zero; conditional undefined");
    }
  }

  AlignmentProbability ap;
  ap.rows = rows;
  ap.cols = cols;
  ap.p.resize(rows * cols);
  ap.row_conditional.resize(rows * cols);
  ap.col_conditional.resize(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = m.at(i, j);
      const double pji = v / row_sum[i];
      const double pij = v / col_sum[j];
      ap.row_conditional[i * cols + j] = pji;
      ap.col_conditional[i * cols + j] = pij;
      ap.p[i * cols + j] = 0.5 * (pji + pij);
    }
  }
  return ap;
}

}  // namespace ktsa
