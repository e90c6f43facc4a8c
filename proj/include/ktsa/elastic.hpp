#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ktsa/time_series.hpp"

namespace ktsa {

/// A monotone alignment between two series: 1-based index pairs starting at
/// (1,1), ending at (T1,T2), each successor one of (i+1,j), (i,j+1),
/// (i+1,j+1).
struct AlignmentPath {
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

struct DtwResult {
  double cost = 0.0;
  AlignmentPath path;
};

/// Squared L2 distance between two equal-dimension samples.
double squared_euclidean(std::span<const double> x, std::span<const double> y);

/// Dynamic time warping with squared-Euclidean local cost. Returns the
/// minimal path cost and one minimizing path recovered by backtracking
/// (ties prefer the diagonal predecessor, then (i-1,j), then (i,j-1)).
DtwResult dtw(const TimeSeries& x, const TimeSeries& y);

/// The (p+1)x(q+1) matrix of summed alignment-path weights: cell (i,j)
/// holds the sum over all partial paths (1,1)->(i,j) of the product of the
/// per-cell weights (1/3)*exp(-nu*d2). Cells are stored in log domain;
/// value(0,0) = 1 and the other border cells are 0.
class ForwardMatrix {
public:
  ForwardMatrix(std::size_t p, std::size_t q, std::vector<double> log_values);

  /// Series lengths, not storage extents.
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }

  /// Log of cell (i,j), 0 <= i <= p, 0 <= j <= q; -inf encodes 0.
  double log_value(std::size_t i, std::size_t j) const {
    return log_[i * (q_ + 1) + j];
  }

  /// Natural-scale cell value; may underflow to 0 or overflow to inf for
  /// long series, which is why the log accessor exists.
  double value(std::size_t i, std::size_t j) const;

private:
  std::size_t p_;
  std::size_t q_;
  std::vector<double> log_;
};

/// Evaluates the summed-path-weight recursion between x and y.
/// Throws InfeasibleError when a corridor is present but narrower than the
/// length difference of the pair.
ForwardMatrix forward_matrix(const TimeSeries& x, const TimeSeries& y,
                             const KernelParams& params);

/// Log of the regularized alignment kernel: log(Kxy(p,q) + Kxx(p,q)) with
/// both recursions evaluated entirely in log domain (exact log-sum-exp per
/// cell). Always finite for finite inputs; this is the log-domain mode the
/// natural-scale entry point advises on under/overflow.
double log_kdtw(const TimeSeries& x, const TimeSeries& y,
                const KernelParams& params);

/// Natural-scale kernel value Kxy + Kxx. Symmetric in its arguments.
/// Throws UnderflowError when the value rounds to zero and OverflowError
/// when it exceeds double range; both advise log_kdtw.
double kdtw(const TimeSeries& x, const TimeSeries& y,
            const KernelParams& params);

/// Diagnostic variant kdtw(x,y)/sqrt(kdtw(x,x)*kdtw(y,y)), computed in log
/// domain and exponentiated at the end.
double kdtw_normalized(const TimeSeries& x, const TimeSeries& y,
                       const KernelParams& params);

/// The p x q matrix of complete-path mass through each cell, globally
/// rescaled so its maximum entry is 1 (the true matrix differs by one
/// untracked positive constant).
class AmaMatrix {
public:
  AmaMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  const std::vector<double>& values() const { return values_; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Builds the alignment matrix average of the pair: cell (i,j) of the
/// forward matrix times cell (p-i+1, q-j+1) of the forward matrix of the
/// time-reversed pair. Throws UnderflowError when a whole row or column
/// rescales to zero.
AmaMatrix ama(const TimeSeries& x, const TimeSeries& y,
              const KernelParams& params);

/// Sample-alignment probabilities derived from a nonnegative matrix:
/// row_conditional(i,j) = m(i,j) / sum_j m(i,j)   (P(j|i)),
/// col_conditional(i,j) = m(i,j) / sum_i m(i,j)   (P(i|j)),
/// p(i,j) = (row_conditional + col_conditional) / 2.
/// Invariant under any positive rescaling of m.
struct AlignmentProbability {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> p;
  std::vector<double> row_conditional;
  std::vector<double> col_conditional;

  double p_at(std::size_t i, std::size_t j) const { return p[i * cols + j]; }
  double row_at(std::size_t i, std::size_t j) const {
    return row_conditional[i * cols + j];
  }
  double col_at(std::size_t i, std::size_t j) const {
    return col_conditional[i * cols + j];
  }
};

/// Throws DegenerateError when a row or column of m sums to zero.
AlignmentProbability alignment_probabilities(const AmaMatrix& m);

}  // namespace ktsa
