#pragma once

#include <cstddef>
#include <vector>

#include "ktsa/elastic.hpp"
#include "ktsa/time_series.hpp"

namespace ktsa {

/// Outcome of a centroid estimation. For iterative methods the trace holds
/// the initial inertia followed by the inertia of each accepted iteration,
/// so it is strictly monotone (decreasing for distance-driven methods,
/// increasing for similarity-driven ones). Similarity inertias are stored
/// in log scale, where comparisons are exact even when the natural-scale
/// sum is not representable.
struct CentroidResult {
  TimeSeries centroid;
  std::vector<double> inertia_trace;
  std::size_t iterations_run = 0;
};

enum class InertiaMeasure { dtw_distance, kdtw_similarity };

/// Sum over S of the pairwise value against c: total warping cost for
/// dtw_distance, total kernel similarity for kdtw_similarity.
double inertia(const TimeSeries& c, const std::vector<TimeSeries>& series,
               InertiaMeasure measure, const KernelParams& params = {});

/// Log of the summed kernel similarity between c and the set, evaluated as
/// a log-sum-exp of per-series log_kdtw values.
double log_similarity_inertia(const TimeSeries& c,
                              const std::vector<TimeSeries>& series,
                              const KernelParams& params);

/// Per-step mean of the two series along one optimal warping path; output
/// length equals the path length.
TimeSeries pairwise_dtw_centroid(const TimeSeries& x, const TimeSeries& y);

/// One barycenter refinement: each sample of each series contributes to the
/// reference timestamps its optimal path aligns it with, and output(i) is
/// the mean of the contributions at i. Output length equals |reference|.
TimeSeries dba_step(const TimeSeries& reference,
                    const std::vector<TimeSeries>& series);

/// Iterated dba_step driven by total warping cost, stopping when the
/// inertia no longer strictly decreases or max_iter is reached. Returns the
/// last strictly-improving centroid.
CentroidResult dba(const std::vector<TimeSeries>& series,
                   std::size_t max_iter, const TimeSeries& init);

/// Kernel barycenter step: for each series, weight its samples by the
/// row-normalized alignment matrix against the reference and average the
/// per-series results. Output length equals |reference|.
TimeSeries kdba(const TimeSeries& reference,
                const std::vector<TimeSeries>& series,
                const KernelParams& params);

/// Iterated kdba driven by summed kernel similarity (log domain), stopping
/// when the inertia no longer strictly increases or max_iter is reached.
/// Returns the best-inertia centroid encountered.
CentroidResult ikdba(const std::vector<TimeSeries>& series,
                     const KernelParams& params, std::size_t max_iter,
                     const TimeSeries& init);

/// Pairwise average in both the sample space and along the time axis: each
/// aligned pair (i,j) deposits (x(i)+y(j)) weighted by the alignment-matrix
/// mass at the averaged time (i+j)/2, smoothed between the floor and
/// ceiling indices. Output length is max(|x|,|y|). Throws CoverageError
/// when an output index receives no mass.
TimeSeries kdtw_pwa(const TimeSeries& x, const TimeSeries& y,
                    const KernelParams& params);

enum class MergeOrdering { input_order, similar_first };

/// Progressive agglomeration: each round replaces pairs by their kdtw_pwa
/// average until one series remains. input_order pairs the first two
/// remaining series; similar_first greedily pairs the most similar ones
/// (by log kernel similarity) each round.
TimeSeries pkdtw_pwa(const std::vector<TimeSeries>& series,
                     const KernelParams& params,
                     MergeOrdering ordering = MergeOrdering::input_order);

}  // namespace ktsa
