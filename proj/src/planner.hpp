/*
 * mtc: multi-level temporal video compression
 * Per-segment rate planning: quality matrix construction, the compression
 * tolerance factor, and score maximization over per-segment rates.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "codec.hpp"
#include "frame.hpp"

namespace mtc {

enum class QualityKind { PsnrBased, CompressibilityBased, Random };

QualityKind quality_kind_from_string(const std::string& name);
std::string to_string(QualityKind kind);

struct QualityFunction {
  QualityKind kind = QualityKind::PsnrBased;
  uint64_t seed = 0;  // used by the random kind only
};

// N x R grid of quality scores, segment-major. Decibels when PSNR-based,
// negated bytes/pixel when compressibility-based, seeded uniform draws in
// [20, 40] when random.
struct QualityMatrix {
  std::vector<int> rates;      // strictly ascending
  std::vector<double> values;  // segments x rates

  size_t segment_count() const {
    return rates.empty() ? 0 : values.size() / rates.size();
  }
  double at(size_t segment, size_t rate_idx) const {
    return values[segment * rates.size() + rate_idx];
  }
  void validate() const;
};

// The statistics feeding the compression tolerance factor.
struct AlphaStats {
  std::vector<double> mean;    // per-segment mean over rates
  std::vector<double> stddev;  // per-segment population std over rates
  double q_min = 0.0;          // global extremes over all entries
  double q_max = 0.0;
  double sigma_max = 0.0;      // largest per-segment std
};

struct CompressionPlan {
  std::vector<int> rates;
  double weight = 0.0;
  double score = 0.0;
  size_t evaluations = 0;  // objective evaluations performed
};

QualityMatrix build_quality_matrix(const SegmentedVideo& video,
                                   const std::vector<int>& rates,
                                   const QualityFunction& quality,
                                   const CodecConfig& cfg);

AlphaStats alpha_stats(const QualityMatrix& matrix);

// Compression tolerance factor in [0,1]. Degenerate inputs are defined:
// q_max == q_min treats the normalized mean as 0.5, sigma_max == 0 treats
// the spread term as 1.
double alpha(const AlphaStats& stats, size_t segment);

// Per-segment argmax of (1-alpha)*Q(c) + alpha*log2(c)*w over the planner
// rates {4,8,16}; ties break toward the larger rate.
CompressionPlan plan(const QualityMatrix& matrix, double w);

// Exhaustive-enumeration oracle for plan(); N <= 12. Ties break toward the
// lexicographically largest rate vector among the maxima.
CompressionPlan brute_force_plan(const QualityMatrix& matrix, double w);

// Tercile mapping behind the compressibility kind: segments ranked by
// bytes/pixel get 16 (most compressible third), 8, then 4.
std::vector<int> tercile_rates(const std::vector<double>& bytes_per_pixel);

// Total objective value of a fixed rate assignment under the matrix.
double plan_score(const QualityMatrix& matrix, const std::vector<int>& rates,
                  double w);

// Policy front end used by the harness. PSNR-based and random kinds plan on
// their quality matrix; the compressibility kind assigns rates by tercile of
// bytes/pixel (most compressible third gets 16, middle 8, rest 4).
CompressionPlan plan_video(const SegmentedVideo& video,
                           const QualityFunction& quality, double w,
                           const CodecConfig& cfg);

}  // namespace mtc
