/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "planner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace mtc {

namespace {

constexpr size_t kBruteForceLimit = 12;

double objective(double quality, double a, int rate, double w) {
  return (1.0 - a) * quality + a * std::log2(double(rate)) * w;
}

std::vector<size_t> planner_rate_columns(const QualityMatrix& matrix) {
  std::vector<size_t> columns;
  for (int rate : {4, 8, 16}) {
    auto it = std::find(matrix.rates.begin(), matrix.rates.end(), rate);
    if (it == matrix.rates.end())
      fail(ErrorKind::InvalidArgument,
           "quality matrix lacks the rate-" + std::to_string(rate) +
               " column");
    columns.push_back(size_t(it - matrix.rates.begin()));
  }
  return columns;
}

}  // namespace

QualityKind quality_kind_from_string(const std::string& name) {
  if (name == "psnr") return QualityKind::PsnrBased;
  if (name == "compress") return QualityKind::CompressibilityBased;
  if (name == "random") return QualityKind::Random;
  fail(ErrorKind::InvalidArgument, "unknown quality kind: " + name);
}

std::string to_string(QualityKind kind) {
  switch (kind) {
    case QualityKind::PsnrBased: return "psnr";
    case QualityKind::CompressibilityBased: return "compress";
    case QualityKind::Random: return "random";
  }
  return "?";
}

void QualityMatrix::validate() const {
  if (rates.empty() || values.empty() || values.size() % rates.size() != 0)
    fail(ErrorKind::Data, "malformed quality matrix");
  for (size_t i = 1; i < rates.size(); ++i)
    if (rates[i] <= rates[i - 1])
      fail(ErrorKind::Data, "quality matrix rates must be ascending");
  for (double v : values)
    if (!std::isfinite(v)) fail(ErrorKind::Data, "non-finite quality entry");
}

QualityMatrix build_quality_matrix(const SegmentedVideo& video,
                                   const std::vector<int>& rates,
                                   const QualityFunction& quality,
                                   const CodecConfig& cfg) {
  if (video.segments.empty())
    fail(ErrorKind::InvalidArgument, "video has no segments");
  for (int rate : rates)
    if (std::find(cfg.analysis_rates.begin(), cfg.analysis_rates.end(),
                  rate) == cfg.analysis_rates.end())
      fail(ErrorKind::InvalidArgument,
           "rate " + std::to_string(rate) + " is not an analysis rate");

  QualityMatrix matrix;
  matrix.rates = rates;
  std::sort(matrix.rates.begin(), matrix.rates.end());
  matrix.values.reserve(video.segments.size() * matrix.rates.size());

  Rng rng(quality.seed);
  for (const VideoSegment& segment : video.segments) {
    double neg_bpp = 0.0;
    if (quality.kind == QualityKind::CompressibilityBased)
      neg_bpp = -compressibility(segment);
    for (int rate : matrix.rates) {
      switch (quality.kind) {
        case QualityKind::PsnrBased:
          matrix.values.push_back(
              psnr(segment, reconstruct_at_rate(segment, rate, cfg)));
          break;
        case QualityKind::CompressibilityBased:
          // The proxy measures the segment, not a reconstruction, so the
          // value is constant along the rate axis.
          matrix.values.push_back(neg_bpp);
          break;
        case QualityKind::Random:
          matrix.values.push_back(rng.uniform(20.0, 40.0));
          break;
      }
    }
  }
  return matrix;
}

AlphaStats alpha_stats(const QualityMatrix& matrix) {
  matrix.validate();
  const size_t n = matrix.segment_count();
  const size_t r = matrix.rates.size();

  AlphaStats stats;
  stats.mean.resize(n);
  stats.stddev.resize(n);
  stats.q_min = matrix.values[0];
  stats.q_max = matrix.values[0];
  for (size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < r; ++j) {
      double v = matrix.at(i, j);
      sum += v;
      stats.q_min = std::min(stats.q_min, v);
      stats.q_max = std::max(stats.q_max, v);
    }
    double mean = sum / double(r);
    double var = 0.0;
    for (size_t j = 0; j < r; ++j) {
      double d = matrix.at(i, j) - mean;
      var += d * d;
    }
    stats.mean[i] = mean;
    stats.stddev[i] = std::sqrt(var / double(r));
    stats.sigma_max = std::max(stats.sigma_max, stats.stddev[i]);
  }
  return stats;
}

double alpha(const AlphaStats& stats, size_t segment) {
  double mean_term = 0.5;
  if (stats.q_max > stats.q_min)
    mean_term = (stats.mean[segment] - stats.q_min) /
                (stats.q_max - stats.q_min);
  double spread_term = 1.0;
  if (stats.sigma_max > 0.0)
    spread_term = 1.0 - stats.stddev[segment] / stats.sigma_max;
  double a = 0.5 * mean_term + 0.5 * spread_term;
  return std::clamp(a, 0.0, 1.0);
}

CompressionPlan plan(const QualityMatrix& matrix, double w) {
  matrix.validate();
  if (w < 0.0) fail(ErrorKind::InvalidArgument, "w must be nonnegative");
  std::vector<size_t> columns = planner_rate_columns(matrix);
  AlphaStats stats = alpha_stats(matrix);

  CompressionPlan result;
  result.weight = w;
  result.rates.reserve(matrix.segment_count());
  for (size_t i = 0; i < matrix.segment_count(); ++i) {
    double a = alpha(stats, i);
    double best_score = 0.0;
    int best_rate = 0;
    for (size_t j : columns) {
      int rate = matrix.rates[j];
      double score = objective(matrix.at(i, j), a, rate, w);
      ++result.evaluations;
      // >= prefers the larger rate on ties; columns iterate ascending.
      if (best_rate == 0 || score >= best_score) {
        best_score = score;
        best_rate = rate;
      }
    }
    result.rates.push_back(best_rate);
    result.score += best_score;
  }
  return result;
}

CompressionPlan brute_force_plan(const QualityMatrix& matrix, double w) {
  matrix.validate();
  if (w < 0.0) fail(ErrorKind::InvalidArgument, "w must be nonnegative");
  const size_t n = matrix.segment_count();
  if (n > kBruteForceLimit)
    fail(ErrorKind::InvalidArgument,
         "brute force limited to " + std::to_string(kBruteForceLimit) +
             " segments, got " + std::to_string(n));
  std::vector<size_t> columns = planner_rate_columns(matrix);
  AlphaStats stats = alpha_stats(matrix);
  std::vector<double> alphas(n);
  for (size_t i = 0; i < n; ++i) alphas[i] = alpha(stats, i);

  const size_t r = columns.size();
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= r;

  CompressionPlan best;
  best.weight = w;
  bool have_best = false;
  std::vector<int> rates(n);
  for (size_t code = 0; code < total; ++code) {
    size_t rest = code;
    double score = 0.0;
    for (size_t i = 0; i < n; ++i) {
      size_t j = columns[rest % r];
      rest /= r;
      int rate = matrix.rates[j];
      rates[i] = rate;
      score += objective(matrix.at(i, j), alphas[i], rate, w);
    }
    bool take = !have_best || score > best.score ||
                (score == best.score &&
                 std::lexicographical_compare(best.rates.begin(),
                                              best.rates.end(), rates.begin(),
                                              rates.end()));
    if (take) {
      best.rates = rates;
      best.score = score;
      have_best = true;
    }
  }
  best.evaluations = total * n;
  return best;
}

std::vector<int> tercile_rates(const std::vector<double>& bytes_per_pixel) {
  const size_t n = bytes_per_pixel.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "no segments to rank");
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return bytes_per_pixel[a] < bytes_per_pixel[b];
  });
  static const int kTercileRates[3] = {16, 8, 4};
  std::vector<int> rates(n, 4);
  for (size_t pos = 0; pos < n; ++pos)
    rates[order[pos]] = kTercileRates[pos * 3 / n];
  return rates;
}

double plan_score(const QualityMatrix& matrix, const std::vector<int>& rates,
                  double w) {
  matrix.validate();
  if (rates.size() != matrix.segment_count())
    fail(ErrorKind::InvalidArgument, "rate count does not match matrix");
  AlphaStats stats = alpha_stats(matrix);
  double score = 0.0;
  for (size_t i = 0; i < rates.size(); ++i) {
    auto it = std::find(matrix.rates.begin(), matrix.rates.end(), rates[i]);
    if (it == matrix.rates.end())
      fail(ErrorKind::InvalidArgument,
           "rate " + std::to_string(rates[i]) + " missing from matrix");
    size_t j = size_t(it - matrix.rates.begin());
    score += objective(matrix.at(i, j), alpha(stats, i), rates[i], w);
  }
  return score;
}

CompressionPlan plan_video(const SegmentedVideo& video,
                           const QualityFunction& quality, double w,
                           const CodecConfig& cfg) {
  cfg.validate();
  if (quality.kind != QualityKind::CompressibilityBased) {
    QualityMatrix matrix =
        build_quality_matrix(video, cfg.planner_rates, quality, cfg);
    return plan(matrix, w);
  }

  // Compressibility policy: the proxy measures the segment, not a
  // reconstruction, so selection reduces to ranking segments.
  const size_t n = video.segments.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "video has no segments");
  std::vector<double> bpp(n);
  for (size_t i = 0; i < n; ++i) bpp[i] = compressibility(video.segments[i]);

  CompressionPlan result;
  result.weight = w;
  result.rates = tercile_rates(bpp);
  QualityMatrix matrix =
      build_quality_matrix(video, cfg.planner_rates, quality, cfg);
  result.score = plan_score(matrix, result.rates, w);
  result.evaluations = n;
  return result;
}

}  // namespace mtc
