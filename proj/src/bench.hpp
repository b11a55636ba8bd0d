/*
 * mtc: multi-level temporal video compression
 * Benchmark harness: seeded corpora, per-segment reports, the ablation
 * sweeps and the scatter analysis, with CSV/SVG emission.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "frame.hpp"
#include "planner.hpp"
#include "stream.hpp"

namespace mtc {

struct CorpusVideo {
  std::string id;
  std::vector<Frame> frames;
  double fps = 25.0;
  std::vector<std::string> labels;  // one per segment
};

// Seeded corpus of corpus_size videos. pattern "suite" rotates through the
// pattern/speed table; any specific pattern builds a homogeneous corpus.
std::vector<CorpusVideo> make_corpus(const RunConfig& cfg);

struct BenchRow {
  std::string video_id;
  int segment_id = 0;
  std::string label;
  int chosen_rate = 0;
  std::vector<double> rate_psnr;  // per analysis rate, ascending
  double ssim_value = 0.0;
  double flow_magnitude = 0.0;  // mean block flow of the source content
  double loss_quality = 0.0;    // flow-guided loss of decode vs original
  double loss_motion = 0.0;
  double bytes_per_pixel = 0.0;
  double alpha_value = 0.0;
  double vcpr_value = 0.0;   // per video, repeated on each row
  double wall_seconds = 0.0; // per video, repeated on each row
};

struct BenchReport {
  std::vector<int> analysis_rates;
  std::vector<BenchRow> rows;
  double corpus_vcpr = 0.0;  // pooled over all segments
  double mean_psnr = 0.0;    // decoded vs original, mean over videos
  double mean_ssim = 0.0;
  double mean_rate = 0.0;
  double wall_seconds = 0.0;
};

// Full pipeline per video: quality matrix, plan, encode, assemble, shared
// predictor training, decode, metrics. Deterministic given cfg.seed except
// for the wall-time columns.
BenchReport run_bench(const std::vector<CorpusVideo>& corpus,
                      const RunConfig& cfg);

struct WSweepRow {
  double w = 0.0;
  double vcpr_value = 0.0;
  double mean_psnr = 0.0;
  double mean_ssim = 0.0;
  double mean_rate = 0.0;
};

std::vector<WSweepRow> run_sweep_w(const std::vector<CorpusVideo>& corpus,
                                   const RunConfig& cfg,
                                   const std::vector<double>& ws = {1.0, 1.5,
                                                                    2.0, 2.5});

struct EmbeddingSweepRow {
  std::string position;
  double train_accuracy = 0.0;
  double holdout_balanced_accuracy = 0.0;
  double final_loss = 0.0;
};

// Trains on the first train-frac of the corpus and evaluates balanced
// keyframe accuracy on the rest, for begin/end/none markers.
std::vector<EmbeddingSweepRow> run_sweep_embedding(
    const std::vector<CorpusVideo>& corpus, const RunConfig& cfg);

struct QualitySweepRow {
  std::string kind;
  double mean_psnr = 0.0;
  double mean_ssim = 0.0;
  double vcpr_value = 0.0;
  double wall_seconds = 0.0;
};

std::vector<QualitySweepRow> run_sweep_quality(
    const std::vector<CorpusVideo>& corpus, const RunConfig& cfg);

struct ScatterRow {
  std::string video_id;
  int segment_id = 0;
  std::string label;
  std::vector<double> rate_psnr;  // per analysis rate, ascending
  double psnr_std = 0.0;
  double flow_magnitude = 0.0;
  double bytes_per_pixel = 0.0;
  bool orange = false;  // compression-tolerant under the adjacent-rate rule
};

// Per-segment scatter analysis over the analysis rates. A segment is orange
// when PSNR at the second-smallest rate is within 0.5 dB of (or above) the
// smallest rate's PSNR, blue otherwise.
std::vector<ScatterRow> run_scatter(const std::vector<CorpusVideo>& corpus,
                                    const RunConfig& cfg);

// CSV/SVG emission; every writer creates the directory if needed.
void write_bench_csv(const BenchReport& report, const std::string& path);
void write_w_sweep_csv(const std::vector<WSweepRow>& rows,
                       const std::string& path);
void write_embedding_sweep_csv(const std::vector<EmbeddingSweepRow>& rows,
                               const std::string& path);
void write_quality_sweep_csv(const std::vector<QualitySweepRow>& rows,
                             const std::string& path);
void write_scatter_csv(const std::vector<ScatterRow>& rows,
                       const std::vector<int>& analysis_rates,
                       const std::string& path);
void write_scatter_svg(const std::vector<ScatterRow>& rows,
                       const std::string& path);
void write_w_sweep_svg(const std::vector<WSweepRow>& rows,
                       const std::string& path);

}  // namespace mtc
