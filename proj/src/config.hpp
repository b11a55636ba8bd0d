/*
 * mtc: multi-level temporal video compression
 * Run configuration: defaults, flat key = value config files, and the
 * mapping onto codec/planner/stream settings.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codec.hpp"
#include "planner.hpp"
#include "stream.hpp"
#include "synth.hpp"

namespace mtc {

struct RunConfig {
  uint64_t seed = 42;
  double w = 1.5;
  std::vector<int> planner_rates = {4, 8, 16};
  std::vector<int> analysis_rates = {2, 4, 8, 16};
  int spatial_factor = 8;
  int segment_length = 17;
  std::string quality = "psnr";        // psnr | compress | random
  std::string embedding = "begin";     // begin | end | none
  double beta = 0.5;
  std::string temporal_interp = "linear";  // linear | hold
  std::string spatial_interp = "bilinear"; // bilinear | nearest
  double learning_rate = 1.0;
  int train_steps = 600;
  double train_fraction = 0.5;  // train/holdout split for the ablation

  // Synthesis and corpus settings. Pattern "suite" is corpus-only and
  // rotates through the standard pattern/speed table.
  std::string pattern = "mixed";
  double speed = 1.0;
  double spatial_freq = 2.0;
  int width = 64;
  int height = 64;
  int channels = 3;
  int frame_count = 0;  // 0 = pattern default (2 segments; 3 for mixed)
  int corpus_size = 64;
  double fps = 25.0;
  bool sidecar = true;

  // Parses "key = value" lines; '#' starts a comment. Unknown keys error.
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);

  void validate() const;
  CodecConfig codec() const;
  QualityFunction quality_function() const;
  KeyframeEmbedding keyframe_embedding() const;
  SynthSpec synth_spec() const;
  int effective_frame_count(SynthPattern pattern) const;
};

std::vector<int> parse_rate_list(const std::string& text);

}  // namespace mtc
