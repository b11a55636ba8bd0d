/*
 * mtc: multi-level temporal video compression
 * Deterministic codec: causal temporal decimation plus block-mean spatial
 * pooling, with interpolation on decode.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <vector>

#include "frame.hpp"

namespace mtc {

enum class TemporalInterp { Linear, Hold };
enum class SpatialInterp { Bilinear, Nearest };

struct CodecConfig {
  int spatial_factor = 8;
  std::vector<int> planner_rates = {4, 8, 16};
  std::vector<int> analysis_rates = {2, 4, 8, 16};
  TemporalInterp temporal_interp = TemporalInterp::Linear;
  SpatialInterp spatial_interp = SpatialInterp::Bilinear;

  void validate() const;  // planner rates must be a subset of analysis rates
};

// Keeps frames {0, rate, 2*rate, ..., T-1} (frame 0 is always a keyframe)
// and reduces each kept frame by block-mean pooling over
// spatial_factor x spatial_factor tiles. Latent length is 1 + (T-1)/rate.
// Latent samples land on the 2^-23 grid so the stream's additive keyframe
// marker can be removed bit-exactly in f32.
LatentSegment encode_segment(const VideoSegment& segment, int rate,
                             const CodecConfig& cfg);

// Spatially upsamples each latent frame to the original resolution, then
// temporally interpolates between consecutive kept frames. Kept indices
// reproduce the upsampled latent exactly; output is clamped to [0,1].
// expected_frames is the frame count the caller believes this latent holds;
// it must satisfy (length-1)*rate == expected_frames-1.
VideoSegment decode_segment(const LatentSegment& latent, int rate,
                            const CodecConfig& cfg, int expected_frames);

// decode(encode(x)); the quality-probe primitive used by the planner.
VideoSegment reconstruct_at_rate(const VideoSegment& segment, int rate,
                                 const CodecConfig& cfg);

// Frame count a latent of this length decodes to at the given rate.
inline int decoded_length(int latent_len, int rate) {
  return latent_len <= 1 ? latent_len : (latent_len - 1) * rate + 1;
}

}  // namespace mtc
