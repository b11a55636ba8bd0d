/*
 * mtc: multi-level temporal video compression
 * Keyframe-marked latent streams: assembly, the trainable keyframe
 * predictor, boundary splitting, rate recovery, full decode, and the
 * bit-exact MTCS stream format.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codec.hpp"
#include "frame.hpp"

namespace mtc {

enum class EmbeddingPosition : uint8_t { Begin = 0, End = 1, None = 2 };

EmbeddingPosition embedding_position_from_string(const std::string& name);
std::string to_string(EmbeddingPosition position);

// Fixed alternating-sign marker added to one latent frame per segment.
// f[k] = beta * (-1)^k over channels, so the infinity norm equals beta.
struct KeyframeEmbedding {
  double beta = 0.5;
  EmbeddingPosition position = EmbeddingPosition::Begin;

  std::vector<float> pattern(int channels) const;
};

struct StreamHeader {
  uint16_t latent_height = 0;
  uint16_t latent_width = 0;
  uint16_t channels = 0;
  uint16_t segment_length = 0;  // nominal T
  uint32_t total_frames = 0;
  float beta = 0.5f;
  EmbeddingPosition position = EmbeddingPosition::Begin;
  bool has_sidecar = false;
};

// Concatenated latent segments with the embedding applied, plus an optional
// ground-truth keyframe bitmap carried as an evaluation sidecar.
struct LatentStream {
  StreamHeader header;
  std::vector<Image> frames;
  std::vector<uint8_t> keyframe_truth;  // per frame, 0/1; empty if absent
};

// Linear binary classifier over pooled latent features. The feature vector
// of a latent frame is the per-channel spatial mean followed by the
// per-channel spatial std (dim 2 * channels).
struct KeyframePredictor {
  std::vector<double> weights;
  double bias = 0.0;
  double threshold = 0.5;
  double confidence_floor = 0.6;

  static KeyframePredictor zero(int channels);
  int feature_dim() const { return int(weights.size()); }
  double probability(const Image& latent) const;
};

std::vector<double> latent_features(const Image& latent);

// Adds the embedding to each segment's marked frame (begin/end/none),
// concatenates temporally and records the ground-truth keyframe bitmap:
// segment starts for begin/none, segment ends for end.
LatentStream assemble_stream(const std::vector<LatentSegment>& latents,
                             const KeyframeEmbedding& embedding,
                             int segment_length);

struct TrainResult {
  KeyframePredictor predictor;
  double final_loss = 0.0;
  double train_accuracy = 0.0;
};

// Full-batch gradient descent on logistic regression over every latent
// frame of every stream, positives weighted by (negatives/positives).
// Deterministic given the seed (init is seeded uniform in [-0.01, 0.01]).
TrainResult train_predictor(const std::vector<const LatentStream*>& streams,
                            double learning_rate, int steps, uint64_t seed);

struct KeyframePrediction {
  std::vector<double> probabilities;
  std::vector<uint8_t> mask;  // probability > threshold
};

// Per-frame keyframe probabilities and the thresholded mask. For begin/none
// streams position 0 is forced to a keyframe (frame 0 always starts a
// segment); end-marked streams are left untouched.
KeyframePrediction predict_keyframes(const LatentStream& stream,
                                     const KeyframePredictor& predictor);

struct RecoveredSegment {
  LatentSegment latent;
  int frame_count = 0;    // frames this chunk decodes to
  bool fallback = false;  // recovered via the confidence/length fallback
};

struct RecoveredSegments {
  std::vector<RecoveredSegment> segments;

  std::vector<int> rates() const;
};

// Splits the latent sequence at mask keyframes and inverts the rate from
// each run length. Runs whose length is not a valid segment length, or
// whose boundary confidence is below the floor, adopt the previous
// segment's rate (4 for the first) and are re-split greedily; the fallback
// is total for every mask with mask[0] set.
RecoveredSegments split_and_recover(const LatentStream& stream,
                                    const std::vector<uint8_t>& mask,
                                    const std::vector<double>& probabilities,
                                    int segment_length,
                                    const CodecConfig& cfg);

// Full decode: predict keyframes, subtract the embedding from detected
// keyframe latents, split, recover rates, decode each segment, concatenate.
std::vector<Frame> decode_stream(const LatentStream& stream,
                                 const KeyframePredictor& predictor,
                                 const CodecConfig& cfg);

std::vector<uint8_t> serialize(const LatentStream& stream);
LatentStream deserialize(std::span<const uint8_t> bytes);

void write_stream(const LatentStream& stream, const std::string& path);
LatentStream read_stream(const std::string& path);

}  // namespace mtc
