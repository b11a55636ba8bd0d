/*
 * mtc: multi-level temporal video compression
 * Pixel- and latent-domain tensor types and video segmentation.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mtc {

// Row-major [y][x][channel] grid of float samples. Pixel-domain frames hold
// unit-interval values; latent grids are unconstrained (the keyframe
// embedding pushes latents outside [0,1] on purpose).
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<float> data;

  Image() = default;
  Image(int h, int w, int c, float fill = 0.0f)
      : height(h), width(w), channels(c),
        data(size_t(h) * size_t(w) * size_t(c), fill) {}

  float at(int y, int x, int ch) const {
    return data[(size_t(y) * width + x) * channels + ch];
  }
  float& at(int y, int x, int ch) {
    return data[(size_t(y) * width + x) * channels + ch];
  }

  bool same_shape(const Image& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }

  size_t sample_count() const { return data.size(); }
  size_t pixel_count() const { return size_t(height) * size_t(width); }
};

using Frame = Image;

// A fixed-length run of frames compressed as one unit.
struct VideoSegment {
  std::vector<Frame> frames;

  int length() const { return int(frames.size()); }
};

// All segments of one video plus source frame-rate metadata.
struct SegmentedVideo {
  std::vector<VideoSegment> segments;
  double fps = 25.0;

  size_t segment_count() const { return segments.size(); }
  int segment_length() const {
    return segments.empty() ? 0 : segments.front().length();
  }
};

// Temporally decimated, spatially pooled counterpart of a VideoSegment.
struct LatentSegment {
  std::vector<Image> frames;
  int rate = 0;  // nominal temporal rate this latent was encoded at

  int length() const { return int(frames.size()); }
};

// Segment lengths are 1 + 16k so every rate in {2,4,8,16} divides T-1.
bool valid_segment_length(int t);

// Throws unless frames are nonempty with uniform dimensions and every sample
// is finite and inside [0,1].
void validate_frames(const std::vector<Frame>& frames);

// Cuts frames into consecutive segments of length segment_len, dropping any
// trailing remainder. Input order is preserved.
SegmentedVideo segment_video(const std::vector<Frame>& frames, int segment_len,
                             double fps = 25.0);

// Flattens segments back to one frame list.
std::vector<Frame> concat_segments(const SegmentedVideo& video);

}  // namespace mtc
