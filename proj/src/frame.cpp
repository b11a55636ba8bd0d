/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "frame.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace mtc {

bool valid_segment_length(int t) {
  return t >= 17 && (t - 1) % 16 == 0;
}

void validate_frames(const std::vector<Frame>& frames) {
  if (frames.empty()) fail(ErrorKind::InvalidArgument, "empty frame list");
  const Frame& first = frames.front();
  if (first.height <= 0 || first.width <= 0 || first.channels < 1)
    fail(ErrorKind::InvalidArgument, "frame dimensions must be positive");
  for (size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    if (!f.same_shape(first))
      fail(ErrorKind::Data,
           "frame " + std::to_string(i) + " dimensions differ from frame 0");
    for (float v : f.data) {
      if (!std::isfinite(v) || v < 0.0f || v > 1.0f)
        fail(ErrorKind::Data, "frame " + std::to_string(i) +
                                  " has a sample outside [0,1]");
    }
  }
}

SegmentedVideo segment_video(const std::vector<Frame>& frames, int segment_len,
                             double fps) {
  if (!valid_segment_length(segment_len))
    fail(ErrorKind::InvalidArgument,
         "segment length must be 1 + 16k (k >= 1), got " +
             std::to_string(segment_len));
  if (int(frames.size()) < segment_len)
    fail(ErrorKind::InvalidArgument, "input shorter than one segment");
  const Frame& first = frames.front();
  for (size_t i = 1; i < frames.size(); ++i) {
    if (!frames[i].same_shape(first))
      fail(ErrorKind::Data,
           "frame " + std::to_string(i) + " dimensions differ from frame 0");
  }

  SegmentedVideo video;
  video.fps = fps;
  size_t count = frames.size() / size_t(segment_len);
  video.segments.reserve(count);
  for (size_t s = 0; s < count; ++s) {
    VideoSegment seg;
    seg.frames.assign(frames.begin() + s * segment_len,
                      frames.begin() + (s + 1) * segment_len);
    video.segments.push_back(std::move(seg));
  }
  return video;
}

std::vector<Frame> concat_segments(const SegmentedVideo& video) {
  std::vector<Frame> out;
  for (const VideoSegment& seg : video.segments)
    out.insert(out.end(), seg.frames.begin(), seg.frames.end());
  return out;
}

}  // namespace mtc
