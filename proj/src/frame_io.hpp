/*
 * mtc: multi-level temporal video compression
 * Frame I/O: binary PGM/PPM sequences and the MTCV raw container.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <string>
#include <vector>

#include "frame.hpp"

namespace mtc {

enum class FrameFormat {
  PgmSequence,   // directory of binary PGM (P5), one channel
  PpmSequence,   // directory of binary PPM (P6), three channels
  RawContainer,  // single MTCV file, f32 samples
};

FrameFormat frame_format_from_string(const std::string& name);
std::string to_string(FrameFormat format);

struct RawVideo {
  std::vector<Frame> frames;
  double fps = 25.0;
};

// Loads frames from `path`. Sequence formats read every matching file in the
// directory in lexicographic filename order (a single file is also accepted);
// the raw container reads one MTCV file. 8-bit samples map to v/255.
RawVideo load_frames(const std::string& path, FrameFormat format);

// Writes frames to `path` (a directory for sequences, a file for MTCV).
// Round trip reproduces each sample within 8-bit quantization for the
// sequence formats and exactly for MTCV.
void save_frames(const std::vector<Frame>& frames, const std::string& path,
                 FrameFormat format, double fps = 25.0);

}  // namespace mtc
