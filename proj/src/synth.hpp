/*
 * mtc: multi-level temporal video compression
 * Seeded synthetic video generation for benchmarks and tests.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frame.hpp"

namespace mtc {

enum class SynthPattern { Static, DriftGrating, BouncingSquare, Noise, Mixed };

SynthPattern synth_pattern_from_string(const std::string& name);
std::string to_string(SynthPattern pattern);

struct SynthSpec {
  SynthPattern pattern = SynthPattern::Static;
  double speed = 1.0;          // pixels per frame
  double spatial_freq = 2.0;   // cycles per frame width
  uint64_t seed = 0;
  int height = 64;
  int width = 64;
  int channels = 3;
  int frame_count = 34;
};

// Deterministic given the spec. Static holds one seeded scene; drift-grating
// translates a sinusoid at `speed`; bouncing-square reflects off borders;
// noise redraws every frame; mixed concatenates static/slow/fast thirds.
std::vector<Frame> synth_generate(const SynthSpec& spec);

}  // namespace mtc
