/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "rng.hpp"

namespace mtc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

float unit(double v) { return float(std::clamp(v, 0.0, 1.0)); }

// Smooth seeded background: two low-frequency sinusoids per channel with
// per-channel phase offsets small enough to keep channels correlated.
Frame background(const SynthSpec& spec, Rng& rng) {
  Frame frame(spec.height, spec.width, spec.channels);
  double fy = 1.0 + rng.uniform() * 1.5;
  double fx = 1.0 + rng.uniform() * 1.5;
  double phase = rng.uniform() * kTau;
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      for (int ch = 0; ch < spec.channels; ++ch) {
        double v = 0.5 +
                   0.2 * std::sin(kTau * fy * y / spec.height + phase +
                                  0.15 * ch) +
                   0.2 * std::sin(kTau * fx * x / spec.width + 0.5 * phase);
        frame.at(y, x, ch) = unit(v);
      }
  return frame;
}

Frame grating_frame(const SynthSpec& spec, double phase0, double shift) {
  Frame frame(spec.height, spec.width, spec.channels);
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x) {
      double arg =
          kTau * spec.spatial_freq * (double(x) - shift) / spec.width +
          phase0 + 0.3 * kTau * double(y) / spec.height;
      for (int ch = 0; ch < spec.channels; ++ch)
        frame.at(y, x, ch) = unit(0.5 + 0.4 * std::sin(arg + 0.1 * ch));
    }
  return frame;
}

std::vector<Frame> generate_static(const SynthSpec& spec) {
  Rng rng(derive_seed(spec.seed, 1));
  Frame scene = background(spec, rng);
  return std::vector<Frame>(size_t(spec.frame_count), scene);
}

std::vector<Frame> generate_drift(const SynthSpec& spec) {
  Rng rng(derive_seed(spec.seed, 2));
  double phase0 = rng.uniform() * kTau;
  std::vector<Frame> frames;
  frames.reserve(size_t(spec.frame_count));
  for (int t = 0; t < spec.frame_count; ++t)
    frames.push_back(grating_frame(spec, phase0, spec.speed * t));
  return frames;
}

std::vector<Frame> generate_bouncing(const SynthSpec& spec) {
  Rng rng(derive_seed(spec.seed, 3));
  Frame scene = background(spec, rng);
  int side = std::max(4, spec.width / 8);
  double py = rng.uniform() * (spec.height - side);
  double px = rng.uniform() * (spec.width - side);
  double vy = spec.speed * (rng.uniform() < 0.5 ? 1.0 : -1.0);
  double vx = spec.speed * (rng.uniform() < 0.5 ? 1.0 : -1.0);
  float shade = float(0.1 + 0.8 * rng.uniform());

  std::vector<Frame> frames;
  frames.reserve(size_t(spec.frame_count));
  for (int t = 0; t < spec.frame_count; ++t) {
    Frame frame = scene;
    int y0 = int(py), x0 = int(px);
    for (int y = y0; y < std::min(y0 + side, spec.height); ++y)
      for (int x = x0; x < std::min(x0 + side, spec.width); ++x)
        for (int ch = 0; ch < spec.channels; ++ch)
          frame.at(y, x, ch) = unit(shade + 0.12 * ch);
    frames.push_back(std::move(frame));

    py += vy;
    px += vx;
    if (py < 0 || py + side > spec.height) {
      vy = -vy;
      py = std::clamp(py, 0.0, double(spec.height - side));
    }
    if (px < 0 || px + side > spec.width) {
      vx = -vx;
      px = std::clamp(px, 0.0, double(spec.width - side));
    }
  }
  return frames;
}

std::vector<Frame> generate_noise(const SynthSpec& spec) {
  Rng rng(derive_seed(spec.seed, 4));
  std::vector<Frame> frames;
  frames.reserve(size_t(spec.frame_count));
  for (int t = 0; t < spec.frame_count; ++t) {
    Frame frame(spec.height, spec.width, spec.channels);
    for (float& v : frame.data) v = float(rng.uniform());
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace

SynthPattern synth_pattern_from_string(const std::string& name) {
  if (name == "static") return SynthPattern::Static;
  if (name == "drift" || name == "drift-grating") return SynthPattern::DriftGrating;
  if (name == "bounce" || name == "bouncing-square")
    return SynthPattern::BouncingSquare;
  if (name == "noise") return SynthPattern::Noise;
  if (name == "mixed") return SynthPattern::Mixed;
  fail(ErrorKind::InvalidArgument, "unknown synth pattern: " + name);
}

std::string to_string(SynthPattern pattern) {
  switch (pattern) {
    case SynthPattern::Static: return "static";
    case SynthPattern::DriftGrating: return "drift-grating";
    case SynthPattern::BouncingSquare: return "bouncing-square";
    case SynthPattern::Noise: return "noise";
    case SynthPattern::Mixed: return "mixed";
  }
  return "?";
}

std::vector<Frame> synth_generate(const SynthSpec& spec) {
  if (spec.height <= 0 || spec.width <= 0 || spec.channels < 1)
    fail(ErrorKind::InvalidArgument, "synth dimensions must be positive");
  if (spec.frame_count <= 0)
    fail(ErrorKind::InvalidArgument, "frame count must be positive");
  if (spec.speed < 0.0)
    fail(ErrorKind::InvalidArgument, "speed must be nonnegative");

  switch (spec.pattern) {
    case SynthPattern::Static: return generate_static(spec);
    case SynthPattern::DriftGrating: return generate_drift(spec);
    case SynthPattern::BouncingSquare: return generate_bouncing(spec);
    case SynthPattern::Noise: return generate_noise(spec);
    case SynthPattern::Mixed: break;
  }

  // Mixed: static, slow drift and fast thirds back to back. The fast third
  // is frame noise, the extreme of fast content.
  int third = spec.frame_count / 3;
  SynthSpec part = spec;
  part.pattern = SynthPattern::Static;
  part.frame_count = third;
  std::vector<Frame> frames = generate_static(part);
  part.frame_count = third;
  part.speed = std::min(spec.speed, 1.0);
  std::vector<Frame> slow = generate_drift(part);
  part.frame_count = spec.frame_count - 2 * third;
  std::vector<Frame> fast = generate_noise(part);
  frames.insert(frames.end(), slow.begin(), slow.end());
  frames.insert(frames.end(), fast.begin(), fast.end());
  return frames;
}

}  // namespace mtc
