/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace mtc {

namespace {

// Latent samples snap to the 2^-23 grid. Grid values stay exact under f32
// addition and subtraction of the keyframe marker (a multiple of 2^-23), so
// marking a latent and removing the mark later restores it bit-exactly,
// including across an f32 stream file.
constexpr double kLatentGrid = 8388608.0;  // 2^23

float snap_latent(double v) {
  return float(double(std::llround(v * kLatentGrid)) / kLatentGrid);
}

Image pool_blocks(const Frame& frame, int factor) {
  int lh = frame.height / factor;
  int lw = frame.width / factor;
  Image out(lh, lw, frame.channels);
  if (factor == 1) {
    for (size_t s = 0; s < frame.data.size(); ++s)
      out.data[s] = snap_latent(frame.data[s]);
    return out;
  }
  const double norm = 1.0 / (double(factor) * factor);
  for (int by = 0; by < lh; ++by) {
    for (int bx = 0; bx < lw; ++bx) {
      for (int ch = 0; ch < frame.channels; ++ch) {
        double sum = 0.0;
        for (int y = by * factor; y < (by + 1) * factor; ++y)
          for (int x = bx * factor; x < (bx + 1) * factor; ++x)
            sum += frame.at(y, x, ch);
        out.at(by, bx, ch) = snap_latent(sum * norm);
      }
    }
  }
  return out;
}

// Half-pixel-center sample mapping; factor 1 degenerates to the identity.
Frame upsample(const Image& latent, int factor, SpatialInterp interp,
               int out_h, int out_w) {
  if (factor == 1) return latent;
  Frame out(out_h, out_w, latent.channels);
  for (int y = 0; y < out_h; ++y) {
    double u = (y + 0.5) / factor - 0.5;
    u = std::clamp(u, 0.0, double(latent.height - 1));
    int y0 = int(u);
    int y1 = std::min(y0 + 1, latent.height - 1);
    double wy = u - y0;
    for (int x = 0; x < out_w; ++x) {
      double v = (x + 0.5) / factor - 0.5;
      v = std::clamp(v, 0.0, double(latent.width - 1));
      int x0 = int(v);
      int x1 = std::min(x0 + 1, latent.width - 1);
      double wx = v - x0;
      for (int ch = 0; ch < latent.channels; ++ch) {
        if (interp == SpatialInterp::Nearest) {
          int ny = wy < 0.5 ? y0 : y1;
          int nx = wx < 0.5 ? x0 : x1;
          out.at(y, x, ch) = latent.at(ny, nx, ch);
        } else {
          // a + w*(b-a) keeps constants bit-exact.
          double top = latent.at(y0, x0, ch) +
                       wx * (latent.at(y0, x1, ch) - latent.at(y0, x0, ch));
          double bot = latent.at(y1, x0, ch) +
                       wx * (latent.at(y1, x1, ch) - latent.at(y1, x0, ch));
          out.at(y, x, ch) = float(top + wy * (bot - top));
        }
      }
    }
  }
  return out;
}

void clamp_unit(Frame& frame) {
  for (float& v : frame.data) v = std::min(1.0f, std::max(0.0f, v));
}

}  // namespace

void CodecConfig::validate() const {
  if (spatial_factor < 1)
    fail(ErrorKind::InvalidArgument, "spatial factor must be >= 1");
  if (planner_rates.empty() || analysis_rates.empty())
    fail(ErrorKind::InvalidArgument, "rate sets must be nonempty");
  for (int rate : planner_rates) {
    if (std::find(analysis_rates.begin(), analysis_rates.end(), rate) ==
        analysis_rates.end())
      fail(ErrorKind::InvalidArgument,
           "planner rate " + std::to_string(rate) +
               " is not in the analysis rates");
  }
  for (int rate : analysis_rates)
    if (rate < 2)
      fail(ErrorKind::InvalidArgument, "rates must be >= 2");
}

LatentSegment encode_segment(const VideoSegment& segment, int rate,
                             const CodecConfig& cfg) {
  int t = segment.length();
  if (t < 2) fail(ErrorKind::InvalidArgument, "segment too short to encode");
  if (rate < 1 || (t - 1) % rate != 0)
    fail(ErrorKind::InvalidArgument,
         "rate " + std::to_string(rate) + " does not divide segment length " +
             std::to_string(t) + " minus one");
  const Frame& first = segment.frames.front();
  if (first.height % cfg.spatial_factor != 0 ||
      first.width % cfg.spatial_factor != 0)
    fail(ErrorKind::InvalidArgument,
         "spatial factor " + std::to_string(cfg.spatial_factor) +
             " does not divide frame dimensions");

  LatentSegment latent;
  latent.rate = rate;
  latent.frames.reserve(size_t(1 + (t - 1) / rate));
  for (int j = 0; j < t; j += rate)
    latent.frames.push_back(pool_blocks(segment.frames[j], cfg.spatial_factor));
  return latent;
}

VideoSegment decode_segment(const LatentSegment& latent, int rate,
                            const CodecConfig& cfg, int expected_frames) {
  int len = latent.length();
  if (len < 1) fail(ErrorKind::InvalidArgument, "empty latent segment");
  if (decoded_length(len, rate) != expected_frames)
    fail(ErrorKind::InvalidArgument,
         "rate/length mismatch: latent length " + std::to_string(len) +
             " at rate " + std::to_string(rate) + " decodes to " +
             std::to_string(decoded_length(len, rate)) + " frames, not " +
             std::to_string(expected_frames));

  int out_h = latent.frames.front().height * cfg.spatial_factor;
  int out_w = latent.frames.front().width * cfg.spatial_factor;

  std::vector<Frame> kept;
  kept.reserve(latent.frames.size());
  for (const Image& z : latent.frames)
    kept.push_back(
        upsample(z, cfg.spatial_factor, cfg.spatial_interp, out_h, out_w));

  VideoSegment out;
  out.frames.resize(size_t(expected_frames));
  for (size_t k = 0; k < kept.size(); ++k) out.frames[k * rate] = kept[k];
  for (size_t k = 0; k + 1 < kept.size(); ++k) {
    const Frame& a = kept[k];
    const Frame& b = kept[k + 1];
    for (int j = 1; j < rate; ++j) {
      Frame frame(out_h, out_w, a.channels);
      if (cfg.temporal_interp == TemporalInterp::Hold) {
        frame = a;
      } else {
        double w = double(j) / rate;
        for (size_t s = 0; s < frame.data.size(); ++s)
          frame.data[s] = float(a.data[s] + w * (b.data[s] - a.data[s]));
      }
      out.frames[k * rate + j] = std::move(frame);
    }
  }
  for (Frame& frame : out.frames) clamp_unit(frame);
  return out;
}

VideoSegment reconstruct_at_rate(const VideoSegment& segment, int rate,
                                 const CodecConfig& cfg) {
  LatentSegment latent = encode_segment(segment, rate, cfg);
  return decode_segment(latent, rate, cfg, segment.length());
}

}  // namespace mtc
