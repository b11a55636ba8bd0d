/*
 * mtc: multi-level temporal video compression
 * Quality and motion metrics: PSNR, SSIM, block-matching optical flow,
 * warping, the flow-guided and BCE losses, the storage-compressibility
 * proxy, and VCPR.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <vector>

#include "frame.hpp"

namespace mtc {

// Finite reporting ceiling; returned when MSE is exactly zero.
inline constexpr double kPsnrCap = 100.0;

inline constexpr int kFlowBlockSize = 8;
inline constexpr int kFlowSearchRadius = 4;

inline constexpr int kSsimWindow = 8;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

// Per-block integer displacement field from exhaustive block matching.
struct FlowField {
  int frame_height = 0;
  int frame_width = 0;
  int blocks_y = 0;
  int blocks_x = 0;
  std::vector<int> dy;  // blocks_y * blocks_x, row-major
  std::vector<int> dx;

  int block_index(int by, int bx) const { return by * blocks_x + bx; }

  // Mean |dy| + |dx| over blocks.
  double mean_magnitude() const;
};

struct FlowLoss {
  double quality = 0.0;  // warped-reconstruction L1 against the original
  double motion = 0.0;   // mean flow magnitude
  double flow = 0.0;     // quality + motion
};

// 10*log10(1/MSE) with peak 1.0 over all frames and channels, clamped to
// the 100 dB reporting cap.
double psnr(const VideoSegment& a, const VideoSegment& b);

// Windowed SSIM on the channel-mean grayscale image: 8x8 uniform window,
// stride 1, K1=0.01, K2=0.03, L=1. Mean over windows.
double ssim(const Frame& a, const Frame& b);

// Mean frame SSIM over a segment.
double ssim(const VideoSegment& a, const VideoSegment& b);

// Exhaustive SAD block matching on the grayscale images, 8x8 blocks,
// search radius 4. Displacements point from prev into next: a block whose
// content moved right by 2 pixels reports dx = +2. Ties break toward the
// smallest |dy|+|dx|, then smallest dy, then smallest dx.
FlowField estimate_flow(const Frame& prev, const Frame& next);

// Samples each pixel from (y+dy, x+dx) of its block's displacement,
// border-clamped. Zero flow is the identity, bit-exact.
Frame warp(const Frame& frame, const FlowField& flow);

// Flow-guided consistency loss over consecutive frame pairs: flow is
// estimated between consecutive reconstructed frames and used to warp the
// reconstruction onto the original's next frame.
FlowLoss flow_loss(const VideoSegment& original,
                   const VideoSegment& reconstruction);

// Mean negative log-likelihood with probabilities clamped to
// [1e-7, 1 - 1e-7].
double bce_loss(const std::vector<double>& probabilities,
                const std::vector<int>& labels);

// Storage-compression proxy: 8-bit quantized temporal residuals (frame 0
// raw) deflated with zlib; returns compressed bytes per pixel.
double compressibility(const VideoSegment& segment);

// Nominal video compression ratio: factor^2 * N / sum_i (1/c_i).
double vcpr(const std::vector<int>& rates, int spatial_factor);

}  // namespace mtc
