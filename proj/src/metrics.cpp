/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "metrics.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace mtc {

namespace {

void require_same_dims(const VideoSegment& a, const VideoSegment& b) {
  if (a.length() != b.length())
    fail(ErrorKind::InvalidArgument,
         "segment lengths differ: " + std::to_string(a.length()) + " vs " +
             std::to_string(b.length()));
  if (a.length() == 0) fail(ErrorKind::InvalidArgument, "empty segments");
  for (int i = 0; i < a.length(); ++i)
    if (!a.frames[i].same_shape(b.frames[i]))
      fail(ErrorKind::InvalidArgument, "frame dimensions differ");
}

std::vector<double> grayscale(const Frame& frame) {
  std::vector<double> gray(frame.pixel_count());
  const int c = frame.channels;
  for (size_t p = 0; p < gray.size(); ++p) {
    double sum = 0.0;
    for (int ch = 0; ch < c; ++ch) sum += frame.data[p * c + ch];
    gray[p] = sum / c;
  }
  return gray;
}

// Summed-area table with a zero row/column on top/left.
struct Integral {
  int height, width;
  std::vector<double> sums;

  Integral(const std::vector<double>& values, int h, int w,
           const std::vector<double>* other = nullptr)
      : height(h), width(w), sums(size_t(h + 1) * (w + 1), 0.0) {
    for (int y = 0; y < h; ++y) {
      double row = 0.0;
      for (int x = 0; x < w; ++x) {
        double v = values[size_t(y) * w + x];
        if (other) v *= (*other)[size_t(y) * w + x];
        row += v;
        sums[size_t(y + 1) * (w + 1) + (x + 1)] =
            sums[size_t(y) * (w + 1) + (x + 1)] + row;
      }
    }
  }

  double window(int y, int x, int n) const {
    const int w1 = width + 1;
    return sums[size_t(y + n) * w1 + (x + n)] -
           sums[size_t(y) * w1 + (x + n)] -
           sums[size_t(y + n) * w1 + x] + sums[size_t(y) * w1 + x];
  }
};

double block_sad(const std::vector<double>& prev,
                 const std::vector<double>& next, int h, int w, int y0,
                 int y1, int x0, int x1, int dy, int dx) {
  double sad = 0.0;
  for (int y = y0; y < y1; ++y) {
    int sy = std::clamp(y + dy, 0, h - 1);
    for (int x = x0; x < x1; ++x) {
      int sx = std::clamp(x + dx, 0, w - 1);
      sad += std::abs(prev[size_t(y) * w + x] - next[size_t(sy) * w + sx]);
    }
  }
  return sad;
}

}  // namespace

double FlowField::mean_magnitude() const {
  if (dy.empty()) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < dy.size(); ++i)
    sum += std::abs(dy[i]) + std::abs(dx[i]);
  return sum / double(dy.size());
}

double psnr(const VideoSegment& a, const VideoSegment& b) {
  require_same_dims(a, b);
  double sum = 0.0;
  size_t count = 0;
  for (int i = 0; i < a.length(); ++i) {
    const Frame& fa = a.frames[i];
    const Frame& fb = b.frames[i];
    for (size_t s = 0; s < fa.data.size(); ++s) {
      double d = double(fa.data[s]) - double(fb.data[s]);
      sum += d * d;
    }
    count += fa.data.size();
  }
  double mse = sum / double(count);
  if (mse == 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

double ssim(const Frame& a, const Frame& b) {
  if (!a.same_shape(b))
    fail(ErrorKind::InvalidArgument, "frame dimensions differ");
  const int n = kSsimWindow;
  if (a.height < n || a.width < n)
    fail(ErrorKind::InvalidArgument,
         "frame smaller than the " + std::to_string(n) + "x" +
             std::to_string(n) + " SSIM window");

  std::vector<double> x = grayscale(a);
  std::vector<double> y = grayscale(b);
  const int h = a.height, w = a.width;
  Integral sx(x, h, w), sy(y, h, w);
  Integral sxx(x, h, w, &x), syy(y, h, w, &y), sxy(x, h, w, &y);

  const double c1 = (kSsimK1 * 1.0) * (kSsimK1 * 1.0);
  const double c2 = (kSsimK2 * 1.0) * (kSsimK2 * 1.0);
  const double inv_n = 1.0 / double(n * n);

  double total = 0.0;
  size_t windows = 0;
  for (int wy = 0; wy + n <= h; ++wy) {
    for (int wx = 0; wx + n <= w; ++wx) {
      double mx = sx.window(wy, wx, n) * inv_n;
      double my = sy.window(wy, wx, n) * inv_n;
      double vx = sxx.window(wy, wx, n) * inv_n - mx * mx;
      double vy = syy.window(wy, wx, n) * inv_n - my * my;
      double cov = sxy.window(wy, wx, n) * inv_n - mx * my;
      double num = (2.0 * mx * my + c1) * (2.0 * cov + c2);
      double den = (mx * mx + my * my + c1) * (vx + vy + c2);
      total += num / den;
      ++windows;
    }
  }
  return total / double(windows);
}

double ssim(const VideoSegment& a, const VideoSegment& b) {
  require_same_dims(a, b);
  double total = 0.0;
  for (int i = 0; i < a.length(); ++i) total += ssim(a.frames[i], b.frames[i]);
  return total / double(a.length());
}

FlowField estimate_flow(const Frame& prev, const Frame& next) {
  if (!prev.same_shape(next))
    fail(ErrorKind::InvalidArgument, "frame dimensions differ");
  const int h = prev.height, w = prev.width;
  const int n = kFlowBlockSize, r = kFlowSearchRadius;

  std::vector<double> p = grayscale(prev);
  std::vector<double> q = grayscale(next);

  FlowField flow;
  flow.frame_height = h;
  flow.frame_width = w;
  flow.blocks_y = (h + n - 1) / n;
  flow.blocks_x = (w + n - 1) / n;
  flow.dy.assign(size_t(flow.blocks_y) * flow.blocks_x, 0);
  flow.dx.assign(size_t(flow.blocks_y) * flow.blocks_x, 0);

  for (int by = 0; by < flow.blocks_y; ++by) {
    for (int bx = 0; bx < flow.blocks_x; ++bx) {
      int y0 = by * n, y1 = std::min(y0 + n, h);
      int x0 = bx * n, x1 = std::min(x0 + n, w);
      double best = -1.0;
      int best_dy = 0, best_dx = 0;
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
          double cost = block_sad(p, q, h, w, y0, y1, x0, x1, dy, dx);
          bool better = best < 0.0 || cost < best;
          if (!better && cost == best) {
            int cand = std::abs(dy) + std::abs(dx);
            int have = std::abs(best_dy) + std::abs(best_dx);
            better = cand < have || (cand == have && (dy < best_dy ||
                     (dy == best_dy && dx < best_dx)));
          }
          if (better) {
            best = cost;
            best_dy = dy;
            best_dx = dx;
          }
        }
      }
      flow.dy[flow.block_index(by, bx)] = best_dy;
      flow.dx[flow.block_index(by, bx)] = best_dx;
    }
  }
  return flow;
}

Frame warp(const Frame& frame, const FlowField& flow) {
  if (flow.frame_height != frame.height || flow.frame_width != frame.width)
    fail(ErrorKind::InvalidArgument, "flow grid does not match frame");
  const int n = kFlowBlockSize;
  Frame out(frame.height, frame.width, frame.channels);
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      int b = flow.block_index(y / n, x / n);
      int sy = std::clamp(y + flow.dy[b], 0, frame.height - 1);
      int sx = std::clamp(x + flow.dx[b], 0, frame.width - 1);
      for (int ch = 0; ch < frame.channels; ++ch)
        out.at(y, x, ch) = frame.at(sy, sx, ch);
    }
  }
  return out;
}

FlowLoss flow_loss(const VideoSegment& original,
                   const VideoSegment& reconstruction) {
  require_same_dims(original, reconstruction);
  if (original.length() < 2)
    fail(ErrorKind::InvalidArgument, "need at least two frames");

  FlowLoss loss;
  const int pairs = original.length() - 1;
  for (int i = 0; i < pairs; ++i) {
    const Frame& rec_next = reconstruction.frames[i + 1];
    FlowField flow = estimate_flow(reconstruction.frames[i], rec_next);
    Frame warped = warp(rec_next, flow);

    const Frame& ref = original.frames[i + 1];
    double l1 = 0.0;
    for (size_t s = 0; s < ref.data.size(); ++s)
      l1 += std::abs(double(warped.data[s]) - double(ref.data[s]));
    loss.quality += l1 / double(ref.data.size());
    loss.motion += flow.mean_magnitude();
  }
  loss.quality /= double(pairs);
  loss.motion /= double(pairs);
  loss.flow = loss.quality + loss.motion;
  return loss;
}

double bce_loss(const std::vector<double>& probabilities,
                const std::vector<int>& labels) {
  if (probabilities.size() != labels.size())
    fail(ErrorKind::InvalidArgument, "probability/label lengths differ");
  if (probabilities.empty())
    fail(ErrorKind::InvalidArgument, "empty probability list");
  constexpr double eps = 1e-7;
  double total = 0.0;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    double p = std::clamp(probabilities[i], eps, 1.0 - eps);
    total -= labels[i] ? std::log(p) : std::log(1.0 - p);
  }
  return total / double(probabilities.size());
}

double compressibility(const VideoSegment& segment) {
  if (segment.length() == 0) return 0.0;
  std::vector<uint8_t> buffer;
  buffer.reserve(segment.frames.size() * segment.frames[0].data.size());
  const Frame& first = segment.frames.front();
  for (float v : first.data)
    buffer.push_back(uint8_t(std::lround(
        std::min(1.0, std::max(0.0, double(v))) * 255.0)));
  for (size_t i = 1; i < segment.frames.size(); ++i) {
    const Frame& cur = segment.frames[i];
    const Frame& prev = segment.frames[i - 1];
    for (size_t s = 0; s < cur.data.size(); ++s) {
      double r = double(cur.data[s]) - double(prev.data[s]);  // in [-1, 1]
      buffer.push_back(uint8_t(std::lround(r * 127.5 + 127.5)));
    }
  }

  uLongf bound = compressBound(uLong(buffer.size()));
  std::vector<uint8_t> packed(bound);
  int rc = compress2(packed.data(), &bound, buffer.data(),
                     uLong(buffer.size()), 6);
  if (rc != Z_OK)
    fail(ErrorKind::Data, "deflate failed, zlib code " + std::to_string(rc));

  size_t pixels = segment.frames.size() * first.pixel_count();
  return double(bound) / double(pixels);
}

double vcpr(const std::vector<int>& rates, int spatial_factor) {
  if (rates.empty()) fail(ErrorKind::InvalidArgument, "empty plan");
  double inv = 0.0;
  for (int c : rates) {
    if (c < 1) fail(ErrorKind::InvalidArgument, "rate must be positive");
    inv += 1.0 / double(c);
  }
  return double(spatial_factor) * double(spatial_factor) *
         double(rates.size()) / inv;
}

}  // namespace mtc
