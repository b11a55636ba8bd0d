/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "stream.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>

#include "bytes.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace mtc {

namespace {

constexpr char kMtcsMagic[4] = {'M', 'T', 'C', 'S'};
constexpr uint16_t kMtcsVersion = 1;

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Valid latent lengths for the nominal segment length, keyed by length.
std::map<int, int> valid_lengths(int segment_length,
                                 const std::vector<int>& analysis_rates) {
  std::map<int, int> lengths;
  for (int rate : analysis_rates) {
    if (rate >= 1 && (segment_length - 1) % rate == 0)
      lengths[1 + (segment_length - 1) / rate] = rate;
  }
  return lengths;
}

void apply_embedding(Image& frame, const std::vector<float>& pattern,
                     float sign) {
  const int c = frame.channels;
  for (size_t p = 0; p < frame.pixel_count(); ++p)
    for (int ch = 0; ch < c; ++ch)
      frame.data[p * c + ch] += sign * pattern[ch];
}

}  // namespace

EmbeddingPosition embedding_position_from_string(const std::string& name) {
  if (name == "begin") return EmbeddingPosition::Begin;
  if (name == "end") return EmbeddingPosition::End;
  if (name == "none") return EmbeddingPosition::None;
  fail(ErrorKind::InvalidArgument, "unknown embedding position: " + name);
}

std::string to_string(EmbeddingPosition position) {
  switch (position) {
    case EmbeddingPosition::Begin: return "begin";
    case EmbeddingPosition::End: return "end";
    case EmbeddingPosition::None: return "none";
  }
  return "?";
}

std::vector<float> KeyframeEmbedding::pattern(int channels) const {
  std::vector<float> f(size_t(channels));
  for (int k = 0; k < channels; ++k)
    f[k] = float(k % 2 == 0 ? beta : -beta);
  return f;
}

LatentStream assemble_stream(const std::vector<LatentSegment>& latents,
                             const KeyframeEmbedding& embedding,
                             int segment_length) {
  if (latents.empty())
    fail(ErrorKind::InvalidArgument, "no latent segments to assemble");
  const Image& first = latents.front().frames.front();
  for (const LatentSegment& seg : latents) {
    if (seg.frames.empty())
      fail(ErrorKind::InvalidArgument, "empty latent segment");
    for (const Image& z : seg.frames)
      if (!z.same_shape(first))
        fail(ErrorKind::Data, "latent segment dimensions differ");
  }

  LatentStream stream;
  stream.header.latent_height = uint16_t(first.height);
  stream.header.latent_width = uint16_t(first.width);
  stream.header.channels = uint16_t(first.channels);
  stream.header.segment_length = uint16_t(segment_length);
  stream.header.beta = float(embedding.beta);
  stream.header.position = embedding.position;
  stream.header.has_sidecar = true;

  std::vector<float> pattern = embedding.pattern(first.channels);
  for (const LatentSegment& seg : latents) {
    size_t base = stream.frames.size();
    stream.frames.insert(stream.frames.end(), seg.frames.begin(),
                         seg.frames.end());
    stream.keyframe_truth.resize(stream.frames.size(), 0);
    switch (embedding.position) {
      case EmbeddingPosition::Begin:
        apply_embedding(stream.frames[base], pattern, 1.0f);
        stream.keyframe_truth[base] = 1;
        break;
      case EmbeddingPosition::End:
        apply_embedding(stream.frames.back(), pattern, 1.0f);
        stream.keyframe_truth[stream.frames.size() - 1] = 1;
        break;
      case EmbeddingPosition::None:
        stream.keyframe_truth[base] = 1;
        break;
    }
  }
  stream.header.total_frames = uint32_t(stream.frames.size());
  return stream;
}

std::vector<double> latent_features(const Image& latent) {
  const int c = latent.channels;
  const size_t pixels = latent.pixel_count();
  std::vector<double> features(size_t(2 * c), 0.0);
  for (size_t p = 0; p < pixels; ++p)
    for (int ch = 0; ch < c; ++ch)
      features[size_t(ch)] += latent.data[p * c + ch];
  for (int ch = 0; ch < c; ++ch) features[size_t(ch)] /= double(pixels);
  for (size_t p = 0; p < pixels; ++p)
    for (int ch = 0; ch < c; ++ch) {
      double d = latent.data[p * c + ch] - features[size_t(ch)];
      features[size_t(c + ch)] += d * d;
    }
  for (int ch = 0; ch < c; ++ch)
    features[size_t(c + ch)] = std::sqrt(features[size_t(c + ch)] /
                                         double(pixels));
  return features;
}

KeyframePredictor KeyframePredictor::zero(int channels) {
  KeyframePredictor p;
  p.weights.assign(size_t(2 * channels), 0.0);
  return p;
}

double KeyframePredictor::probability(const Image& latent) const {
  std::vector<double> f = latent_features(latent);
  if (f.size() != weights.size())
    fail(ErrorKind::InvalidArgument,
         "latent channels do not match predictor feature dim");
  double z = bias;
  for (size_t i = 0; i < f.size(); ++i) z += weights[i] * f[i];
  return sigmoid(z);
}

TrainResult train_predictor(const std::vector<const LatentStream*>& streams,
                            double learning_rate, int steps, uint64_t seed) {
  if (streams.empty())
    fail(ErrorKind::InvalidArgument, "no streams to train on");
  if (learning_rate < 0.0)
    fail(ErrorKind::InvalidArgument, "learning rate must be nonnegative");

  std::vector<std::vector<double>> features;
  std::vector<int> labels;
  for (const LatentStream* stream : streams) {
    if (stream->keyframe_truth.size() != stream->frames.size())
      fail(ErrorKind::InvalidArgument,
           "stream lacks a ground-truth keyframe sidecar");
    for (size_t i = 0; i < stream->frames.size(); ++i) {
      features.push_back(latent_features(stream->frames[i]));
      labels.push_back(stream->keyframe_truth[i]);
    }
  }

  size_t positives = 0;
  for (int y : labels) positives += size_t(y);
  size_t negatives = labels.size() - positives;
  if (positives == 0)
    fail(ErrorKind::InvalidArgument, "no positive labels in training data");
  if (negatives == 0)
    fail(ErrorKind::InvalidArgument, "no negative labels in training data");
  const double positive_weight = double(negatives) / double(positives);

  const size_t dim = features.front().size();
  Rng rng(seed);
  KeyframePredictor predictor;
  predictor.weights.resize(dim);
  for (double& w : predictor.weights) w = rng.uniform(-0.01, 0.01);
  predictor.bias = rng.uniform(-0.01, 0.01);

  const size_t count = labels.size();
  double weight_total = double(negatives) + positive_weight * positives;
  std::vector<double> grad(dim);
  for (int step = 0; step < steps; ++step) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0.0;
    for (size_t i = 0; i < count; ++i) {
      double z = predictor.bias;
      for (size_t d = 0; d < dim; ++d)
        z += predictor.weights[d] * features[i][d];
      double err = sigmoid(z) - double(labels[i]);
      double sample_weight = labels[i] ? positive_weight : 1.0;
      err *= sample_weight;
      for (size_t d = 0; d < dim; ++d) grad[d] += err * features[i][d];
      grad_bias += err;
    }
    for (size_t d = 0; d < dim; ++d)
      predictor.weights[d] -= learning_rate * grad[d] / weight_total;
    predictor.bias -= learning_rate * grad_bias / weight_total;
  }

  TrainResult result;
  std::vector<double> probs(count);
  size_t correct = 0;
  double loss = 0.0;
  constexpr double eps = 1e-7;
  for (size_t i = 0; i < count; ++i) {
    double z = predictor.bias;
    for (size_t d = 0; d < dim; ++d)
      z += predictor.weights[d] * features[i][d];
    double p = std::clamp(sigmoid(z), eps, 1.0 - eps);
    probs[i] = p;
    bool predicted = p > predictor.threshold;
    correct += size_t(predicted == (labels[i] != 0));
    double sample_weight = labels[i] ? positive_weight : 1.0;
    loss -= sample_weight *
            (labels[i] ? std::log(p) : std::log(1.0 - p));
  }
  result.predictor = std::move(predictor);
  result.final_loss = loss / weight_total;
  result.train_accuracy = double(correct) / double(count);
  return result;
}

KeyframePrediction predict_keyframes(const LatentStream& stream,
                                     const KeyframePredictor& predictor) {
  if (stream.frames.empty()) fail(ErrorKind::InvalidArgument, "empty stream");
  if (predictor.feature_dim() != 2 * stream.header.channels)
    fail(ErrorKind::InvalidArgument,
         "predictor feature dim does not match stream channels");

  KeyframePrediction out;
  out.probabilities.reserve(stream.frames.size());
  out.mask.reserve(stream.frames.size());
  for (const Image& z : stream.frames) {
    double p = predictor.probability(z);
    out.probabilities.push_back(p);
    out.mask.push_back(uint8_t(p > predictor.threshold));
  }
  if (stream.header.position != EmbeddingPosition::End) out.mask[0] = 1;
  return out;
}

std::vector<int> RecoveredSegments::rates() const {
  std::vector<int> out;
  out.reserve(segments.size());
  for (const RecoveredSegment& seg : segments) out.push_back(seg.latent.rate);
  return out;
}

RecoveredSegments split_and_recover(const LatentStream& stream,
                                    const std::vector<uint8_t>& mask,
                                    const std::vector<double>& probabilities,
                                    int segment_length,
                                    const CodecConfig& cfg) {
  const size_t total = stream.frames.size();
  if (total == 0) fail(ErrorKind::InvalidArgument, "empty stream");
  if (mask.size() != total || probabilities.size() != total)
    fail(ErrorKind::InvalidArgument, "mask/probability size mismatch");
  if (!mask[0])
    fail(ErrorKind::InvalidArgument, "mask must flag frame 0 as a keyframe");

  const std::map<int, int> lengths =
      valid_lengths(segment_length, cfg.analysis_rates);

  // Detected runs: [boundary_k, boundary_k+1).
  std::vector<size_t> starts;
  for (size_t i = 0; i < total; ++i)
    if (mask[i]) starts.push_back(i);
  starts.push_back(total);

  RecoveredSegments out;
  int prev_rate = 4;  // paper-default rate for an unrecoverable first run

  auto emit = [&](size_t begin, int count, int rate, bool fallback) {
    RecoveredSegment seg;
    seg.latent.rate = rate;
    seg.latent.frames.assign(stream.frames.begin() + long(begin),
                             stream.frames.begin() + long(begin) + count);
    seg.frame_count = decoded_length(count, rate);
    seg.fallback = fallback;
    out.segments.push_back(std::move(seg));
    prev_rate = rate;
  };

  for (size_t run = 0; run + 1 < starts.size(); ++run) {
    const size_t start = starts[run];
    const int run_len = int(starts[run + 1] - start);
    auto found = lengths.find(run_len);
    const bool confident = probabilities[start] >= 0.6;
    if (found != lengths.end() && confident) {
      emit(start, run_len, found->second, false);
      continue;
    }

    // Fallback: adopt the previous segment's rate and re-split greedily to
    // valid lengths. A remainder that no valid length fits (including a
    // single latent frame) is emitted as-is and decodes to
    // (len-1)*rate + 1 frames.
    const int adopted = prev_rate;
    int rem = run_len;
    size_t pos = start;
    while (rem > 0) {
      int adopted_len = 1 + (segment_length - 1) / adopted;
      int take = 0;
      int rate = adopted;
      if (rem >= adopted_len && rem - adopted_len != 1) {
        take = adopted_len;
      } else {
        for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
          if (it->first <= rem && rem - it->first != 1) {
            take = it->first;
            rate = it->second;
            break;
          }
        }
        if (take == 0) {
          take = rem;
          rate = adopted;
        }
      }
      emit(pos, take, rate, true);
      pos += size_t(take);
      rem -= take;
    }
  }
  return out;
}

std::vector<Frame> decode_stream(const LatentStream& stream,
                                 const KeyframePredictor& predictor,
                                 const CodecConfig& cfg) {
  KeyframePrediction prediction = predict_keyframes(stream, predictor);

  // Undo the embedding wherever a keyframe was detected.
  LatentStream clean = stream;
  if (stream.header.position != EmbeddingPosition::None) {
    KeyframeEmbedding embedding;
    embedding.beta = stream.header.beta;
    embedding.position = stream.header.position;
    std::vector<float> pattern = embedding.pattern(stream.header.channels);
    for (size_t i = 0; i < clean.frames.size(); ++i)
      if (prediction.mask[i])
        apply_embedding(clean.frames[i], pattern, -1.0f);
  }

  // End-marked streams flag segment tails; boundaries start one frame later.
  std::vector<uint8_t> mask = prediction.mask;
  std::vector<double> probs = prediction.probabilities;
  if (stream.header.position == EmbeddingPosition::End) {
    std::vector<uint8_t> begin_mask(mask.size(), 0);
    std::vector<double> begin_probs(mask.size(), 0.0);
    begin_mask[0] = 1;
    begin_probs[0] = 1.0;  // frame 0 starts a segment by construction
    for (size_t i = 1; i < mask.size(); ++i) {
      begin_mask[i] = mask[i - 1];
      begin_probs[i] = probs[i - 1];
    }
    mask = std::move(begin_mask);
    probs = std::move(begin_probs);
  }

  RecoveredSegments recovered = split_and_recover(
      clean, mask, probs, stream.header.segment_length, cfg);

  std::vector<Frame> frames;
  for (const RecoveredSegment& seg : recovered.segments) {
    VideoSegment decoded =
        decode_segment(seg.latent, seg.latent.rate, cfg, seg.frame_count);
    frames.insert(frames.end(), decoded.frames.begin(), decoded.frames.end());
  }
  return frames;
}

std::vector<uint8_t> serialize(const LatentStream& stream) {
  const StreamHeader& h = stream.header;
  if (stream.frames.empty()) fail(ErrorKind::InvalidArgument, "empty stream");
  if (h.has_sidecar && stream.keyframe_truth.size() != stream.frames.size())
    fail(ErrorKind::Data, "sidecar bitmap length mismatch");

  std::string out;
  out.append(kMtcsMagic, 4);
  put_u16(out, kMtcsVersion);
  put_u16(out, h.latent_height);
  put_u16(out, h.latent_width);
  put_u16(out, h.channels);
  put_u16(out, h.segment_length);
  put_u32(out, uint32_t(stream.frames.size()));
  put_f32(out, h.beta);
  out.push_back(char(uint8_t(h.position)));
  out.push_back(char(h.has_sidecar ? 1 : 0));
  if (h.has_sidecar) {
    // 8 frames per byte, LSB first.
    std::vector<uint8_t> bitmap((stream.frames.size() + 7) / 8, 0);
    for (size_t i = 0; i < stream.keyframe_truth.size(); ++i)
      if (stream.keyframe_truth[i]) bitmap[i / 8] |= uint8_t(1u << (i % 8));
    out.append(reinterpret_cast<const char*>(bitmap.data()), bitmap.size());
  }
  for (const Image& z : stream.frames)
    for (float v : z.data) put_f32(out, v);
  return std::vector<uint8_t>(out.begin(), out.end());
}

LatentStream deserialize(std::span<const uint8_t> bytes) {
  ByteReader r(bytes.data(), bytes.size(), "stream");
  const uint8_t* magic = r.raw(4, "magic");
  if (std::memcmp(magic, kMtcsMagic, 4) != 0)
    fail(ErrorKind::Parse, "bad magic at offset 0");
  uint16_t version = r.u16("version");
  if (version != kMtcsVersion)
    fail(ErrorKind::Parse,
         "unsupported stream version " + std::to_string(version));

  LatentStream stream;
  StreamHeader& h = stream.header;
  h.latent_height = r.u16("latent height");
  h.latent_width = r.u16("latent width");
  h.channels = r.u16("channels");
  h.segment_length = r.u16("segment length");
  h.total_frames = r.u32("total frames");
  h.beta = r.f32("beta");
  uint8_t position = r.u8("position policy");
  if (position > 2)
    fail(ErrorKind::Parse, "bad position policy code " +
                               std::to_string(position) + " at offset " +
                               std::to_string(r.offset() - 1));
  h.position = EmbeddingPosition(position);
  h.has_sidecar = r.u8("sidecar flag") != 0;
  if (h.total_frames == 0 || h.latent_height == 0 || h.latent_width == 0 ||
      h.channels == 0)
    fail(ErrorKind::Parse, "zero dimension in stream header");

  size_t bitmap_bytes = h.has_sidecar ? (h.total_frames + 7) / 8 : 0;
  size_t payload = size_t(h.total_frames) * h.latent_height * h.latent_width *
                   h.channels * 4;
  if (r.remaining() != bitmap_bytes + payload)
    fail(ErrorKind::Parse,
         "payload length mismatch (expected " +
             std::to_string(bitmap_bytes + payload) + " bytes after header, " +
             "got " + std::to_string(r.remaining()) + ")");

  if (h.has_sidecar) {
    const uint8_t* bitmap = r.raw(bitmap_bytes, "sidecar bitmap");
    stream.keyframe_truth.resize(h.total_frames);
    for (size_t i = 0; i < h.total_frames; ++i)
      stream.keyframe_truth[i] = uint8_t((bitmap[i / 8] >> (i % 8)) & 1u);
  }

  stream.frames.reserve(h.total_frames);
  for (uint32_t i = 0; i < h.total_frames; ++i) {
    Image z(h.latent_height, h.latent_width, h.channels);
    for (float& v : z.data) v = r.f32("latent sample");
    stream.frames.push_back(std::move(z));
  }
  return stream;
}

void write_stream(const LatentStream& stream, const std::string& path) {
  std::vector<uint8_t> bytes = serialize(stream);
  write_file_bytes(path, bytes.data(), bytes.size());
}

LatentStream read_stream(const std::string& path) {
  std::vector<uint8_t> bytes = read_file_bytes(path);
  try {
    return deserialize(bytes);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

}  // namespace mtc
