/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace mtc {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, key + ": bad integer '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, key + ": bad number '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  fail(ErrorKind::InvalidArgument, key + ": bad boolean '" + value + "'");
}

}  // namespace

std::vector<int> parse_rate_list(const std::string& text) {
  std::vector<int> rates;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    rates.push_back(int(parse_u64("rates", item)));
  }
  if (rates.empty())
    fail(ErrorKind::InvalidArgument, "empty rate list: '" + text + "'");
  std::sort(rates.begin(), rates.end());
  return rates;
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::Parse, path + ":" + std::to_string(lineno) +
                                 ": expected 'key = value'");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "seed") seed = parse_u64(key, value);
  else if (key == "w") w = parse_double(key, value);
  else if (key == "rates") planner_rates = parse_rate_list(value);
  else if (key == "analysis-rates") analysis_rates = parse_rate_list(value);
  else if (key == "spatial-factor") spatial_factor = int(parse_u64(key, value));
  else if (key == "segment-len") segment_length = int(parse_u64(key, value));
  else if (key == "quality") quality = value;
  else if (key == "embedding") embedding = value;
  else if (key == "beta") beta = parse_double(key, value);
  else if (key == "temporal-interp") temporal_interp = value;
  else if (key == "spatial-interp") spatial_interp = value;
  else if (key == "lr") learning_rate = parse_double(key, value);
  else if (key == "steps") train_steps = int(parse_u64(key, value));
  else if (key == "train-frac") train_fraction = parse_double(key, value);
  else if (key == "pattern") pattern = value;
  else if (key == "speed") speed = parse_double(key, value);
  else if (key == "spatial-freq") spatial_freq = parse_double(key, value);
  else if (key == "width") width = int(parse_u64(key, value));
  else if (key == "height") height = int(parse_u64(key, value));
  else if (key == "channels") channels = int(parse_u64(key, value));
  else if (key == "frames") frame_count = int(parse_u64(key, value));
  else if (key == "count") corpus_size = int(parse_u64(key, value));
  else if (key == "fps") fps = parse_double(key, value);
  else if (key == "sidecar") sidecar = parse_bool(key, value);
  else fail(ErrorKind::InvalidArgument, "unknown config key: " + key);
}

void RunConfig::validate() const {
  if (!valid_segment_length(segment_length))
    fail(ErrorKind::InvalidArgument,
         "segment-len must be 1 + 16k (k >= 1), got " +
             std::to_string(segment_length));
  codec().validate();
  quality_kind_from_string(quality);
  embedding_position_from_string(embedding);
  if (pattern != "suite") synth_pattern_from_string(pattern);
  if (w < 0.0) fail(ErrorKind::InvalidArgument, "w must be nonnegative");
  if (train_fraction <= 0.0 || train_fraction >= 1.0)
    fail(ErrorKind::InvalidArgument, "train-frac must be in (0,1)");
  for (int rate : analysis_rates)
    if ((segment_length - 1) % rate != 0)
      fail(ErrorKind::InvalidArgument,
           "rate " + std::to_string(rate) + " does not divide segment-len" +
               " minus one");
}

CodecConfig RunConfig::codec() const {
  CodecConfig cfg;
  cfg.spatial_factor = spatial_factor;
  cfg.planner_rates = planner_rates;
  cfg.analysis_rates = analysis_rates;
  if (temporal_interp == "linear") cfg.temporal_interp = TemporalInterp::Linear;
  else if (temporal_interp == "hold") cfg.temporal_interp = TemporalInterp::Hold;
  else fail(ErrorKind::InvalidArgument,
            "unknown temporal-interp: " + temporal_interp);
  if (spatial_interp == "bilinear") cfg.spatial_interp = SpatialInterp::Bilinear;
  else if (spatial_interp == "nearest") cfg.spatial_interp = SpatialInterp::Nearest;
  else fail(ErrorKind::InvalidArgument,
            "unknown spatial-interp: " + spatial_interp);
  return cfg;
}

QualityFunction RunConfig::quality_function() const {
  QualityFunction q;
  q.kind = quality_kind_from_string(quality);
  q.seed = derive_seed(seed, 0x5eed);
  return q;
}

KeyframeEmbedding RunConfig::keyframe_embedding() const {
  KeyframeEmbedding emb;
  emb.beta = beta;
  emb.position = embedding_position_from_string(embedding);
  return emb;
}

int RunConfig::effective_frame_count(SynthPattern p) const {
  if (frame_count > 0) return frame_count;
  int segments = p == SynthPattern::Mixed ? 3 : 2;
  return segments * segment_length;
}

SynthSpec RunConfig::synth_spec() const {
  SynthSpec spec;
  spec.pattern = synth_pattern_from_string(pattern);
  spec.speed = speed;
  spec.spatial_freq = spatial_freq;
  spec.seed = seed;
  spec.height = height;
  spec.width = width;
  spec.channels = channels;
  spec.frame_count = effective_frame_count(spec.pattern);
  return spec;
}

}  // namespace mtc
