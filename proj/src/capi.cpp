/*
 * mtc: multi-level temporal video compression
 * C API implementation; thin handle wrappers around the core.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "mtc/mtc.h"

#include <exception>
#include <string>

#include "bench.hpp"
#include "config.hpp"
#include "error.hpp"
#include "frame_io.hpp"
#include "metrics.hpp"
#include "planner.hpp"
#include "rng.hpp"
#include "stream.hpp"
#include "synth.hpp"

struct mtc_config {
  mtc::RunConfig cfg;
};

struct mtc_video {
  mtc::RawVideo video;
};

struct mtc_plan {
  mtc::CompressionPlan plan;
  int spatial_factor = 8;
};

struct mtc_stream {
  mtc::LatentStream stream;
};

namespace {

thread_local std::string g_last_error;

mtc_status status_of(mtc::ErrorKind kind) {
  switch (kind) {
    case mtc::ErrorKind::InvalidArgument: return MTC_ERR_INVALID_ARGUMENT;
    case mtc::ErrorKind::Data: return MTC_ERR_DATA;
    case mtc::ErrorKind::Io: return MTC_ERR_IO;
    case mtc::ErrorKind::Parse: return MTC_ERR_PARSE;
  }
  return MTC_ERR_INTERNAL;
}

template <typename Fn>
mtc_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MTC_OK;
  } catch (const mtc::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MTC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MTC_ERR_INTERNAL;
  }
}

mtc_status invalid(const char* message) {
  g_last_error = message;
  return MTC_ERR_INVALID_ARGUMENT;
}

// Shared by encode and the plan entry point.
mtc::CompressionPlan make_plan(const mtc::RunConfig& cfg,
                               const mtc::RawVideo& video) {
  mtc::SegmentedVideo segmented =
      mtc::segment_video(video.frames, cfg.segment_length, video.fps);
  return mtc::plan_video(segmented, cfg.quality_function(), cfg.w,
                         cfg.codec());
}

}  // namespace

extern "C" {

const char* mtc_last_error(void) { return g_last_error.c_str(); }

const char* mtc_version(void) { return "1.0.0"; }

mtc_config* mtc_config_new(void) { return new mtc_config(); }

void mtc_config_free(mtc_config* config) { delete config; }

mtc_status mtc_config_set(mtc_config* config, const char* key,
                          const char* value) {
  if (!config || !key || !value) return invalid("null argument");
  return guard([&] { config->cfg.set(key, value); });
}

mtc_status mtc_config_load_file(mtc_config* config, const char* path) {
  if (!config || !path) return invalid("null argument");
  return guard([&] { config->cfg.load_file(path); });
}

mtc_status mtc_config_validate(const mtc_config* config) {
  if (!config) return invalid("null argument");
  return guard([&] { config->cfg.validate(); });
}

mtc_status mtc_video_load(const char* path, const char* format,
                          mtc_video** out) {
  if (!path || !format || !out) return invalid("null argument");
  return guard([&] {
    auto video = mtc::load_frames(path, mtc::frame_format_from_string(format));
    *out = new mtc_video{std::move(video)};
  });
}

mtc_status mtc_video_save(const mtc_video* video, const char* path,
                          const char* format) {
  if (!video || !path || !format) return invalid("null argument");
  return guard([&] {
    mtc::save_frames(video->video.frames, path,
                     mtc::frame_format_from_string(format), video->video.fps);
  });
}

mtc_status mtc_video_synth(const mtc_config* config, mtc_video** out) {
  if (!config || !out) return invalid("null argument");
  return guard([&] {
    mtc::RawVideo video;
    video.frames = mtc::synth_generate(config->cfg.synth_spec());
    video.fps = config->cfg.fps;
    *out = new mtc_video{std::move(video)};
  });
}

mtc_status mtc_video_info(const mtc_video* video, uint32_t* frames,
                          uint16_t* height, uint16_t* width,
                          uint16_t* channels) {
  if (!video) return invalid("null argument");
  const auto& f = video->video.frames;
  if (frames) *frames = uint32_t(f.size());
  if (f.empty()) {
    if (height) *height = 0;
    if (width) *width = 0;
    if (channels) *channels = 0;
    return MTC_OK;
  }
  if (height) *height = uint16_t(f.front().height);
  if (width) *width = uint16_t(f.front().width);
  if (channels) *channels = uint16_t(f.front().channels);
  return MTC_OK;
}

void mtc_video_free(mtc_video* video) { delete video; }

mtc_status mtc_plan_video(const mtc_config* config, const mtc_video* video,
                          mtc_plan** out) {
  if (!config || !video || !out) return invalid("null argument");
  return guard([&] {
    config->cfg.validate();
    auto plan = make_plan(config->cfg, video->video);
    *out = new mtc_plan{std::move(plan), config->cfg.spatial_factor};
  });
}

mtc_status mtc_plan_segment_count(const mtc_plan* plan, uint32_t* count) {
  if (!plan || !count) return invalid("null argument");
  *count = uint32_t(plan->plan.rates.size());
  return MTC_OK;
}

mtc_status mtc_plan_rate(const mtc_plan* plan, uint32_t segment,
                         uint32_t* rate) {
  if (!plan || !rate) return invalid("null argument");
  if (segment >= plan->plan.rates.size())
    return invalid("segment index out of range");
  *rate = uint32_t(plan->plan.rates[segment]);
  return MTC_OK;
}

mtc_status mtc_plan_score(const mtc_plan* plan, double* score) {
  if (!plan || !score) return invalid("null argument");
  *score = plan->plan.score;
  return MTC_OK;
}

mtc_status mtc_plan_vcpr(const mtc_plan* plan, double* value) {
  if (!plan || !value) return invalid("null argument");
  return guard(
      [&] { *value = mtc::vcpr(plan->plan.rates, plan->spatial_factor); });
}

void mtc_plan_free(mtc_plan* plan) { delete plan; }

mtc_status mtc_encode_video(const mtc_config* config, const mtc_video* video,
                            mtc_stream** out_stream, mtc_plan** out_plan) {
  if (!config || !video || !out_stream) return invalid("null argument");
  return guard([&] {
    const mtc::RunConfig& cfg = config->cfg;
    cfg.validate();
    mtc::CodecConfig codec = cfg.codec();
    mtc::SegmentedVideo segmented =
        mtc::segment_video(video->video.frames, cfg.segment_length,
                           video->video.fps);
    mtc::CompressionPlan plan =
        mtc::plan_video(segmented, cfg.quality_function(), cfg.w, codec);

    std::vector<mtc::LatentSegment> latents;
    latents.reserve(segmented.segments.size());
    for (size_t i = 0; i < segmented.segments.size(); ++i)
      latents.push_back(
          mtc::encode_segment(segmented.segments[i], plan.rates[i], codec));
    mtc::LatentStream stream = mtc::assemble_stream(
        latents, cfg.keyframe_embedding(), cfg.segment_length);
    if (!cfg.sidecar) {
      stream.header.has_sidecar = false;
      stream.keyframe_truth.clear();
    }

    *out_stream = new mtc_stream{std::move(stream)};
    if (out_plan)
      *out_plan = new mtc_plan{std::move(plan), cfg.spatial_factor};
  });
}

mtc_status mtc_decode_stream(const mtc_config* config,
                             const mtc_stream* stream, mtc_video** out) {
  if (!config || !stream || !out) return invalid("null argument");
  return guard([&] {
    const mtc::RunConfig& cfg = config->cfg;
    cfg.validate();
    const mtc::LatentStream& s = stream->stream;

    mtc::KeyframePredictor predictor =
        mtc::KeyframePredictor::zero(s.header.channels);
    if (s.header.has_sidecar &&
        s.keyframe_truth.size() == s.frames.size()) {
      mtc::TrainResult trained = mtc::train_predictor(
          {&s}, cfg.learning_rate, cfg.train_steps,
          mtc::derive_seed(cfg.seed, 0x7e57));
      predictor = std::move(trained.predictor);
    }

    mtc::RawVideo video;
    video.frames = mtc::decode_stream(s, predictor, cfg.codec());
    video.fps = cfg.fps;
    *out = new mtc_video{std::move(video)};
  });
}

mtc_status mtc_stream_write(const mtc_stream* stream, const char* path) {
  if (!stream || !path) return invalid("null argument");
  return guard([&] { mtc::write_stream(stream->stream, path); });
}

mtc_status mtc_stream_read(const char* path, mtc_stream** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] {
    auto stream = mtc::read_stream(path);
    *out = new mtc_stream{std::move(stream)};
  });
}

mtc_status mtc_stream_info(const mtc_stream* stream, uint32_t* latent_frames,
                           uint16_t* height, uint16_t* width,
                           uint16_t* channels, uint8_t* has_sidecar) {
  if (!stream) return invalid("null argument");
  const mtc::StreamHeader& h = stream->stream.header;
  if (latent_frames) *latent_frames = uint32_t(stream->stream.frames.size());
  if (height) *height = h.latent_height;
  if (width) *width = h.latent_width;
  if (channels) *channels = h.channels;
  if (has_sidecar) *has_sidecar = h.has_sidecar ? 1 : 0;
  return MTC_OK;
}

mtc_status mtc_stream_strip_sidecar(mtc_stream* stream) {
  if (!stream) return invalid("null argument");
  stream->stream.header.has_sidecar = false;
  stream->stream.keyframe_truth.clear();
  return MTC_OK;
}

void mtc_stream_free(mtc_stream* stream) { delete stream; }

mtc_status mtc_run_bench(const mtc_config* config, const char* out_dir) {
  if (!config || !out_dir) return invalid("null argument");
  return guard([&] {
    auto corpus = mtc::make_corpus(config->cfg);
    auto report = mtc::run_bench(corpus, config->cfg);
    mtc::write_bench_csv(report, std::string(out_dir) + "/bench.csv");
  });
}

mtc_status mtc_run_sweep_w(const mtc_config* config, const char* out_dir) {
  if (!config || !out_dir) return invalid("null argument");
  return guard([&] {
    auto corpus = mtc::make_corpus(config->cfg);
    auto rows = mtc::run_sweep_w(corpus, config->cfg);
    mtc::write_w_sweep_csv(rows, std::string(out_dir) + "/sweep_w.csv");
    mtc::write_w_sweep_svg(rows, std::string(out_dir) + "/sweep_w.svg");
  });
}

mtc_status mtc_run_sweep_embedding(const mtc_config* config,
                                   const char* out_dir) {
  if (!config || !out_dir) return invalid("null argument");
  return guard([&] {
    auto corpus = mtc::make_corpus(config->cfg);
    auto rows = mtc::run_sweep_embedding(corpus, config->cfg);
    mtc::write_embedding_sweep_csv(
        rows, std::string(out_dir) + "/sweep_embedding.csv");
  });
}

mtc_status mtc_run_sweep_quality(const mtc_config* config,
                                 const char* out_dir) {
  if (!config || !out_dir) return invalid("null argument");
  return guard([&] {
    auto corpus = mtc::make_corpus(config->cfg);
    auto rows = mtc::run_sweep_quality(corpus, config->cfg);
    mtc::write_quality_sweep_csv(rows,
                                 std::string(out_dir) + "/sweep_quality.csv");
  });
}

mtc_status mtc_run_scatter(const mtc_config* config, const char* out_dir) {
  if (!config || !out_dir) return invalid("null argument");
  return guard([&] {
    auto corpus = mtc::make_corpus(config->cfg);
    auto rows = mtc::run_scatter(corpus, config->cfg);
    mtc::write_scatter_csv(rows, config->cfg.analysis_rates,
                           std::string(out_dir) + "/scatter.csv");
    mtc::write_scatter_svg(rows, std::string(out_dir) + "/scatter.svg");
  });
}

}  // extern "C"
