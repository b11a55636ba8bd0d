/*
 * mtc: multi-level temporal video compression
 * Public C API. The library plans per-segment temporal compression rates,
 * encodes videos into keyframe-marked latent streams (MTCS), recovers
 * segment boundaries and rates with a trainable keyframe predictor, and
 * runs the benchmark harness.
 *
 * Handles are opaque; every function returns MTC_OK or an error code and
 * leaves a message retrievable with mtc_last_error().
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef MTC_MTC_H
#define MTC_MTC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MTC_BUILD)
#    define MTC_API __declspec(dllexport)
#  else
#    define MTC_API __declspec(dllimport)
#  endif
#else
#  define MTC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtc_status {
  MTC_OK = 0,
  MTC_ERR_INVALID_ARGUMENT = 1,
  MTC_ERR_DATA = 2,
  MTC_ERR_IO = 3,
  MTC_ERR_PARSE = 4,
  MTC_ERR_INTERNAL = 5
} mtc_status;

/* Message for the most recent failure on this thread; empty string if none. */
MTC_API const char* mtc_last_error(void);

MTC_API const char* mtc_version(void);

/* ---- configuration ----................................................ */

typedef struct mtc_config mtc_config;

MTC_API mtc_config* mtc_config_new(void);
MTC_API void mtc_config_free(mtc_config* config);

/* Sets one option by key, e.g. ("w", "1.5") or ("rates", "4,8,16"). Keys
 * match the CLI flag names without the leading dashes. */
MTC_API mtc_status mtc_config_set(mtc_config* config, const char* key,
                                  const char* value);

/* Loads a flat "key = value" config file ('#' starts a comment). */
MTC_API mtc_status mtc_config_load_file(mtc_config* config, const char* path);

MTC_API mtc_status mtc_config_validate(const mtc_config* config);

/* ---- videos ----....................................................... */

typedef struct mtc_video mtc_video;

/* format is one of "mtcv" (raw-container), "ppm" or "pgm" (sequences). */
MTC_API mtc_status mtc_video_load(const char* path, const char* format,
                                  mtc_video** out);
MTC_API mtc_status mtc_video_save(const mtc_video* video, const char* path,
                                  const char* format);

/* Synthesizes a seeded video from the config's pattern settings. */
MTC_API mtc_status mtc_video_synth(const mtc_config* config, mtc_video** out);

MTC_API mtc_status mtc_video_info(const mtc_video* video, uint32_t* frames,
                                  uint16_t* height, uint16_t* width,
                                  uint16_t* channels);
MTC_API void mtc_video_free(mtc_video* video);

/* ---- planning ----..................................................... */

typedef struct mtc_plan mtc_plan;

MTC_API mtc_status mtc_plan_video(const mtc_config* config,
                                  const mtc_video* video, mtc_plan** out);
MTC_API mtc_status mtc_plan_segment_count(const mtc_plan* plan,
                                          uint32_t* count);
MTC_API mtc_status mtc_plan_rate(const mtc_plan* plan, uint32_t segment,
                                 uint32_t* rate);
MTC_API mtc_status mtc_plan_score(const mtc_plan* plan, double* score);
MTC_API mtc_status mtc_plan_vcpr(const mtc_plan* plan, double* value);
MTC_API void mtc_plan_free(mtc_plan* plan);

/* ---- streams ----...................................................... */

typedef struct mtc_stream mtc_stream;

/* Plans, encodes and assembles a keyframe-marked latent stream. out_plan may
 * be NULL when the plan is not needed. */
MTC_API mtc_status mtc_encode_video(const mtc_config* config,
                                    const mtc_video* video,
                                    mtc_stream** out_stream,
                                    mtc_plan** out_plan);

/* Decodes a stream back to frames. When the stream carries its ground-truth
 * sidecar, a keyframe predictor is trained on it first; otherwise boundary
 * recovery relies on the total fallback path. */
MTC_API mtc_status mtc_decode_stream(const mtc_config* config,
                                     const mtc_stream* stream,
                                     mtc_video** out);

MTC_API mtc_status mtc_stream_write(const mtc_stream* stream,
                                    const char* path);
MTC_API mtc_status mtc_stream_read(const char* path, mtc_stream** out);
MTC_API mtc_status mtc_stream_info(const mtc_stream* stream,
                                   uint32_t* latent_frames, uint16_t* height,
                                   uint16_t* width, uint16_t* channels,
                                   uint8_t* has_sidecar);

/* Drops the evaluation sidecar so the file carries latents only. */
MTC_API mtc_status mtc_stream_strip_sidecar(mtc_stream* stream);

MTC_API void mtc_stream_free(mtc_stream* stream);

/* ---- harness ----...................................................... */

/* Each runner writes its CSV (and SVG where noted) into out_dir:
 *   bench            -> bench.csv
 *   sweep-w          -> sweep_w.csv, sweep_w.svg
 *   sweep-embedding  -> sweep_embedding.csv
 *   sweep-quality    -> sweep_quality.csv
 *   scatter          -> scatter.csv, scatter.svg
 * The corpus is synthesized from the config (pattern, count, seed). */
MTC_API mtc_status mtc_run_bench(const mtc_config* config,
                                 const char* out_dir);
MTC_API mtc_status mtc_run_sweep_w(const mtc_config* config,
                                   const char* out_dir);
MTC_API mtc_status mtc_run_sweep_embedding(const mtc_config* config,
                                           const char* out_dir);
MTC_API mtc_status mtc_run_sweep_quality(const mtc_config* config,
                                         const char* out_dir);
MTC_API mtc_status mtc_run_scatter(const mtc_config* config,
                                   const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* MTC_MTC_H */
