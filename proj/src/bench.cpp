/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "error.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace fs = std::filesystem;

namespace mtc {

namespace {

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

// RFC-4180-style quoting; our fields rarely need it.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
  auto emit = [&](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(fields[i]);
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

VideoSegment whole_video(const std::vector<Frame>& frames) {
  VideoSegment seg;
  seg.frames = frames;
  return seg;
}

VideoSegment slice_segment(const std::vector<Frame>& frames, size_t begin,
                           size_t len) {
  VideoSegment seg;
  seg.frames.assign(frames.begin() + long(begin),
                    frames.begin() + long(begin + len));
  return seg;
}

double content_flow(const VideoSegment& seg) {
  if (seg.length() < 2) return 0.0;
  double total = 0.0;
  for (int i = 0; i + 1 < seg.length(); ++i)
    total += estimate_flow(seg.frames[i], seg.frames[i + 1]).mean_magnitude();
  return total / double(seg.length() - 1);
}

std::string mixed_label(size_t segment, size_t count) {
  static const char* kThirds[3] = {"static", "slow", "fast"};
  return kThirds[std::min<size_t>(2, segment * 3 / std::max<size_t>(1, count))];
}

struct SuiteEntry {
  SynthPattern pattern;
  double speed;
  double freq;
  const char* label;
};

// Pattern rotation for the standard benchmark corpus: a static anchor, a
// ladder of drift speeds that straddle the planner's w range, plus square
// motion and noise extremes.
const SuiteEntry kSuite[] = {
    {SynthPattern::Static, 0.0, 2.0, "static"},
    {SynthPattern::DriftGrating, 0.5, 1.0, "slow"},
    {SynthPattern::DriftGrating, 1.0, 2.0, "slow"},
    {SynthPattern::DriftGrating, 2.0, 1.0, "medium"},
    {SynthPattern::DriftGrating, 3.0, 2.0, "medium"},
    {SynthPattern::DriftGrating, 4.0, 1.5, "fast"},
    {SynthPattern::BouncingSquare, 2.0, 2.0, "motion"},
    {SynthPattern::Noise, 0.0, 2.0, "noise"},
};

// Everything run_bench derives per video before metrics are attached.
struct PipelineVideo {
  SegmentedVideo video;
  QualityMatrix matrix;
  AlphaStats stats;
  CompressionPlan plan;
  std::vector<double> bpp;
  std::vector<std::vector<double>> rate_psnr;  // [segment][analysis idx]
  LatentStream stream;
  double vcpr_value = 0.0;
};

PipelineVideo run_pipeline(const CorpusVideo& source, const RunConfig& cfg,
                           uint64_t video_index) {
  const CodecConfig codec = cfg.codec();
  PipelineVideo out;
  out.video = segment_video(source.frames, cfg.segment_length, source.fps);
  const size_t n = out.video.segments.size();

  out.bpp.resize(n);
  out.rate_psnr.assign(n, std::vector<double>(cfg.analysis_rates.size()));
  for (size_t i = 0; i < n; ++i) {
    const VideoSegment& seg = out.video.segments[i];
    out.bpp[i] = compressibility(seg);
    for (size_t j = 0; j < cfg.analysis_rates.size(); ++j)
      out.rate_psnr[i][j] = psnr(
          seg, reconstruct_at_rate(seg, cfg.analysis_rates[j], codec));
  }

  QualityFunction qf = cfg.quality_function();
  qf.seed = derive_seed(qf.seed, video_index);
  switch (qf.kind) {
    case QualityKind::PsnrBased: {
      out.matrix.rates = cfg.planner_rates;
      for (size_t i = 0; i < n; ++i)
        for (int rate : cfg.planner_rates) {
          size_t j = size_t(std::find(cfg.analysis_rates.begin(),
                                      cfg.analysis_rates.end(), rate) -
                            cfg.analysis_rates.begin());
          out.matrix.values.push_back(out.rate_psnr[i][j]);
        }
      out.plan = plan(out.matrix, cfg.w);
      break;
    }
    case QualityKind::Random: {
      out.matrix =
          build_quality_matrix(out.video, cfg.planner_rates, qf, codec);
      out.plan = plan(out.matrix, cfg.w);
      break;
    }
    case QualityKind::CompressibilityBased: {
      out.matrix.rates = cfg.planner_rates;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cfg.planner_rates.size(); ++j)
          out.matrix.values.push_back(-out.bpp[i]);
      out.plan.rates = tercile_rates(out.bpp);
      out.plan.weight = cfg.w;
      out.plan.score = plan_score(out.matrix, out.plan.rates, cfg.w);
      out.plan.evaluations = n;
      break;
    }
  }
  out.stats = alpha_stats(out.matrix);
  out.vcpr_value = vcpr(out.plan.rates, cfg.spatial_factor);

  std::vector<LatentSegment> latents;
  latents.reserve(n);
  for (size_t i = 0; i < n; ++i)
    latents.push_back(
        encode_segment(out.video.segments[i], out.plan.rates[i], codec));
  out.stream =
      assemble_stream(latents, cfg.keyframe_embedding(), cfg.segment_length);
  return out;
}

double balanced_accuracy(size_t tp, size_t fn, size_t tn, size_t fp) {
  double tpr = tp + fn == 0 ? 1.0 : double(tp) / double(tp + fn);
  double tnr = tn + fp == 0 ? 1.0 : double(tn) / double(tn + fp);
  return 0.5 * (tpr + tnr);
}

}  // namespace

std::vector<CorpusVideo> make_corpus(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.corpus_size <= 0)
    fail(ErrorKind::InvalidArgument, "corpus size must be positive");

  const bool suite = cfg.pattern == "suite";
  std::vector<CorpusVideo> corpus;
  corpus.reserve(size_t(cfg.corpus_size));
  for (int i = 0; i < cfg.corpus_size; ++i) {
    SynthSpec spec;
    spec.seed = derive_seed(cfg.seed, 0x1000 + uint64_t(i));
    spec.height = cfg.height;
    spec.width = cfg.width;
    spec.channels = cfg.channels;

    std::string label;
    if (suite) {
      const SuiteEntry& entry = kSuite[size_t(i) % std::size(kSuite)];
      spec.pattern = entry.pattern;
      spec.speed = entry.speed;
      spec.spatial_freq = entry.freq;
      spec.frame_count = cfg.effective_frame_count(spec.pattern);
      label = entry.label;
    } else {
      spec.pattern = synth_pattern_from_string(cfg.pattern);
      spec.speed = cfg.speed;
      spec.spatial_freq = cfg.spatial_freq;
      spec.frame_count = cfg.effective_frame_count(spec.pattern);
      label = cfg.pattern;
    }

    CorpusVideo video;
    char id[32];
    std::snprintf(id, sizeof(id), "video_%03d", i);
    video.id = id;
    video.fps = cfg.fps;
    video.frames = synth_generate(spec);

    size_t segments = video.frames.size() / size_t(cfg.segment_length);
    for (size_t s = 0; s < segments; ++s)
      video.labels.push_back(spec.pattern == SynthPattern::Mixed
                                 ? mixed_label(s, segments)
                                 : label);
    corpus.push_back(std::move(video));
  }
  return corpus;
}

BenchReport run_bench(const std::vector<CorpusVideo>& corpus,
                      const RunConfig& cfg) {
  cfg.validate();
  if (corpus.empty()) fail(ErrorKind::InvalidArgument, "empty corpus");
  const CodecConfig codec = cfg.codec();

  double bench_start = now_seconds();
  std::vector<PipelineVideo> pipeline;
  pipeline.reserve(corpus.size());
  std::vector<double> wall(corpus.size());
  for (size_t v = 0; v < corpus.size(); ++v) {
    double t0 = now_seconds();
    pipeline.push_back(run_pipeline(corpus[v], cfg, v));
    wall[v] = now_seconds() - t0;
  }

  std::vector<const LatentStream*> streams;
  for (const PipelineVideo& p : pipeline) streams.push_back(&p.stream);
  TrainResult trained = train_predictor(streams, cfg.learning_rate,
                                        cfg.train_steps,
                                        derive_seed(cfg.seed, 0x7e57));

  BenchReport report;
  report.analysis_rates = cfg.analysis_rates;
  double inv_rate_sum = 0.0;
  size_t total_segments = 0;
  double rate_sum = 0.0;
  for (size_t v = 0; v < corpus.size(); ++v) {
    PipelineVideo& p = pipeline[v];
    double t0 = now_seconds();
    std::vector<Frame> decoded = decode_stream(p.stream, trained.predictor,
                                               codec);
    wall[v] += now_seconds() - t0;

    const size_t n = p.video.segments.size();
    const size_t t = size_t(cfg.segment_length);
    std::vector<Frame> original = concat_segments(p.video);
    size_t common = std::min(original.size(), decoded.size());
    report.mean_psnr += psnr(whole_video({original.begin(),
                                          original.begin() + long(common)}),
                             whole_video({decoded.begin(),
                                          decoded.begin() + long(common)}));

    double video_ssim = 0.0;
    for (size_t i = 0; i < n; ++i) {
      BenchRow row;
      row.video_id = corpus[v].id;
      row.segment_id = int(i);
      row.label = i < corpus[v].labels.size() ? corpus[v].labels[i] : "";
      row.chosen_rate = p.plan.rates[i];
      row.rate_psnr = p.rate_psnr[i];
      row.flow_magnitude = content_flow(p.video.segments[i]);
      row.bytes_per_pixel = p.bpp[i];
      row.alpha_value = alpha(p.stats, i);
      row.vcpr_value = p.vcpr_value;

      if ((i + 1) * t <= decoded.size()) {
        VideoSegment dec = slice_segment(decoded, i * t, t);
        row.ssim_value = ssim(p.video.segments[i], dec);
        FlowLoss loss = flow_loss(p.video.segments[i], dec);
        row.loss_quality = loss.quality;
        row.loss_motion = loss.motion;
      }
      video_ssim += row.ssim_value;

      inv_rate_sum += 1.0 / double(row.chosen_rate);
      rate_sum += double(row.chosen_rate);
      ++total_segments;
      report.rows.push_back(std::move(row));
    }
    report.mean_ssim += video_ssim / double(n);
    for (size_t i = 0; i < n; ++i)
      report.rows[report.rows.size() - n + i].wall_seconds = wall[v];
  }

  report.mean_psnr /= double(corpus.size());
  report.mean_ssim /= double(corpus.size());
  report.mean_rate = rate_sum / double(total_segments);
  report.corpus_vcpr = double(cfg.spatial_factor) * cfg.spatial_factor *
                       double(total_segments) / inv_rate_sum;
  report.wall_seconds = now_seconds() - bench_start;
  return report;
}

std::vector<WSweepRow> run_sweep_w(const std::vector<CorpusVideo>& corpus,
                                   const RunConfig& cfg,
                                   const std::vector<double>& ws) {
  std::vector<WSweepRow> rows;
  for (double w : ws) {
    RunConfig sweep_cfg = cfg;
    sweep_cfg.w = w;
    BenchReport report = run_bench(corpus, sweep_cfg);
    WSweepRow row;
    row.w = w;
    row.vcpr_value = report.corpus_vcpr;
    row.mean_psnr = report.mean_psnr;
    row.mean_ssim = report.mean_ssim;
    row.mean_rate = report.mean_rate;
    rows.push_back(row);
  }
  return rows;
}

std::vector<EmbeddingSweepRow> run_sweep_embedding(
    const std::vector<CorpusVideo>& corpus, const RunConfig& cfg) {
  cfg.validate();
  if (corpus.size() < 2)
    fail(ErrorKind::InvalidArgument,
         "embedding sweep needs at least two videos for a holdout split");

  size_t train_count = size_t(std::llround(cfg.train_fraction *
                                           double(corpus.size())));
  train_count = std::clamp<size_t>(train_count, 1, corpus.size() - 1);

  std::vector<EmbeddingSweepRow> rows;
  for (const char* position : {"begin", "end", "none"}) {
    RunConfig sweep_cfg = cfg;
    sweep_cfg.embedding = position;

    std::vector<PipelineVideo> pipeline;
    pipeline.reserve(corpus.size());
    for (size_t v = 0; v < corpus.size(); ++v)
      pipeline.push_back(run_pipeline(corpus[v], sweep_cfg, v));

    std::vector<const LatentStream*> train_streams;
    for (size_t v = 0; v < train_count; ++v)
      train_streams.push_back(&pipeline[v].stream);
    TrainResult trained =
        train_predictor(train_streams, sweep_cfg.learning_rate,
                        sweep_cfg.train_steps, derive_seed(cfg.seed, 0x7e57));

    size_t tp = 0, fn = 0, tn = 0, fp = 0;
    for (size_t v = train_count; v < corpus.size(); ++v) {
      const LatentStream& stream = pipeline[v].stream;
      KeyframePrediction pred = predict_keyframes(stream, trained.predictor);
      for (size_t i = 0; i < stream.frames.size(); ++i) {
        bool truth = stream.keyframe_truth[i] != 0;
        bool guess = pred.mask[i] != 0;
        if (truth && guess) ++tp;
        else if (truth) ++fn;
        else if (guess) ++fp;
        else ++tn;
      }
    }

    EmbeddingSweepRow row;
    row.position = position;
    row.train_accuracy = trained.train_accuracy;
    row.holdout_balanced_accuracy = balanced_accuracy(tp, fn, tn, fp);
    row.final_loss = trained.final_loss;
    rows.push_back(row);
  }
  return rows;
}

std::vector<QualitySweepRow> run_sweep_quality(
    const std::vector<CorpusVideo>& corpus, const RunConfig& cfg) {
  std::vector<QualitySweepRow> rows;
  for (const char* kind : {"random", "compress", "psnr"}) {
    RunConfig sweep_cfg = cfg;
    sweep_cfg.quality = kind;
    BenchReport report = run_bench(corpus, sweep_cfg);
    QualitySweepRow row;
    row.kind = kind;
    row.mean_psnr = report.mean_psnr;
    row.mean_ssim = report.mean_ssim;
    row.vcpr_value = report.corpus_vcpr;
    row.wall_seconds = report.wall_seconds;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScatterRow> run_scatter(const std::vector<CorpusVideo>& corpus,
                                    const RunConfig& cfg) {
  cfg.validate();
  if (corpus.empty()) fail(ErrorKind::InvalidArgument, "empty corpus");
  if (cfg.analysis_rates.size() < 2)
    fail(ErrorKind::InvalidArgument, "scatter needs at least two rates");
  const CodecConfig codec = cfg.codec();

  std::vector<ScatterRow> rows;
  for (const CorpusVideo& source : corpus) {
    SegmentedVideo video =
        segment_video(source.frames, cfg.segment_length, source.fps);
    for (size_t i = 0; i < video.segments.size(); ++i) {
      const VideoSegment& seg = video.segments[i];
      ScatterRow row;
      row.video_id = source.id;
      row.segment_id = int(i);
      row.label = i < source.labels.size() ? source.labels[i] : "";
      for (int rate : cfg.analysis_rates)
        row.rate_psnr.push_back(
            psnr(seg, reconstruct_at_rate(seg, rate, codec)));

      double mean = std::accumulate(row.rate_psnr.begin(),
                                    row.rate_psnr.end(), 0.0) /
                    double(row.rate_psnr.size());
      double var = 0.0;
      for (double v : row.rate_psnr) var += (v - mean) * (v - mean);
      row.psnr_std = std::sqrt(var / double(row.rate_psnr.size()));

      row.flow_magnitude = content_flow(seg);
      row.bytes_per_pixel = compressibility(seg);
      // Adjacent-rate tolerance rule on the two smallest analysis rates.
      row.orange = row.rate_psnr[1] >= row.rate_psnr[0] - 0.5;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(const BenchReport& report, const std::string& path) {
  std::vector<std::string> header = {"video_id", "segment_id", "label",
                                     "chosen_rate"};
  for (int rate : report.analysis_rates)
    header.push_back("psnr_r" + std::to_string(rate));
  for (const char* name :
       {"ssim", "flow_magnitude", "loss_quality", "loss_motion",
        "bytes_per_pixel", "alpha", "vcpr", "wall_seconds"})
    header.push_back(name);

  std::vector<std::vector<std::string>> rows;
  for (const BenchRow& row : report.rows) {
    std::vector<std::string> fields = {row.video_id,
                                       std::to_string(row.segment_id),
                                       row.label,
                                       std::to_string(row.chosen_rate)};
    for (double v : row.rate_psnr) fields.push_back(fmt(v));
    fields.push_back(fmt(row.ssim_value));
    fields.push_back(fmt(row.flow_magnitude));
    fields.push_back(fmt(row.loss_quality));
    fields.push_back(fmt(row.loss_motion));
    fields.push_back(fmt(row.bytes_per_pixel));
    fields.push_back(fmt(row.alpha_value));
    fields.push_back(fmt(row.vcpr_value, 4));
    fields.push_back(fmt(row.wall_seconds, 4));
    rows.push_back(std::move(fields));
  }
  write_csv(path, header, rows);
}

void write_w_sweep_csv(const std::vector<WSweepRow>& rows,
                       const std::string& path) {
  std::vector<std::vector<std::string>> out;
  for (const WSweepRow& row : rows)
    out.push_back({fmt(row.w, 2), fmt(row.vcpr_value, 4), fmt(row.mean_psnr),
                   fmt(row.mean_ssim), fmt(row.mean_rate, 4)});
  write_csv(path, {"w", "vcpr", "mean_psnr", "mean_ssim", "mean_rate"}, out);
}

void write_embedding_sweep_csv(const std::vector<EmbeddingSweepRow>& rows,
                               const std::string& path) {
  std::vector<std::vector<std::string>> out;
  for (const EmbeddingSweepRow& row : rows)
    out.push_back({row.position, fmt(row.train_accuracy),
                   fmt(row.holdout_balanced_accuracy), fmt(row.final_loss)});
  write_csv(path,
            {"position", "train_accuracy", "holdout_balanced_accuracy",
             "final_loss"},
            out);
}

void write_quality_sweep_csv(const std::vector<QualitySweepRow>& rows,
                             const std::string& path) {
  std::vector<std::vector<std::string>> out;
  for (const QualitySweepRow& row : rows)
    out.push_back({row.kind, fmt(row.mean_psnr), fmt(row.mean_ssim),
                   fmt(row.vcpr_value, 4), fmt(row.wall_seconds, 4)});
  write_csv(path, {"kind", "mean_psnr", "mean_ssim", "vcpr", "wall_seconds"},
            out);
}

void write_scatter_csv(const std::vector<ScatterRow>& rows,
                       const std::vector<int>& analysis_rates,
                       const std::string& path) {
  std::vector<std::string> header = {"video_id", "segment_id", "label"};
  for (int rate : analysis_rates)
    header.push_back("psnr_r" + std::to_string(rate));
  for (const char* name :
       {"psnr_std", "flow_magnitude", "bytes_per_pixel", "color"})
    header.push_back(name);

  std::vector<std::vector<std::string>> out;
  for (const ScatterRow& row : rows) {
    std::vector<std::string> fields = {row.video_id,
                                       std::to_string(row.segment_id),
                                       row.label};
    for (double v : row.rate_psnr) fields.push_back(fmt(v));
    fields.push_back(fmt(row.psnr_std));
    fields.push_back(fmt(row.flow_magnitude));
    fields.push_back(fmt(row.bytes_per_pixel));
    fields.push_back(row.orange ? "orange" : "blue");
    out.push_back(std::move(fields));
  }
  write_csv(path, header, out);
}

namespace {

struct SvgCanvas {
  std::string body;
  double width = 640, height = 480;
  double margin = 56;

  double map_x(double v, double lo, double hi) const {
    double span = hi > lo ? hi - lo : 1.0;
    return margin + (v - lo) / span * (width - 2 * margin);
  }
  double map_y(double v, double lo, double hi) const {
    double span = hi > lo ? hi - lo : 1.0;
    return height - margin - (v - lo) / span * (height - 2 * margin);
  }

  void axes(const std::string& x_label, const std::string& y_label,
            double x_lo, double x_hi, double y_lo, double y_hi) {
    char buf[512];
    std::snprintf(
        buf, sizeof(buf),
        "<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='black'/>"
        "<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='black'/>",
        margin, height - margin, width - margin, height - margin, margin,
        margin, margin, height - margin);
    body += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x='%.1f' y='%.1f' font-size='13'>%s</text>"
                  "<text x='%.1f' y='%.1f' font-size='13' "
                  "transform='rotate(-90 14 %.1f)'>%s</text>",
                  width / 2 - 40, height - 14, x_label.c_str(), 14.0,
                  height / 2, height / 2, y_label.c_str());
    body += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x='%.1f' y='%.1f' font-size='11'>%.3g</text>"
                  "<text x='%.1f' y='%.1f' font-size='11'>%.3g</text>"
                  "<text x='%.1f' y='%.1f' font-size='11'>%.3g</text>"
                  "<text x='%.1f' y='%.1f' font-size='11'>%.3g</text>",
                  margin - 6, height - margin + 16, x_lo, width - margin - 12,
                  height - margin + 16, x_hi, margin - 42, height - margin + 4,
                  y_lo, margin - 42, margin + 4, y_hi);
    body += buf;
  }

  void circle(double x, double y, const char* color) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<circle cx='%.1f' cy='%.1f' r='3.2' fill='%s' "
                  "fill-opacity='0.75'/>",
                  x, y, color);
    body += buf;
  }

  void save(const std::string& path) const {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
        << "' height='" << height << "'>\n<rect width='100%' height='100%' "
        << "fill='white'/>\n"
        << body << "\n</svg>\n";
  }
};

}  // namespace

void write_scatter_svg(const std::vector<ScatterRow>& rows,
                       const std::string& path) {
  SvgCanvas svg;
  double x_hi = 0.1, y_hi = 0.1;
  for (const ScatterRow& row : rows) {
    x_hi = std::max(x_hi, row.flow_magnitude);
    y_hi = std::max(y_hi, row.bytes_per_pixel);
  }
  svg.axes("mean flow magnitude", "bytes per pixel", 0.0, x_hi, 0.0, y_hi);
  for (const ScatterRow& row : rows)
    svg.circle(svg.map_x(row.flow_magnitude, 0.0, x_hi),
               svg.map_y(row.bytes_per_pixel, 0.0, y_hi),
               row.orange ? "#ff7f0e" : "#1f77b4");
  svg.save(path);
}

void write_w_sweep_svg(const std::vector<WSweepRow>& rows,
                       const std::string& path) {
  SvgCanvas svg;
  double x_lo = rows.front().w, x_hi = rows.back().w;
  double y_hi = 0.1;
  for (const WSweepRow& row : rows) y_hi = std::max(y_hi, row.vcpr_value);
  svg.axes("w", "VCPR", x_lo, x_hi, 0.0, y_hi);
  std::string points;
  char buf[64];
  for (const WSweepRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.1f,%.1f ",
                  svg.map_x(row.w, x_lo, x_hi),
                  svg.map_y(row.vcpr_value, 0.0, y_hi));
    points += buf;
  }
  svg.body += "<polyline fill='none' stroke='#1f77b4' stroke-width='2' "
              "points='" + points + "'/>";
  for (const WSweepRow& row : rows)
    svg.circle(svg.map_x(row.w, x_lo, x_hi),
               svg.map_y(row.vcpr_value, 0.0, y_hi), "#1f77b4");
  svg.save(path);
}

}  // namespace mtc
