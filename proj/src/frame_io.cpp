/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "frame_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "bytes.hpp"
#include "error.hpp"

namespace fs = std::filesystem;

namespace mtc {

namespace {

constexpr char kMtcvMagic[4] = {'M', 'T', 'C', 'V'};
constexpr uint16_t kMtcvVersion = 1;

uint8_t quantize(float v) {
  float clamped = std::min(1.0f, std::max(0.0f, v));
  return uint8_t(std::lround(double(clamped) * 255.0));
}

std::vector<uint8_t> read_file(const std::string& path) {
  return read_file_bytes(path);
}

void write_file(const std::string& path, const std::string& bytes) {
  write_file_bytes(path, bytes.data(), bytes.size());
}

// --- PNM (binary PGM P5 / PPM P6) ----------------------------------------

// Token scanner that tracks byte offsets so parse errors can point at the
// exact spot. Comments (# to end of line) count as whitespace.
struct PnmScanner {
  const std::vector<uint8_t>& bytes;
  const std::string& name;
  size_t pos = 0;

  void skip_space() {
    while (pos < bytes.size()) {
      uint8_t c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos;
      } else {
        break;
      }
    }
  }

  int next_int(const char* what) {
    skip_space();
    if (pos >= bytes.size())
      fail(ErrorKind::Parse, name + ": missing " + std::string(what) +
                                 " at offset " + std::to_string(pos));
    if (!isdigit(bytes[pos]))
      fail(ErrorKind::Parse, name + ": malformed " + std::string(what) +
                                 " at offset " + std::to_string(pos));
    long v = 0;
    while (pos < bytes.size() && isdigit(bytes[pos])) {
      v = v * 10 + (bytes[pos] - '0');
      if (v > 1 << 20)
        fail(ErrorKind::Parse, name + ": " + std::string(what) +
                                   " out of range at offset " +
                                   std::to_string(pos));
      ++pos;
    }
    return int(v);
  }
};

Frame load_pnm(const std::string& path, int channels) {
  std::vector<uint8_t> bytes = read_file(path);
  PnmScanner scan{bytes, path};
  const char expected_magic = channels == 1 ? '5' : '6';
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != expected_magic)
    fail(ErrorKind::Parse,
         path + ": bad magic at offset 0 (expected P" +
             std::string(1, expected_magic) + ")");
  scan.pos = 2;
  int width = scan.next_int("width");
  int height = scan.next_int("height");
  int maxval = scan.next_int("maxval");
  if (width <= 0 || height <= 0)
    fail(ErrorKind::Parse, path + ": non-positive dimensions");
  if (maxval != 255)
    fail(ErrorKind::Parse, path + ": unsupported maxval " +
                               std::to_string(maxval) + " (only 255)");
  // Exactly one whitespace byte separates the header from the raster.
  if (scan.pos >= bytes.size() || !isspace(bytes[scan.pos]))
    fail(ErrorKind::Parse, path + ": missing raster separator at offset " +
                               std::to_string(scan.pos));
  ++scan.pos;

  size_t need = size_t(width) * height * channels;
  if (bytes.size() - scan.pos < need)
    fail(ErrorKind::Parse,
         path + ": truncated raster at offset " + std::to_string(scan.pos) +
             " (expected " + std::to_string(need) + " bytes, got " +
             std::to_string(bytes.size() - scan.pos) + ")");

  Frame frame(height, width, channels);
  for (size_t i = 0; i < need; ++i)
    frame.data[i] = float(bytes[scan.pos + i]) / 255.0f;
  return frame;
}

std::string dump_pnm(const Frame& frame, int channels) {
  std::string out;
  out += channels == 1 ? "P5" : "P6";
  out += "\n" + std::to_string(frame.width) + " " +
         std::to_string(frame.height) + "\n255\n";
  out.reserve(out.size() + frame.sample_count());
  for (float v : frame.data) out.push_back(char(quantize(v)));
  return out;
}

std::vector<std::string> sequence_files(const std::string& dir,
                                        const std::string& extension) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == extension)
      names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

RawVideo load_sequence(const std::string& path, int channels,
                       const std::string& extension) {
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    files = sequence_files(path, extension);
    if (files.empty())
      fail(ErrorKind::Io, "no " + extension + " files in " + path);
  } else {
    files.push_back(path);
  }

  RawVideo video;
  video.frames.reserve(files.size());
  for (const std::string& file : files) {
    Frame frame = load_pnm(file, channels);
    if (!video.frames.empty() && !frame.same_shape(video.frames.front()))
      fail(ErrorKind::Data, file + ": dimensions differ from first frame");
    video.frames.push_back(std::move(frame));
  }
  return video;
}

void save_sequence(const std::vector<Frame>& frames, const std::string& path,
                   int channels, const std::string& extension) {
  fs::create_directories(path);
  for (size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].channels != channels)
      fail(ErrorKind::InvalidArgument,
           "frame has " + std::to_string(frames[i].channels) +
               " channels, format needs " + std::to_string(channels));
    char name[32];
    std::snprintf(name, sizeof(name), "%06zu%s", i, extension.c_str());
    write_file((fs::path(path) / name).string(),
               dump_pnm(frames[i], channels));
  }
}

// --- MTCV container -------------------------------------------------------

RawVideo load_mtcv(const std::string& path) {
  std::vector<uint8_t> bytes = read_file(path);
  ByteReader r(bytes.data(), bytes.size(), path);
  const uint8_t* magic = r.raw(4, "magic");
  if (std::memcmp(magic, kMtcvMagic, 4) != 0)
    fail(ErrorKind::Parse, path + ": bad magic at offset 0");
  uint16_t version = r.u16("version");
  if (version != kMtcvVersion)
    fail(ErrorKind::Parse, path + ": unsupported version " +
                               std::to_string(version));
  int height = r.u16("height");
  int width = r.u16("width");
  int channels = r.u16("channels");
  uint32_t count = r.u32("frame count");
  float fps = r.f32("fps");
  if (height == 0 || width == 0 || channels == 0 || count == 0)
    fail(ErrorKind::Parse, path + ": zero dimension in header");

  size_t per_frame = size_t(height) * width * channels;
  size_t need = per_frame * count * 4;
  if (r.remaining() != need)
    fail(ErrorKind::Parse, path + ": payload length mismatch (expected " +
                               std::to_string(need) + " bytes, got " +
                               std::to_string(r.remaining()) + ")");

  RawVideo video;
  video.fps = fps;
  video.frames.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    Frame frame(height, width, channels);
    for (size_t s = 0; s < per_frame; ++s) {
      float v = r.f32("sample");
      if (!std::isfinite(v) || v < 0.0f || v > 1.0f)
        fail(ErrorKind::Data, path + ": sample outside [0,1] in frame " +
                                  std::to_string(i));
      frame.data[s] = v;
    }
    video.frames.push_back(std::move(frame));
  }
  return video;
}

void save_mtcv(const std::vector<Frame>& frames, const std::string& path,
               double fps) {
  const Frame& first = frames.front();
  std::string out;
  out.append(kMtcvMagic, 4);
  put_u16(out, kMtcvVersion);
  put_u16(out, uint16_t(first.height));
  put_u16(out, uint16_t(first.width));
  put_u16(out, uint16_t(first.channels));
  put_u32(out, uint32_t(frames.size()));
  put_f32(out, float(fps));
  for (const Frame& frame : frames)
    for (float v : frame.data) put_f32(out, v);
  write_file(path, out);
}

}  // namespace

FrameFormat frame_format_from_string(const std::string& name) {
  if (name == "pgm" || name == "pgm-sequence") return FrameFormat::PgmSequence;
  if (name == "ppm" || name == "ppm-sequence") return FrameFormat::PpmSequence;
  if (name == "mtcv" || name == "raw-container")
    return FrameFormat::RawContainer;
  fail(ErrorKind::InvalidArgument, "unknown frame format: " + name);
}

std::string to_string(FrameFormat format) {
  switch (format) {
    case FrameFormat::PgmSequence: return "pgm-sequence";
    case FrameFormat::PpmSequence: return "ppm-sequence";
    case FrameFormat::RawContainer: return "raw-container";
  }
  return "?";
}

RawVideo load_frames(const std::string& path, FrameFormat format) {
  if (!fs::exists(path)) fail(ErrorKind::Io, "no such path: " + path);
  switch (format) {
    case FrameFormat::PgmSequence: return load_sequence(path, 1, ".pgm");
    case FrameFormat::PpmSequence: return load_sequence(path, 3, ".ppm");
    case FrameFormat::RawContainer: return load_mtcv(path);
  }
  fail(ErrorKind::InvalidArgument, "bad format");
}

void save_frames(const std::vector<Frame>& frames, const std::string& path,
                 FrameFormat format, double fps) {
  validate_frames(frames);
  switch (format) {
    case FrameFormat::PgmSequence: save_sequence(frames, path, 1, ".pgm"); return;
    case FrameFormat::PpmSequence: save_sequence(frames, path, 3, ".ppm"); return;
    case FrameFormat::RawContainer: save_mtcv(frames, path, fps); return;
  }
  fail(ErrorKind::InvalidArgument, "bad format");
}

}  // namespace mtc
