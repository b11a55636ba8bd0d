/*
 * mtc: multi-level temporal video compression
 * Little-endian byte packing shared by the file formats.
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "error.hpp"

namespace mtc {

inline std::vector<uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorKind::Io, "read failed for " + path);
  return bytes;
}

inline void write_file_bytes(const std::string& path,
                             const void* data, size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
  out.write(static_cast<const char*>(data), std::streamsize(size));
  out.flush();
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

inline void put_u16(std::string& out, uint16_t v) {
  out.push_back(char(v & 0xff));
  out.push_back(char(v >> 8));
}

inline void put_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_f32(std::string& out, float v) {
  put_u32(out, std::bit_cast<uint32_t>(v));
}

// Cursor over a byte buffer; every read reports the offset on truncation.
class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t size, std::string name)
      : data_(data), size_(size), name_(std::move(name)) {}

  size_t offset() const { return pos_; }
  size_t remaining() const { return size_ - pos_; }

  void need(size_t n, const char* what) const {
    if (pos_ + n > size_)
      fail(ErrorKind::Parse, name_ + ": truncated reading " + what +
                                 " at offset " + std::to_string(pos_) +
                                 " (need " + std::to_string(n) + " bytes, " +
                                 std::to_string(size_ - pos_) + " left)");
  }

  uint8_t u8(const char* what) {
    need(1, what);
    return data_[pos_++];
  }

  uint16_t u16(const char* what) {
    need(2, what);
    uint16_t v = uint16_t(uint16_t(data_[pos_]) | uint16_t(data_[pos_ + 1]) << 8);
    pos_ += 2;
    return v;
  }

  uint32_t u32(const char* what) {
    need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(data_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }

  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }

  const uint8_t* raw(size_t n, const char* what) {
    need(n, what);
    const uint8_t* p = data_ + pos_;
    pos_ += n;
    return p;
  }

 private:
  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;
  std::string name_;
};

}  // namespace mtc
