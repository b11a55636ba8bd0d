/*
 * mtc: multi-level temporal video compression
 *
 * Copyright 2026 The mtc authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

enum class ErrorKind {
  InvalidArgument,  // bad parameters, violated preconditions
  Data,             // inconsistent or malformed in-memory data
  Io,               // filesystem failures
  Parse,            // malformed file contents
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mtc
