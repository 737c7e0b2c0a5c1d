/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NotPositive,
  TraceNotOne,
  NotTracePreserving,
  ShapeMismatch,
  NormExceedsOne,
  NotPositiveOperand,
  Domain,
  DegenerateInput,
  MissingDims,
  InvalidEnsemble,
  NotUnitary,
  NotLocalForm,
  DegenerateDirection,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmap
