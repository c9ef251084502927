// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_ERRORS_HPP_
#define LATENTLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace latentlab {

/// Process exit codes used by the CLI. Library errors carry the category so
/// the tool layer can translate uniformly.
enum class ErrorCategory : int {
  kFailure = 1,       // generic failure (IO, missing file, numerical)
  kUsage = 2,         // bad arguments / preconditions violated by the caller
  kIncompatible = 3,  // artifacts that do not belong together
  kDiverged = 4,      // optimization produced a non-finite loss
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

/// Non-finite or otherwise malformed numeric input.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorCategory::kUsage, what) {}
};

/// Vector/matrix/image shapes that do not line up.
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what)
      : Error(ErrorCategory::kIncompatible, what) {}
};

/// A whitening model with non-positive scales or inconsistent contents.
class InvalidModelError : public Error {
 public:
  explicit InvalidModelError(const std::string& what)
      : Error(ErrorCategory::kIncompatible, what) {}
};

/// A latent code whose recorded model fingerprint does not match the model
/// it is being used with.
class StaleCodeError : public Error {
 public:
  explicit StaleCodeError(const std::string& what)
      : Error(ErrorCategory::kIncompatible, what) {}
};

/// Too few samples to estimate a full-rank covariance.
class RankDeficiencyError : public Error {
 public:
  explicit RankDeficiencyError(const std::string& what)
      : Error(ErrorCategory::kFailure, what) {}
};

class SingularCovarianceError : public Error {
 public:
  explicit SingularCovarianceError(const std::string& what)
      : Error(ErrorCategory::kFailure, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what)
      : Error(ErrorCategory::kFailure, what) {}
};

/// Checkpoint exists but is not in a layout this build understands.
class UnsupportedCheckpointError : public Error {
 public:
  explicit UnsupportedCheckpointError(const std::string& what)
      : Error(ErrorCategory::kIncompatible, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what)
      : Error(ErrorCategory::kFailure, what) {}
};

/// Optimization hit a non-finite loss. Carries the trace accumulated up to
/// the failing step so callers can inspect what happened.
class DivergedError : public Error {
 public:
  struct TraceRow {
    int step;
    double total;
    double perceptual;
    double pixel;
    double regularizer;
    double v_norm_sq;
  };

  DivergedError(const std::string& what, std::vector<TraceRow> trace)
      : Error(ErrorCategory::kDiverged, what), trace_(std::move(trace)) {}
  const std::vector<TraceRow>& trace() const { return trace_; }

 private:
  std::vector<TraceRow> trace_;
};

}  // namespace latentlab

#endif  // LATENTLAB_ERRORS_HPP_
