// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_WHITENING_HPP_
#define LATENTLAB_WHITENING_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace latentlab {

/// Fitted mean, principal basis and per-direction variances defining the
/// whitening map v = diag(1/sqrt(lambda)) * U^T * (x - mu) and its inverse.
/// Immutable after construction; safe to share across threads.
struct WhiteningModel {
  Eigen::VectorXd mu;
  Eigen::MatrixXd basis;            // U, columns are principal directions
  Eigen::VectorXd singular_values;  // lambda, sorted descending, all > 0
  std::int64_t sample_count = 0;
  double ridge = 0.0;
  std::string generator_fingerprint;

  int dim() const { return static_cast<int>(mu.size()); }

  /// Content hash over (mu, U, lambda, generator fingerprint). Codes carry
  /// this value so using them with a different model is a detectable error.
  const std::string& fingerprint() const { return fingerprint_; }

  /// Reconstructs the fitted covariance U diag(lambda) U^T.
  Eigen::MatrixXd covariance() const;

  /// Checks orthonormality of U (tolerance 1e-5), descending lambda and
  /// positivity. Throws InvalidModelError on violation.
  void validate() const;

  /// Recomputes the content hash; called by the fitter and the loader.
  void seal();

 private:
  std::string fingerprint_;
};

/// Streaming covariance accumulator with O(dim^2) memory, so full-scale fits
/// (a million 512-dim samples) never materialize the sample matrix. Samples
/// are accumulated relative to the first one to keep the moment subtraction
/// well conditioned.
class WhiteningFitter {
 public:
  explicit WhiteningFitter(int dim);

  void add(const Eigen::VectorXd& x);
  std::int64_t count() const { return count_; }
  int dim() const { return dim_; }

  /// Eigendecomposition of the accumulated covariance (1/(n-1) normalized).
  /// With ridge == 0, requires n >= dim + 1 and a positive spectrum;
  /// otherwise eigenvalues are clamped below at `ridge`.
  WhiteningModel fit(double ridge, const std::string& generator_fingerprint) const;

 private:
  void flush() const;

  int dim_;
  std::int64_t count_ = 0;
  Eigen::VectorXd anchor_;               // first sample
  mutable Eigen::VectorXd sum_;          // sum of (x - anchor)
  mutable Eigen::MatrixXd moment_;       // sum of (x - anchor)(x - anchor)^T
  mutable Eigen::MatrixXd chunk_;        // pending rows
  mutable int chunk_fill_ = 0;
};

/// Default ridge used when the caller does not specify one:
/// 1e-8 * trace(covariance) / dim, enough to guarantee invertibility without
/// visibly perturbing the spectrum.
double default_ridge_for(const Eigen::VectorXd& eigenvalues);

void save_whitening(const WhiteningModel& model, const std::filesystem::path& path);
WhiteningModel load_whitening(const std::filesystem::path& path);

}  // namespace latentlab

#endif  // LATENTLAB_WHITENING_HPP_
