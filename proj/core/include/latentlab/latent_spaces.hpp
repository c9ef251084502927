// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_LATENT_SPACES_HPP_
#define LATENTLAB_LATENT_SPACES_HPP_

#include <Eigen/Core>
#include <string>
#include <vector>

#include "latentlab/whitening.hpp"

namespace latentlab {

// Typed latent codes for the six spaces. The type carries the space; PnCode
// and PnPlusCode additionally record the whitening model that produced them.
// All codes are immutable value types.

/// Mapping-network output. One vector of the generator's style dimension.
struct WCode {
  Eigen::VectorXd values;
};

/// W after inverting the mapping network's final leaky rectifier (Eq. of the
/// slope-5 map in w_to_p).
struct PCode {
  Eigen::VectorXd values;
};

/// Whitened P. Carries the fingerprint of the model that whitened it.
struct PnCode {
  Eigen::VectorXd values;
  std::string model_fingerprint;
};

/// One independent W vector per synthesis layer.
struct WPlusCode {
  std::vector<Eigen::VectorXd> layers;

  int num_layers() const { return static_cast<int>(layers.size()); }
  int dim() const { return layers.empty() ? 0 : static_cast<int>(layers[0].size()); }
};

/// Per-layer whitened codes, all against the same model.
struct PnPlusCode {
  std::vector<Eigen::VectorXd> layers;
  std::string model_fingerprint;

  int num_layers() const { return static_cast<int>(layers.size()); }
  int dim() const { return layers.empty() ? 0 : static_cast<int>(layers[0].size()); }
};

/// Generator input noise. Rescaled to the sqrt(D) hypersphere before use,
/// matching the training-time sampling convention.
struct ZCode {
  Eigen::VectorXd values;
};

struct ZPlusCode {
  std::vector<Eigen::VectorXd> layers;

  int num_layers() const { return static_cast<int>(layers.size()); }
};

/// Elementwise x_i = w_i if w_i >= 0 else 5 w_i (inverse of the slope-0.2
/// leaky rectifier closing the mapping network).
PCode w_to_p(const WCode& w);

/// Elementwise w_i = x_i if x_i >= 0 else 0.2 x_i. Exact inverse of w_to_p.
WCode p_to_w(const PCode& x);

/// Whitens x against the model: v = diag(lambda)^{-1/2} U^T (x - mu).
PnCode p_to_pn(const PCode& x, const WhiteningModel& m);

/// Inverse whitening: x = U diag(lambda)^{1/2} v + mu. The code's recorded
/// model fingerprint must match m.
PCode pn_to_p(const PnCode& v, const WhiteningModel& m);

/// Applies w_to_p then p_to_pn independently to every layer, all against the
/// same model.
PnPlusCode wplus_to_pnplus(const WPlusCode& w, const WhiteningModel& m);

WPlusCode pnplus_to_wplus(const PnPlusCode& v, const WhiteningModel& m);

/// All `layers` layers equal to w (the W-space baseline parameterization).
WPlusCode broadcast_w(const WCode& w, int layers);

/// Squared L2 norm in the whitened space; equals the squared Mahalanobis
/// distance (x-mu)^T Sigma^{-1} (x-mu) under the fitted covariance.
double mahalanobis_sq(const PnCode& v);

/// Sum of per-layer squared norms.
double mahalanobis_sq(const PnPlusCode& v);

/// Rescales z to the sqrt(D) hypersphere. Throws on the zero vector.
Eigen::VectorXd rescale_to_sphere(const Eigen::VectorXd& z);

}  // namespace latentlab

#endif  // LATENTLAB_LATENT_SPACES_HPP_
