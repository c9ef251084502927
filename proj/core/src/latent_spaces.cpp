// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "latentlab/latent_spaces.hpp"

#include <cmath>

#include "latentlab/errors.hpp"

namespace latentlab {
namespace {

// Slopes fixed by the mapping network's final activation; not configurable.
constexpr double kForwardSlope = 5.0;
constexpr double kInverseSlope = 0.2;

void require_finite(const Eigen::VectorXd& v, const char* op) {
  if (!v.allFinite()) {
    throw InvalidInputError(std::string(op) + ": non-finite input");
  }
}

void require_dim(const Eigen::VectorXd& v, const WhiteningModel& m, const char* op) {
  if (v.size() != m.dim()) {
    throw DimensionMismatchError(std::string(op) + ": code dim " +
                                 std::to_string(v.size()) + " != model dim " +
                                 std::to_string(m.dim()));
  }
}

void require_model_usable(const WhiteningModel& m, const char* op) {
  if (m.singular_values.size() == 0 ||
      (m.singular_values.array() <= 0.0).any()) {
    throw InvalidModelError(std::string(op) +
                            ": model has non-positive singular values");
  }
}

void require_fingerprint(const std::string& code_fp, const WhiteningModel& m,
                         const char* op) {
  if (code_fp != m.fingerprint()) {
    throw StaleCodeError(std::string(op) + ": code was produced by model " +
                         code_fp + " but got model " + m.fingerprint());
  }
}

}  // namespace

PCode w_to_p(const WCode& w) {
  require_finite(w.values, "w_to_p");
  PCode out;
  out.values = w.values.unaryExpr(
      [](double v) { return v >= 0.0 ? v : kForwardSlope * v; });
  return out;
}

WCode p_to_w(const PCode& x) {
  require_finite(x.values, "p_to_w");
  WCode out;
  out.values = x.values.unaryExpr(
      [](double v) { return v >= 0.0 ? v : kInverseSlope * v; });
  return out;
}

PnCode p_to_pn(const PCode& x, const WhiteningModel& m) {
  require_finite(x.values, "p_to_pn");
  require_dim(x.values, m, "p_to_pn");
  require_model_usable(m, "p_to_pn");
  PnCode out;
  out.values = m.singular_values.cwiseSqrt().cwiseInverse().asDiagonal() *
               (m.basis.transpose() * (x.values - m.mu));
  out.model_fingerprint = m.fingerprint();
  return out;
}

PCode pn_to_p(const PnCode& v, const WhiteningModel& m) {
  require_finite(v.values, "pn_to_p");
  require_dim(v.values, m, "pn_to_p");
  require_model_usable(m, "pn_to_p");
  require_fingerprint(v.model_fingerprint, m, "pn_to_p");
  PCode out;
  out.values = m.basis * (m.singular_values.cwiseSqrt().asDiagonal() * v.values) + m.mu;
  return out;
}

PnPlusCode wplus_to_pnplus(const WPlusCode& w, const WhiteningModel& m) {
  PnPlusCode out;
  out.layers.reserve(w.layers.size());
  for (const auto& layer : w.layers) {
    out.layers.push_back(p_to_pn(w_to_p(WCode{layer}), m).values);
  }
  out.model_fingerprint = m.fingerprint();
  return out;
}

WPlusCode pnplus_to_wplus(const PnPlusCode& v, const WhiteningModel& m) {
  WPlusCode out;
  out.layers.reserve(v.layers.size());
  for (const auto& layer : v.layers) {
    out.layers.push_back(
        p_to_w(pn_to_p(PnCode{layer, v.model_fingerprint}, m)).values);
  }
  return out;
}

WPlusCode broadcast_w(const WCode& w, int layers) {
  if (layers < 1) {
    throw InvalidInputError("broadcast_w: layer count must be >= 1");
  }
  WPlusCode out;
  out.layers.assign(layers, w.values);
  return out;
}

double mahalanobis_sq(const PnCode& v) { return v.values.squaredNorm(); }

double mahalanobis_sq(const PnPlusCode& v) {
  double total = 0.0;
  for (const auto& layer : v.layers) total += layer.squaredNorm();
  return total;
}

Eigen::VectorXd rescale_to_sphere(const Eigen::VectorXd& z) {
  require_finite(z, "rescale_to_sphere");
  double norm = z.norm();
  if (norm == 0.0) {
    throw InvalidInputError("rescale_to_sphere: zero vector has no direction");
  }
  return z * (std::sqrt(static_cast<double>(z.size())) / norm);
}

}  // namespace latentlab
