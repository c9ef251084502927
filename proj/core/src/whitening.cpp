// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "latentlab/whitening.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "latentlab/array_archive.hpp"
#include "latentlab/errors.hpp"
#include "latentlab/fingerprint.hpp"

namespace latentlab {
namespace {

constexpr int kChunkRows = 1024;

}  // namespace

Eigen::MatrixXd WhiteningModel::covariance() const {
  return basis * singular_values.asDiagonal() * basis.transpose();
}

void WhiteningModel::validate() const {
  const int d = dim();
  if (basis.rows() != d || basis.cols() != d ||
      singular_values.size() != d) {
    throw InvalidModelError("whitening model: inconsistent dimensions");
  }
  if ((singular_values.array() <= 0.0).any()) {
    throw InvalidModelError("whitening model: non-positive singular values");
  }
  for (int i = 0; i + 1 < d; ++i) {
    if (singular_values[i] < singular_values[i + 1]) {
      throw InvalidModelError("whitening model: singular values not descending");
    }
  }
  double ortho_err =
      (basis.transpose() * basis - Eigen::MatrixXd::Identity(d, d))
          .cwiseAbs()
          .maxCoeff();
  if (ortho_err > 1e-5) {
    throw InvalidModelError("whitening model: basis not orthonormal (err " +
                            std::to_string(ortho_err) + ")");
  }
}

void WhiteningModel::seal() {
  Fingerprinter fp;
  fp.update(mu);
  fp.update(basis);
  fp.update(singular_values);
  fp.update(generator_fingerprint);
  fingerprint_ = fp.hex();
}

WhiteningFitter::WhiteningFitter(int dim)
    : dim_(dim),
      sum_(Eigen::VectorXd::Zero(dim)),
      moment_(Eigen::MatrixXd::Zero(dim, dim)),
      chunk_(kChunkRows, dim) {
  if (dim < 1) throw InvalidInputError("whitening fitter: dim must be >= 1");
}

void WhiteningFitter::add(const Eigen::VectorXd& x) {
  if (x.size() != dim_) {
    throw DimensionMismatchError("whitening fitter: sample dim " +
                                 std::to_string(x.size()) + " != " +
                                 std::to_string(dim_));
  }
  if (!x.allFinite()) {
    throw InvalidInputError("whitening fitter: non-finite sample");
  }
  if (count_ == 0) anchor_ = x;
  chunk_.row(chunk_fill_++) = (x - anchor_).transpose();
  ++count_;
  if (chunk_fill_ == kChunkRows) flush();
}

void WhiteningFitter::flush() const {
  if (chunk_fill_ == 0) return;
  auto rows = chunk_.topRows(chunk_fill_);
  sum_ += rows.colwise().sum().transpose();
  moment_.selfadjointView<Eigen::Lower>().rankUpdate(rows.transpose(), 1.0);
  chunk_fill_ = 0;
}

WhiteningModel WhiteningFitter::fit(double ridge,
                                    const std::string& generator_fingerprint) const {
  if (ridge < 0.0) throw InvalidInputError("whitening fit: ridge must be >= 0");
  if (count_ < 2) {
    throw RankDeficiencyError("whitening fit: need at least 2 samples");
  }
  if (ridge == 0.0 && count_ <= dim_) {
    throw RankDeficiencyError(
        "whitening fit: n <= dim gives a rank-deficient covariance; "
        "supply a positive ridge or more samples");
  }
  flush();

  const double n = static_cast<double>(count_);
  Eigen::MatrixXd cov = Eigen::MatrixXd(moment_.selfadjointView<Eigen::Lower>());
  cov -= sum_ * sum_.transpose() / n;
  cov /= (n - 1.0);
  cov = 0.5 * (cov + cov.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw RankDeficiencyError("whitening fit: eigendecomposition failed");
  }

  WhiteningModel model;
  model.mu = anchor_ + sum_ / n;
  model.sample_count = count_;
  model.ridge = ridge;
  model.generator_fingerprint = generator_fingerprint;

  const int d = dim_;
  model.basis.resize(d, d);
  model.singular_values.resize(d);
  // Eigen returns ascending order; we store descending.
  for (int k = 0; k < d; ++k) {
    model.singular_values[k] = solver.eigenvalues()[d - 1 - k];
    model.basis.col(k) = solver.eigenvectors().col(d - 1 - k);
  }

  // Deterministic sign convention: the largest-magnitude entry of each
  // principal direction is positive.
  for (int k = 0; k < d; ++k) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < d; ++i) {
      double a = std::abs(model.basis(i, k));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (model.basis(arg, k) < 0.0) model.basis.col(k) = -model.basis.col(k);
  }

  if (ridge > 0.0) {
    model.singular_values = model.singular_values.cwiseMax(ridge);
  } else if ((model.singular_values.array() <= 0.0).any()) {
    throw RankDeficiencyError(
        "whitening fit: covariance spectrum touches zero; supply a ridge");
  }

  model.seal();
  return model;
}

double default_ridge_for(const Eigen::VectorXd& eigenvalues) {
  return 1e-8 * eigenvalues.sum() / static_cast<double>(eigenvalues.size());
}

void save_whitening(const WhiteningModel& model, const std::filesystem::path& path) {
  ArrayArchive archive;
  archive.manifest() = {
      {"kind", "whitening_model"},
      {"format_version", 1},
      {"ridge", model.ridge},
      {"sample_count", model.sample_count},
      {"generator_fingerprint", model.generator_fingerprint},
      {"fingerprint", model.fingerprint()},
  };
  archive.put_vector("mu", model.mu);
  archive.put_matrix("U", model.basis);
  archive.put_vector("lambda", model.singular_values);
  archive.save(path);
}

WhiteningModel load_whitening(const std::filesystem::path& path) {
  ArrayArchive archive = ArrayArchive::load(path);
  if (archive.manifest().value("kind", "") != "whitening_model") {
    throw FormatError("'" + path.string() + "' is not a whitening model");
  }
  WhiteningModel model;
  model.mu = archive.get_vector("mu");
  model.basis = archive.get_matrix("U");
  model.singular_values = archive.get_vector("lambda");
  model.ridge = archive.manifest().value("ridge", 0.0);
  model.sample_count = archive.manifest().value("sample_count", std::int64_t{0});
  model.generator_fingerprint =
      archive.manifest().value("generator_fingerprint", "");
  model.seal();
  model.validate();
  return model;
}

}  // namespace latentlab
