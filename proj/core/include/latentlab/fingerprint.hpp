// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_FINGERPRINT_HPP_
#define LATENTLAB_FINGERPRINT_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <cstring>
#include <string>

namespace latentlab {

/// Incremental FNV-1a content hash. Used to fingerprint models, generators
/// and input files so stale combinations fail loudly instead of silently.
class Fingerprinter {
 public:
  void update_bytes(const void* data, std::size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }

  void update(const std::string& s) { update_bytes(s.data(), s.size()); }

  void update(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    unsigned char le[8];
    for (int i = 0; i < 8; ++i) le[i] = static_cast<unsigned char>(bits >> (8 * i));
    update_bytes(le, 8);
  }

  void update(std::int64_t v) { update(static_cast<double>(v)); }

  void update(const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) update(v[i]);
  }

  /// Matrices hashed in row-major order regardless of storage.
  void update(const Eigen::MatrixXd& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) update(m(r, c));
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i)
      out[15 - i] = digits[(hash_ >> (4 * i)) & 0xf];
    return out;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace latentlab

#endif  // LATENTLAB_FINGERPRINT_HPP_
