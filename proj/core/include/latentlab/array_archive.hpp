// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_ARRAY_ARCHIVE_HPP_
#define LATENTLAB_ARRAY_ARCHIVE_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace latentlab {

/// Single-file container of named, shaped, little-endian float arrays plus a
/// free-form JSON manifest. Layout:
///
///   bytes 0..7    magic "LLARCH01"
///   bytes 8..15   u64 header length (little endian)
///   header        UTF-8 JSON {"format_version", "manifest", "arrays"}
///   padding       zero bytes to the next 8-byte boundary
///   data          raw array payloads at the offsets recorded in the header
///
/// Every artifact this toolkit writes (latent archives, whitening models,
/// generator checkpoints, extractor weights) is one of these files with a
/// different manifest "kind".
class ArrayArchive {
 public:
  enum class DType { kFloat32, kFloat64 };

  struct Entry {
    DType dtype = DType::kFloat64;
    std::vector<std::int64_t> shape;
    std::vector<double> values;  // row-major, held as double in memory
    std::int64_t element_count() const;
  };

  ArrayArchive() = default;

  nlohmann::json& manifest() { return manifest_; }
  const nlohmann::json& manifest() const { return manifest_; }

  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

  void put_vector(const std::string& name, const Eigen::VectorXd& v,
                  DType dtype = DType::kFloat64);
  /// Matrices are stored row-major with shape [rows, cols].
  void put_matrix(const std::string& name, const Eigen::MatrixXd& m,
                  DType dtype = DType::kFloat64);
  void put_array(const std::string& name, std::vector<std::int64_t> shape,
                 std::vector<double> values, DType dtype = DType::kFloat64);

  const Entry& entry(const std::string& name) const;
  Eigen::VectorXd get_vector(const std::string& name) const;
  Eigen::MatrixXd get_matrix(const std::string& name) const;

  void save(const std::filesystem::path& path) const;
  static ArrayArchive load(const std::filesystem::path& path);

 private:
  nlohmann::json manifest_ = nlohmann::json::object();
  std::map<std::string, Entry> arrays_;
};

}  // namespace latentlab

#endif  // LATENTLAB_ARRAY_ARCHIVE_HPP_
