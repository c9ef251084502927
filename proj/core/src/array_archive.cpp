// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "latentlab/array_archive.hpp"

#include <cstring>
#include <fstream>

#include "latentlab/errors.hpp"

namespace latentlab {
namespace {

constexpr char kMagic[8] = {'L', 'L', 'A', 'R', 'C', 'H', '0', '1'};
constexpr int kFormatVersion = 1;

std::string dtype_name(ArrayArchive::DType d) {
  return d == ArrayArchive::DType::kFloat32 ? "f32" : "f64";
}

ArrayArchive::DType dtype_from_name(const std::string& s) {
  if (s == "f32") return ArrayArchive::DType::kFloat32;
  if (s == "f64") return ArrayArchive::DType::kFloat64;
  throw FormatError("array archive: unknown dtype '" + s + "'");
}

std::size_t dtype_size(ArrayArchive::DType d) {
  return d == ArrayArchive::DType::kFloat32 ? 4 : 8;
}

void append_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t read_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

std::int64_t ArrayArchive::Entry::element_count() const {
  std::int64_t n = 1;
  for (std::int64_t s : shape) n *= s;
  return n;
}

bool ArrayArchive::has(const std::string& name) const {
  return arrays_.count(name) > 0;
}

std::vector<std::string> ArrayArchive::names() const {
  std::vector<std::string> out;
  out.reserve(arrays_.size());
  for (const auto& [k, v] : arrays_) out.push_back(k);
  return out;
}

void ArrayArchive::put_vector(const std::string& name, const Eigen::VectorXd& v,
                              DType dtype) {
  put_array(name, {v.size()}, std::vector<double>(v.data(), v.data() + v.size()),
            dtype);
}

void ArrayArchive::put_matrix(const std::string& name, const Eigen::MatrixXd& m,
                              DType dtype) {
  std::vector<double> values(static_cast<std::size_t>(m.size()));
  // row-major on disk
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      values[static_cast<std::size_t>(r) * m.cols() + c] = m(r, c);
  put_array(name, {m.rows(), m.cols()}, std::move(values), dtype);
}

void ArrayArchive::put_array(const std::string& name,
                             std::vector<std::int64_t> shape,
                             std::vector<double> values, DType dtype) {
  Entry e;
  e.dtype = dtype;
  e.shape = std::move(shape);
  e.values = std::move(values);
  if (e.element_count() != static_cast<std::int64_t>(e.values.size())) {
    throw InvalidInputError("array archive: shape does not match value count for '" +
                            name + "'");
  }
  arrays_[name] = std::move(e);
}

const ArrayArchive::Entry& ArrayArchive::entry(const std::string& name) const {
  auto it = arrays_.find(name);
  if (it == arrays_.end()) {
    throw NotFoundError("array archive: no array named '" + name + "'");
  }
  return it->second;
}

Eigen::VectorXd ArrayArchive::get_vector(const std::string& name) const {
  const Entry& e = entry(name);
  if (e.shape.size() != 1) {
    throw FormatError("array archive: '" + name + "' is not rank-1");
  }
  return Eigen::Map<const Eigen::VectorXd>(e.values.data(), e.values.size());
}

Eigen::MatrixXd ArrayArchive::get_matrix(const std::string& name) const {
  const Entry& e = entry(name);
  if (e.shape.size() != 2) {
    throw FormatError("array archive: '" + name + "' is not rank-2");
  }
  Eigen::MatrixXd m(e.shape[0], e.shape[1]);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      m(r, c) = e.values[static_cast<std::size_t>(r) * m.cols() + c];
  return m;
}

void ArrayArchive::save(const std::filesystem::path& path) const {
  nlohmann::json header;
  header["format_version"] = kFormatVersion;
  header["manifest"] = manifest_;

  // Lay out payloads.
  nlohmann::json arrays = nlohmann::json::object();
  std::uint64_t offset = 0;
  for (const auto& [name, e] : arrays_) {
    std::uint64_t nbytes = e.values.size() * dtype_size(e.dtype);
    arrays[name] = {{"dtype", dtype_name(e.dtype)},
                    {"shape", e.shape},
                    {"offset", offset},
                    {"nbytes", nbytes}};
    offset = (offset + nbytes + 7) / 8 * 8;
  }
  header["arrays"] = arrays;

  std::string header_str = header.dump();
  std::string blob;
  blob.reserve(16 + header_str.size() + offset);
  blob.append(kMagic, sizeof(kMagic));
  append_u64_le(blob, header_str.size());
  blob += header_str;
  while (blob.size() % 8 != 0) blob.push_back('\0');

  const std::size_t data_start = blob.size();
  blob.resize(data_start + offset, '\0');
  for (const auto& [name, e] : arrays_) {
    std::uint64_t off = arrays[name]["offset"].get<std::uint64_t>();
    char* dst = blob.data() + data_start + off;
    if (e.dtype == DType::kFloat64) {
      std::memcpy(dst, e.values.data(), e.values.size() * 8);
    } else {
      for (std::size_t i = 0; i < e.values.size(); ++i) {
        float f = static_cast<float>(e.values[i]);
        std::memcpy(dst + 4 * i, &f, 4);
      }
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw NotFoundError("array archive: cannot open '" + path.string() +
                        "' for writing");
  }
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out) {
    throw FormatError("array archive: short write to '" + path.string() + "'");
  }
}

ArrayArchive ArrayArchive::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw NotFoundError("array archive: cannot open '" + path.string() + "'");
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 8) != 0) {
    throw FormatError("array archive: bad magic in '" + path.string() + "'");
  }
  std::uint64_t header_len = read_u64_le(bytes.data() + 8);
  if (16 + header_len > bytes.size()) {
    throw FormatError("array archive: truncated header in '" + path.string() + "'");
  }
  nlohmann::json header = nlohmann::json::parse(
      bytes.begin() + 16, bytes.begin() + 16 + static_cast<std::ptrdiff_t>(header_len));
  if (header.value("format_version", -1) != kFormatVersion) {
    throw FormatError("array archive: unsupported format version in '" +
                      path.string() + "'");
  }

  std::size_t data_start = (16 + header_len + 7) / 8 * 8;
  ArrayArchive archive;
  archive.manifest_ = header.value("manifest", nlohmann::json::object());
  for (const auto& [name, meta] : header.at("arrays").items()) {
    Entry e;
    e.dtype = dtype_from_name(meta.at("dtype").get<std::string>());
    e.shape = meta.at("shape").get<std::vector<std::int64_t>>();
    std::uint64_t off = meta.at("offset").get<std::uint64_t>();
    std::uint64_t nbytes = meta.at("nbytes").get<std::uint64_t>();
    if (data_start + off + nbytes > bytes.size()) {
      throw FormatError("array archive: array '" + name + "' out of bounds");
    }
    std::size_t count = nbytes / dtype_size(e.dtype);
    if (static_cast<std::int64_t>(count) != e.element_count()) {
      throw FormatError("array archive: array '" + name + "' shape/byte mismatch");
    }
    e.values.resize(count);
    const unsigned char* src = bytes.data() + data_start + off;
    if (e.dtype == DType::kFloat64) {
      std::memcpy(e.values.data(), src, nbytes);
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        float f;
        std::memcpy(&f, src + 4 * i, 4);
        e.values[i] = static_cast<double>(f);
      }
    }
    archive.arrays_[name] = std::move(e);
  }
  return archive;
}

}  // namespace latentlab
