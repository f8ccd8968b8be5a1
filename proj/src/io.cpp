// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qmetric {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw IoError("matrix: expected a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw IoError("matrix: ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_array() || entry.size() != 2) {
        throw IoError("matrix: entries must be [re, im] pairs");
      }
      m(i, k) = std::complex<double>(entry.at(0).get<double>(),
                                     entry.at(1).get<double>());
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix")) {
    throw IoError("state: expected {\"dim\": N, \"matrix\": [...]}");
  }
  const int dim = j.at("dim").get<int>();
  const ComplexMatrix m = matrix_from_json(j.at("matrix"));
  if (m.rows() != dim || m.cols() != dim) {
    throw IoError("state: matrix shape does not match declared dim");
  }
  return make_density(m);
}

DensityMatrix load_state(const std::filesystem::path& path) {
  return state_from_json(json::parse(read_text(path)));
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  write_text_atomic(path, state_to_json(rho).dump(2) + "\n");
}

json channel_to_json(const KrausChannel& phi) {
  json kraus = json::array();
  for (const ComplexMatrix& k : phi.kraus()) kraus.push_back(matrix_to_json(k));
  return json{{"in_dim", phi.in_dim()},
              {"out_dim", phi.out_dim()},
              {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("in_dim") || !j.contains("out_dim") ||
      !j.contains("kraus")) {
    throw IoError(
        "channel: expected {\"in_dim\": N, \"out_dim\": M, \"kraus\": [...]}");
  }
  const int in_dim = j.at("in_dim").get<int>();
  const int out_dim = j.at("out_dim").get<int>();
  std::vector<ComplexMatrix> kraus;
  for (const json& jk : j.at("kraus")) kraus.push_back(matrix_from_json(jk));
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != out_dim || k.cols() != in_dim) {
      throw IoError("channel: Kraus operator shape does not match dims");
    }
  }
  return KrausChannel::from_operators(std::move(kraus));
}

KrausChannel load_channel(const std::filesystem::path& path) {
  return channel_from_json(json::parse(read_text(path)));
}

void save_channel(const std::filesystem::path& path, const KrausChannel& phi) {
  write_text_atomic(path, channel_to_json(phi).dump(2) + "\n");
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("rename failed: " + path.string() + " (" + ec.message() + ")");
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qmetric
