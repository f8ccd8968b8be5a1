// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_IO_HPP_
#define QMETRIC_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qmetric/channels.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

/// Complex matrix wire format: row-major [[[re, im], ...], ...].
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// State file format: {"dim": N, "matrix": <matrix>}. Loading validates the
/// density-matrix invariants and surfaces the InvalidState reason.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

/// Channel file format: {"in_dim": N, "out_dim": M, "kraus": [<matrix>, ...]}.
/// Loading enforces the completeness relation and reports its residual.
nlohmann::json channel_to_json(const KrausChannel& phi);
KrausChannel channel_from_json(const nlohmann::json& j);
KrausChannel load_channel(const std::filesystem::path& path);
void save_channel(const std::filesystem::path& path, const KrausChannel& phi);

/// Whole-file write via temp file + rename in the target directory, so a
/// failed run never leaves partial JSON at the destination.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& contents);

std::string read_text(const std::filesystem::path& path);

}  // namespace qmetric

#endif  // QMETRIC_IO_HPP_
