#pragma once

#include <string>

#include <json.hpp>

#include "gfl/gabor.hpp"
#include "gfl/obstruction.hpp"
#include "gfl/scanner.hpp"

namespace gfl {

/// Schema: {conjecture, m, k, a: "num/den", b: "num/den", p, q, rank,
/// gamma: [int...], matrix: {rows, cols, entries: ["num/den", ...]},
/// verified}.  Gamma entries that do not fit an int64 are emitted as
/// decimal strings; the reader accepts both.
nlohmann::json certificate_to_json(const ObstructionCertificate& cert);
ObstructionCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const nlohmann::json& j);

/// {rows, cols, re: [...], im: [...]}
nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const ScanRecord& rec);

}  // namespace gfl
