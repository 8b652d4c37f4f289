#pragma once

#include <string>

#include "facekit/axioms.hpp"
#include "facekit/face_algebra.hpp"
#include "facekit/fusion_data.hpp"

#include <json.hpp>

namespace facekit {

/// Parses and structurally validates a fusion-data document. Throws
/// SchemaError / ValidationError with a located diagnostic.
FusionData load_fusion(const nlohmann::json& doc);
FusionData load_fusion_text(const std::string& text);
FusionData load_fusion_file(const std::string& path);

nlohmann::json fusion_to_json(const FusionData& fd);

/// Structure-constant export; omitted rows are zero. Deterministic.
nlohmann::json algebra_to_json(const FaceAlgebra& alg);

/// Rebuilds a FaceAlgebra from an export. The basis must be in canonical
/// block order; fiber bases and multiplicities are recovered from it.
FaceAlgebra algebra_from_json(const nlohmann::json& doc);
FaceAlgebra algebra_from_file(const std::string& path);

nlohmann::json report_to_json(const AxiomReport& rep);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace facekit
