#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "atiyah/configuration.hpp"
#include "atiyah/experiments.hpp"
#include "atiyah/gram4.hpp"

namespace atiyah {

/// {"points": [[x, y, z], ...]} with finite doubles. Structural problems
/// are reported with the offending point index in the message.
nlohmann::json to_json(const Configuration& c);
Configuration config_from_json(const nlohmann::json& j);

/// Reads a configuration from a file path, or from stdin when the path
/// is "-". Parse errors carry the nlohmann diagnostic.
Configuration load_configuration(const std::string& path);

nlohmann::json to_json(const AnalysisReport& r);

/// Certificate with 1-based point indices in the triples; the triples are
/// null when all four points are collinear.
nlohmann::json to_json(const PdCertificate& cert);

nlohmann::json to_json(const VerifyRecord& rec);
nlohmann::json to_json(const VerifySummary& s);
nlohmann::json to_json(const MinimizeResult& r);

/// CSV export of verify records; fixed column order
/// n, absD, detH, minEig, conj1_margin, conj2_margin, max_residual,
/// all floats with 17 significant digits.
std::string csv_header();
std::string csv_row(const VerifyRecord& rec);

}  // namespace atiyah
