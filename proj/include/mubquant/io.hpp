#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mubquant/camsim.hpp"
#include "mubquant/gme.hpp"
#include "mubquant/noise.hpp"
#include "mubquant/witness.hpp"

namespace mubq {

using Json = nlohmann::json;

/// {"dimension": int, "basis_label": string, "counts": [[int, ...], ...]}
Json coincidence_to_json(const CoincidenceMatrix& matrix);
CoincidenceMatrix coincidence_from_json(const Json& j);

CoincidenceMatrix load_coincidence(const std::filesystem::path& path);
void save_coincidence(const CoincidenceMatrix& matrix,
                      const std::filesystem::path& path);

Json witness_report_to_json(const WitnessReport& report);
Json gme_report_to_json(const GmeReport& report);

CameraConfig camera_config_from_json(const Json& j);
Json camera_config_to_json(const CameraConfig& config);
CameraConfig load_camera_config(const std::filesystem::path& path);

/// CSV body for a noise scan: p,b,detected rows plus the two threshold
/// footer rows. '.' decimal separator, 9 significant digits.
std::string noise_scan_to_csv(const NoiseScan& scan);
Json noise_scan_to_json(const NoiseScan& scan);

std::string format_double(double value);  // 9 significant digits

}  // namespace mubq
