#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bcc/avc.hpp"
#include "bcc/channel.hpp"
#include "bcc/continuity.hpp"
#include "bcc/metrics.hpp"
#include "bcc/regions.hpp"

namespace bcc {

// Channel file format: {"inputs": k, "outputs": m, "rows": [[...], ...]}.
nlohmann::json channel_to_json(const Channel& c);
Channel channel_from_json(const nlohmann::json& j);

// Compound file format: {"states": [{"label": "...", "W": {...}, "V": {...}}]}.
nlohmann::json compound_to_json(const CompoundBCC& c);
CompoundBCC compound_from_json(const nlohmann::json& j);

// Point-set format: {"points": [[r0, r1], ...]}.
nlohmann::json pointset_to_json(const RegionPointSet& s);
RegionPointSet pointset_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ContinuityReport& r);

/// CSV with header "n,R0,R1,aux_id", one row per region point.
std::string region_csv(const RegionApproximation& r);

/// Hull document with ordered vertices and the inner-approximation tag.
nlohmann::json hull_to_json(const RegionApproximation& r);

/// CSV with header "lambda,symmetrizable,residual".
std::string sweep_csv(std::span<const SweepRow> rows);

/// Shortest round-trip decimal text for a double (deterministic).
std::string format_double(double v);

/// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace bcc
