#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdshock/shock.hpp"
#include "rdshock/solution.hpp"
#include "rdshock/stability.hpp"

namespace rdshock {

using ordered_json = nlohmann::ordered_json;

/// Fixed 17-significant-digit scientific formatting; keeps CSV output
/// byte-stable across runs and round-trips every double exactly.
std::string format_float(double v);

/// Comma-separated, one header row, LF line endings.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    static std::string cell(double v) { return format_float(v); }

private:
    std::ofstream out_;
    std::size_t columns_;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);
void write_json_file(const std::filesystem::path& path, const ordered_json& j);

ordered_json to_json(const ShockPair& pair);
ShockPair shock_pair_from_json(const ordered_json& j);

/// Wire form of a placed shock: {rule, u_l, u_r, phi_level, location,
/// jumps:{D, R, ux, ut}}.
ordered_json to_json(const ShockPair& pair, const ShockJumpReport& report);

ordered_json to_json(const ShockJumpReport& report);

ordered_json to_json(const MultiValuedProfile& profile);
MultiValuedProfile profile_from_json(const ordered_json& j);

ordered_json to_json(const ConstantStateReport& report);
ConstantStateReport constant_state_report_from_json(const ordered_json& j);

ordered_json to_json(const BoundaryPoint& point);
BoundaryPoint boundary_point_from_json(const ordered_json& j);

ordered_json to_json(const StabilityRegionMask& mask);
StabilityCell stability_cell_from_json(const ordered_json& j);

}  // namespace rdshock
