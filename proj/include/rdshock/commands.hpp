#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rdshock/config.hpp"

namespace rdshock {

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& name);

struct RunOptions {
    std::filesystem::path out_dir = ".";
    OutputFormat format = OutputFormat::Csv;
};

/// Each runner consumes its [command] keys, rejects unknown ones, writes its
/// artifacts into out_dir and returns the file names written.
std::vector<std::string> run_solve(RunConfig& config, const RunOptions& options);
std::vector<std::string> run_boundary(RunConfig& config, const RunOptions& options);
std::vector<std::string> run_shock_compare(RunConfig& config, const RunOptions& options);
std::vector<std::string> run_stability(RunConfig& config, const RunOptions& options);
std::vector<std::string> run_phase_plane(RunConfig& config, const RunOptions& options);

std::vector<std::string> run_subcommand(const std::string& name, RunConfig& config,
                                        const RunOptions& options);

}  // namespace rdshock
