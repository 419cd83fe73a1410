#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdshock/model.hpp"
#include "rdshock/solution.hpp"

namespace rdshock {

/// One section of the flat key-value configuration. Reads are tracked so a
/// run can reject keys it never consumed.
class ConfigSection {
public:
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;

    /// Throws ConfigError naming every key that was present but never read.
    void reject_unused(const std::string& section_name) const;

private:
    std::string require(const std::string& key) const;
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
    friend class ConfigFile;
};

/// INI-like file with [model], [params] and [command] sections,
/// `key = value` lines and '#' comments.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::filesystem::path& path);
    static ConfigFile parse_string(const std::string& text);

    ConfigSection& section(const std::string& name);

private:
    std::map<std::string, ConfigSection> sections_;
};

/// Fully resolved run input: the model, the solution parameters (with the
/// phi0 / -phi0 tokens for c1 and c2 already substituted) and the raw
/// command section for the subcommand to consume.
struct RunConfig {
    DiffusivityModel model;
    SolutionParams params;
    ConfigSection command;
    double phi0;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig load_run_config_from_string(const std::string& text);

}  // namespace rdshock
