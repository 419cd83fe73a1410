#include "rdshock/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rdshock {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("key '" + key + "': cannot parse number from '" + value + "'");
    return v;
}

}  // namespace

void ConfigSection::set(const std::string& key, const std::string& value) {
    if (values_.count(key)) throw ConfigError("duplicate key '" + key + "'");
    values_[key] = value;
}

std::string ConfigSection::require(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
    used_.insert(key);
    return it->second;
}

std::string ConfigSection::get_string(const std::string& key) const { return require(key); }

std::string ConfigSection::get_string(const std::string& key,
                                      const std::string& fallback) const {
    if (!has(key)) return fallback;
    return require(key);
}

double ConfigSection::get_double(const std::string& key) const {
    return parse_double(key, require(key));
}

double ConfigSection::get_double(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    return parse_double(key, require(key));
}

int ConfigSection::get_int(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double v = parse_double(key, require(key));
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("key '" + key + "': expected an integer");
    return i;
}

bool ConfigSection::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = require(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("key '" + key + "': expected true|false");
}

std::vector<double> ConfigSection::get_double_list(const std::string& key) const {
    const std::string raw = require(key);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

void ConfigSection::reject_unused(const std::string& section_name) const {
    std::string unknown;
    for (const auto& [key, value] : values_) {
        if (!used_.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
    }
    if (!unknown.empty())
        throw ConfigError("unknown key(s) in [" + section_name + "]: " + unknown);
}

ConfigFile ConfigFile::parse_string(const std::string& text) {
    ConfigFile file;
    std::stringstream ss(text);
    std::string line;
    std::string current = "";
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section");
            current = trim(line.substr(1, line.size() - 2));
            if (current != "model" && current != "params" && current != "command")
                throw ConfigError("unknown section [" + current + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (current.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside a section");
        file.sections_[current].set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return file;
}

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

ConfigSection& ConfigFile::section(const std::string& name) { return sections_[name]; }

namespace {

DiffusivityModel build_model(ConfigSection& s) {
    const std::string kind = s.get_string("kind");
    const double a = s.get_double("a");
    const double b = s.get_double("b");
    try {
        if (kind == "quadratic") return DiffusivityModel::quadratic(a, b);
        if (kind == "quartic")
            return DiffusivityModel::quartic(a, b, s.get_double("c"), s.get_double("d"));
        if (kind == "generic-polynomial")
            return DiffusivityModel::generic_polynomial(s.get_double_list("coefficients"), a, b);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid model: ") + e.what());
    }
    throw ConfigError("unknown model kind '" + kind +
                      "' (expected quadratic|quartic|generic-polynomial)");
}

double resolve_constant(const std::string& key, const std::string& raw, double phi0) {
    if (raw == "phi0") return phi0;
    if (raw == "-phi0") return -phi0;
    return parse_double(key, raw);
}

}  // namespace

RunConfig load_run_config_from_string(const std::string& text) {
    ConfigFile file = ConfigFile::parse_string(text);

    ConfigSection& model_section = file.section("model");
    DiffusivityModel model = build_model(model_section);
    model_section.reject_unused("model");

    ConfigSection& params_section = file.section("params");
    const double kappa = params_section.get_double("kappa");
    const double phi0 = model.flux_potential(0.0);
    const double c1 = resolve_constant("c1", params_section.get_string("c1"), phi0);
    const double c2 = resolve_constant("c2", params_section.get_string("c2"), phi0);
    const double gauge = params_section.get_double("time_gauge", 0.0);
    params_section.reject_unused("params");

    SolutionParams params;
    try {
        params = SolutionParams::make(model, kappa, c1, c2, gauge);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid params: ") + e.what());
    }
    return RunConfig{std::move(model), params, file.section("command"), phi0};
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_run_config_from_string(buffer.str());
}

}  // namespace rdshock
