#include "rdshock/io.hpp"

#include <cstdio>

namespace rdshock {

std::string format_float(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_) throw ConfigError("cannot open output file " + path.string());
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::logic_error("csv row width does not match the header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path.string());
    out << content;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

ordered_json to_json(const ShockPair& pair) {
    ordered_json j;
    j["rule"] = to_string(pair.rule);
    j["u_l"] = pair.u_l;
    j["u_r"] = pair.u_r;
    j["phi_level"] = pair.phi_level;
    if (pair.location)
        j["location"] = *pair.location;
    else
        j["location"] = nullptr;
    return j;
}

ShockPair shock_pair_from_json(const ordered_json& j) {
    ShockPair pair;
    pair.rule = rule_from_string(j.at("rule").get<std::string>());
    pair.u_l = j.at("u_l").get<double>();
    pair.u_r = j.at("u_r").get<double>();
    pair.phi_level = j.at("phi_level").get<double>();
    if (j.contains("location") && !j.at("location").is_null())
        pair.location = j.at("location").get<double>();
    return pair;
}

ordered_json to_json(const ShockPair& pair, const ShockJumpReport& report) {
    ordered_json j = to_json(pair);
    j["jumps"] = {{"D", report.jump_d},
                  {"R", report.jump_r},
                  {"ux", report.jump_ux},
                  {"ut", report.jump_ut}};
    return j;
}

ordered_json to_json(const ShockJumpReport& r) {
    ordered_json j;
    j["left"] = {{"phi", r.phi_left}, {"D", r.d_left}, {"R", r.r_left},
                 {"ux", r.ux_left}, {"ut", r.ut_left}};
    j["right"] = {{"phi", r.phi_right}, {"D", r.d_right}, {"R", r.r_right},
                  {"ux", r.ux_right}, {"ut", r.ut_right}};
    j["jumps"] = {{"D", r.jump_d}, {"R", r.jump_r}, {"ux", r.jump_ux}, {"ut", r.jump_ut}};
    j["jump_phi"] = r.jump_phi;
    return j;
}

ordered_json to_json(const MultiValuedProfile& profile) {
    ordered_json samples = ordered_json::array();
    for (const ProfileSample& s : profile.samples)
        samples.push_back({{"x", s.x}, {"u", s.u}, {"branch", to_string(s.branch)}});
    ordered_json j;
    j["t"] = profile.t;
    j["samples"] = std::move(samples);
    j["band"] = {profile.band[0], profile.band[1]};
    return j;
}

namespace {

Branch branch_from_string(const std::string& name) {
    if (name == "lower") return Branch::Lower;
    if (name == "middle") return Branch::Middle;
    if (name == "upper") return Branch::Upper;
    throw ConfigError("unknown branch label '" + name + "'");
}

}  // namespace

MultiValuedProfile profile_from_json(const ordered_json& j) {
    MultiValuedProfile profile;
    profile.t = j.at("t").get<double>();
    profile.band = {j.at("band").at(0).get<double>(), j.at("band").at(1).get<double>()};
    for (const auto& s : j.at("samples"))
        profile.samples.push_back({s.at("x").get<double>(), s.at("u").get<double>(),
                                   branch_from_string(s.at("branch").get<std::string>())});
    return profile;
}

ordered_json to_json(const ConstantStateReport& r) {
    ordered_json j;
    j["u_bar"] = r.u_bar;
    j["classification"] = to_string(r.cls);
    j["r_prime"] = r.r_prime;
    j["most_unstable_alpha"] = r.most_unstable_alpha;
    j["lambda_max"] = r.lambda_max;
    j["long_wavelength"] = r.long_wavelength;
    return j;
}

ConstantStateReport constant_state_report_from_json(const ordered_json& j) {
    ConstantStateReport r;
    r.u_bar = j.at("u_bar").get<double>();
    const std::string cls = j.at("classification").get<std::string>();
    if (cls == "stable")
        r.cls = StateClass::Stable;
    else if (cls == "unstable")
        r.cls = StateClass::Unstable;
    else if (cls == "marginal")
        r.cls = StateClass::Marginal;
    else
        throw ConfigError("unknown classification '" + cls + "'");
    r.r_prime = j.at("r_prime").get<double>();
    r.most_unstable_alpha = j.at("most_unstable_alpha").get<double>();
    r.lambda_max = j.at("lambda_max").get<double>();
    r.long_wavelength = j.at("long_wavelength").get<bool>();
    return r;
}

ordered_json to_json(const BoundaryPoint& p) {
    return {{"t", p.t},
            {"L", p.position},
            {"flux", p.flux},
            {"speed", p.speed},
            {"stefan_residual", p.stefan_residual}};
}

BoundaryPoint boundary_point_from_json(const ordered_json& j) {
    BoundaryPoint p;
    p.t = j.at("t").get<double>();
    p.position = j.at("L").get<double>();
    p.flux = j.at("flux").get<double>();
    p.speed = j.at("speed").get<double>();
    p.stefan_residual = j.at("stefan_residual").get<double>();
    return p;
}

ordered_json to_json(const StabilityRegionMask& mask) {
    ordered_json cells = ordered_json::array();
    for (const StabilityCell& c : mask.cells)
        cells.push_back({{"a", c.a},
                         {"b", c.b},
                         {"shock_feasible", c.shock_feasible},
                         {"sturm_ok", c.sturm_ok},
                         {"stable", c.stable}});
    ordered_json j;
    j["grid"] = {{"a_min", mask.spec.a_min}, {"a_max", mask.spec.a_max}, {"na", mask.spec.na},
                 {"b_min", mask.spec.b_min}, {"b_max", mask.spec.b_max}, {"nb", mask.spec.nb},
                 {"trace_samples", mask.spec.trace_samples}};
    j["cells"] = std::move(cells);
    return j;
}

StabilityCell stability_cell_from_json(const ordered_json& j) {
    StabilityCell c;
    c.a = j.at("a").get<double>();
    c.b = j.at("b").get<double>();
    c.shock_feasible = j.at("shock_feasible").get<bool>();
    c.sturm_ok = j.at("sturm_ok").get<bool>();
    c.stable = j.at("stable").get<bool>();
    return c;
}

}  // namespace rdshock
