#include "sulsim/scenario_file.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "sulsim/errors.hpp"

namespace sulsim {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const auto a : allowed) known = known || key == a;
        if (!known) {
            throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
        }
    }
}

const json* section(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) return nullptr;
    if (!it->is_object()) throw ConfigError(key, "expected an object");
    return &*it;
}

void read_number(const json& obj, const std::string& where, const char* key, double& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) throw ConfigError(where + key, "expected a number");
    out = it->get<double>();
}

template <typename Enum, typename Parse>
void read_enum(const json& obj, const std::string& where, const char* key, Enum& out, Parse parse) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_string()) throw ConfigError(where + key, "expected a string");
    const auto parsed = parse(it->get<std::string>());
    if (!parsed) throw ConfigError(where + key, "unrecognized value '" + it->get<std::string>() + "'");
    out = *parsed;
}

void read_carrier(const json& obj, const std::string& name, CarrierConfig& c) {
    reject_unknown_keys(obj, name,
                        {"name", "frequency_mhz", "tx_power_dbm", "ue_gain_dbi",
                         "sat_peak_gain_dbi", "beamwidth_3db_deg", "atm_loss_ref_db",
                         "impl_loss_db", "noise_temp_k", "bandwidth_hz"});
    const std::string p = name + ".";
    read_enum(obj, p, "name", c.name, parse_carrier);
    read_number(obj, p, "frequency_mhz", c.frequency_mhz);
    read_number(obj, p, "tx_power_dbm", c.tx_power_dbm);
    read_number(obj, p, "ue_gain_dbi", c.ue_gain_dbi);
    read_number(obj, p, "sat_peak_gain_dbi", c.sat_peak_gain_dbi);
    if (const auto it = obj.find("beamwidth_3db_deg"); it != obj.end()) {
        if (it->is_null()) {
            c.beamwidth_3db_deg.reset();
        } else if (it->is_number()) {
            c.beamwidth_3db_deg = it->get<double>();
        } else {
            throw ConfigError(p + "beamwidth_3db_deg", "expected a number or null");
        }
    }
    read_number(obj, p, "atm_loss_ref_db", c.atm_loss_ref_db);
    read_number(obj, p, "impl_loss_db", c.impl_loss_db);
    read_number(obj, p, "noise_temp_k", c.noise_temp_k);
    read_number(obj, p, "bandwidth_hz", c.bandwidth_hz);
}

json carrier_to_json(const CarrierConfig& c) {
    json j;
    j["name"] = to_string(c.name);
    j["frequency_mhz"] = c.frequency_mhz;
    j["tx_power_dbm"] = c.tx_power_dbm;
    j["ue_gain_dbi"] = c.ue_gain_dbi;
    j["sat_peak_gain_dbi"] = c.sat_peak_gain_dbi;
    j["beamwidth_3db_deg"] = c.beamwidth_3db_deg ? json(*c.beamwidth_3db_deg) : json(nullptr);
    j["atm_loss_ref_db"] = c.atm_loss_ref_db;
    j["impl_loss_db"] = c.impl_loss_db;
    j["noise_temp_k"] = c.noise_temp_k;
    j["bandwidth_hz"] = c.bandwidth_hz;
    return j;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed scenario document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");

    const auto version = doc.find("schema_version");
    if (version == doc.end()) throw VersionError("schema_version is required");
    if (!version->is_number_integer() || version->get<long long>() != kScenarioSchemaVersion) {
        throw VersionError("unsupported schema_version " + version->dump() + ", expected " +
                           std::to_string(kScenarioSchemaVersion));
    }

    reject_unknown_keys(doc, "",
                        {"schema_version", "geometry", "pul", "sul", "atm_model", "controller",
                         "beam_mode", "noise_sigma_db", "rng_seed", "pass_shape",
                         "sample_step_s"});

    ScenarioConfig s = default_scenario();
    if (const json* g = section(doc, "geometry")) {
        reject_unknown_keys(*g, "geometry",
                            {"earth_radius_km", "altitude_km", "min_elevation_deg",
                             "max_elevation_deg"});
        read_number(*g, "geometry.", "earth_radius_km", s.geometry.earth_radius_km);
        read_number(*g, "geometry.", "altitude_km", s.geometry.altitude_km);
        read_number(*g, "geometry.", "min_elevation_deg", s.geometry.min_elevation_deg);
        read_number(*g, "geometry.", "max_elevation_deg", s.geometry.max_elevation_deg);
    }
    if (const json* c = section(doc, "pul")) read_carrier(*c, "pul", s.pul);
    if (const json* c = section(doc, "sul")) read_carrier(*c, "sul", s.sul);
    if (const json* a = section(doc, "atm_model")) {
        reject_unknown_keys(*a, "atm_model", {"kind", "reference_elevation_deg"});
        read_enum(*a, "atm_model.", "kind", s.atm_model.kind, parse_atmosphere_kind);
        read_number(*a, "atm_model.", "reference_elevation_deg",
                    s.atm_model.reference_elevation_deg);
    }
    if (const json* c = section(doc, "controller")) {
        reject_unknown_keys(*c, "controller",
                            {"safety_margin_db", "hysteresis_margin_db", "snr_req_db"});
        read_number(*c, "controller.", "safety_margin_db", s.controller.safety_margin_db);
        read_number(*c, "controller.", "hysteresis_margin_db", s.controller.hysteresis_margin_db);
        read_number(*c, "controller.", "snr_req_db", s.controller.snr_req_db);
    }
    read_enum(doc, "", "beam_mode", s.beam_mode, parse_beam_mode);
    read_number(doc, "", "noise_sigma_db", s.noise_sigma_db);
    if (const auto it = doc.find("rng_seed"); it != doc.end()) {
        if (!it->is_number_unsigned()) throw ConfigError("rng_seed", "expected a non-negative integer");
        s.rng_seed = it->get<std::uint64_t>();
    }
    read_enum(doc, "", "pass_shape", s.pass_shape, parse_pass_shape);
    read_number(doc, "", "sample_step_s", s.sample_step_s);

    s.validate();
    return s;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioConfig& s) {
    json doc;
    doc["schema_version"] = kScenarioSchemaVersion;
    doc["geometry"] = {{"earth_radius_km", s.geometry.earth_radius_km},
                       {"altitude_km", s.geometry.altitude_km},
                       {"min_elevation_deg", s.geometry.min_elevation_deg},
                       {"max_elevation_deg", s.geometry.max_elevation_deg}};
    doc["pul"] = carrier_to_json(s.pul);
    doc["sul"] = carrier_to_json(s.sul);
    doc["atm_model"] = {{"kind", to_string(s.atm_model.kind)},
                        {"reference_elevation_deg", s.atm_model.reference_elevation_deg}};
    doc["controller"] = {{"safety_margin_db", s.controller.safety_margin_db},
                         {"hysteresis_margin_db", s.controller.hysteresis_margin_db},
                         {"snr_req_db", s.controller.snr_req_db}};
    doc["beam_mode"] = to_string(s.beam_mode);
    doc["noise_sigma_db"] = s.noise_sigma_db;
    doc["rng_seed"] = s.rng_seed;
    doc["pass_shape"] = to_string(s.pass_shape);
    doc["sample_step_s"] = s.sample_step_s;
    return doc.dump(2) + "\n";
}

void save_scenario(const ScenarioConfig& scenario, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file " + path.string());
    out << serialize_scenario(scenario);
}

}  // namespace sulsim
