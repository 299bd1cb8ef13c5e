#include "sulsim/link_budget.hpp"

#include <cmath>
#include <numbers>

#include "sulsim/errors.hpp"

namespace sulsim {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

void CarrierConfig::validate(const std::string& prefix) const {
    auto field = [&](const char* name) { return prefix + "." + name; };
    if (!(frequency_mhz > 0.0)) throw ConfigError(field("frequency_mhz"), "must be > 0");
    if (!(bandwidth_hz > 0.0)) throw ConfigError(field("bandwidth_hz"), "must be > 0");
    if (!(noise_temp_k > 0.0)) throw ConfigError(field("noise_temp_k"), "must be > 0");
    if (!(atm_loss_ref_db >= 0.0)) throw ConfigError(field("atm_loss_ref_db"), "must be >= 0");
    if (!(impl_loss_db >= 0.0)) throw ConfigError(field("impl_loss_db"), "must be >= 0");
    if (!std::isfinite(tx_power_dbm)) throw ConfigError(field("tx_power_dbm"), "must be finite");
    if (!std::isfinite(ue_gain_dbi)) throw ConfigError(field("ue_gain_dbi"), "must be finite");
    if (!std::isfinite(sat_peak_gain_dbi)) {
        throw ConfigError(field("sat_peak_gain_dbi"), "must be finite");
    }
    if (beamwidth_3db_deg && !(*beamwidth_3db_deg > 0.0)) {
        throw ConfigError(field("beamwidth_3db_deg"), "must be > 0 when set");
    }
}

CarrierConfig default_ka_band_pul() {
    CarrierConfig c;
    c.name = Carrier::PUL;
    c.frequency_mhz = 30000.0;
    c.tx_power_dbm = 23.0;
    c.ue_gain_dbi = 0.0;
    c.sat_peak_gain_dbi = 65.0;
    c.atm_loss_ref_db = 15.0;
    c.impl_loss_db = 2.0;
    c.noise_temp_k = 500.0;
    c.bandwidth_hz = 10e6;
    return c;
}

CarrierConfig default_l_band_sul() {
    CarrierConfig c;
    c.name = Carrier::SUL;
    c.frequency_mhz = 1600.0;
    c.tx_power_dbm = 23.0;
    c.ue_gain_dbi = 0.0;
    c.sat_peak_gain_dbi = 45.0;
    c.atm_loss_ref_db = 1.0;
    c.impl_loss_db = 2.0;
    c.noise_temp_k = 290.0;
    c.bandwidth_hz = 10e6;
    return c;
}

void AtmosphericModel::validate() const {
    if (!(reference_elevation_deg > 0.0 && reference_elevation_deg <= 90.0)) {
        throw ConfigError("atm_model.reference_elevation_deg", "must lie in (0, 90]");
    }
}

double fspl_db(double frequency_mhz, double distance_km) {
    if (!(frequency_mhz > 0.0)) throw DomainError("FSPL: frequency must be > 0");
    if (!(distance_km > 0.0)) throw DomainError("FSPL: distance must be > 0");
    return 32.45 + 20.0 * std::log10(frequency_mhz) + 20.0 * std::log10(distance_km);
}

double atmospheric_loss_db(const AtmosphericModel& model, const CarrierConfig& carrier,
                           double elevation_deg) {
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
        throw DomainError("atmospheric loss: elevation must lie in (0, 90]");
    }
    if (model.kind == AtmosphereKind::Constant) return carrier.atm_loss_ref_db;
    if (elevation_deg == model.reference_elevation_deg) return carrier.atm_loss_ref_db;
    const double zenith_db =
        carrier.atm_loss_ref_db * std::sin(model.reference_elevation_deg * kDegToRad);
    return zenith_db / std::sin(elevation_deg * kDegToRad);
}

double sat_gain_db(const CarrierConfig& carrier, double off_boresight_deg) {
    if (off_boresight_deg == 0.0) return carrier.sat_peak_gain_dbi;
    if (!carrier.beamwidth_3db_deg || !(*carrier.beamwidth_3db_deg > 0.0)) {
        throw DomainError("satellite gain: off-boresight angle requires a 3 dB beamwidth");
    }
    const double x = off_boresight_deg / *carrier.beamwidth_3db_deg;
    return carrier.sat_peak_gain_dbi - 12.0 * x * x;
}

double doppler_shift_hz(double frequency_mhz, double velocity_kms, double velocity_angle_deg) {
    const double beta = velocity_kms * 1e3 / kSpeedOfLightMS;
    return beta * frequency_mhz * 1e6 * std::cos(velocity_angle_deg * kDegToRad);
}

double noise_psd_dbm_hz(double noise_temp_k) {
    if (!(noise_temp_k > 0.0)) throw DomainError("noise temperature must be > 0 K");
    return -174.0 + 10.0 * std::log10(noise_temp_k / 290.0);
}

double received_power_dbm(const CarrierConfig& carrier, const AtmosphericModel& model,
                          double elevation_deg, double off_boresight_deg,
                          const GeometryConfig& geometry) {
    const double d = slant_range_km(geometry, elevation_deg);
    return carrier.tx_power_dbm + carrier.ue_gain_dbi + sat_gain_db(carrier, off_boresight_deg) -
           fspl_db(carrier.frequency_mhz, d) - atmospheric_loss_db(model, carrier, elevation_deg) -
           carrier.impl_loss_db;
}

double predicted_snr_db(const CarrierConfig& carrier, const AtmosphericModel& model,
                        double elevation_deg, double off_boresight_deg,
                        const GeometryConfig& geometry) {
    const double d = slant_range_km(geometry, elevation_deg);
    return carrier.tx_power_dbm + carrier.ue_gain_dbi + sat_gain_db(carrier, off_boresight_deg) -
           fspl_db(carrier.frequency_mhz, d) - atmospheric_loss_db(model, carrier, elevation_deg) -
           noise_psd_dbm_hz(carrier.noise_temp_k) - 10.0 * std::log10(carrier.bandwidth_hz) -
           carrier.impl_loss_db;
}

double predicted_margin_db(const CarrierConfig& carrier, const AtmosphericModel& model,
                           double elevation_deg, double off_boresight_deg,
                           const GeometryConfig& geometry, double snr_req_db) {
    return predicted_snr_db(carrier, model, elevation_deg, off_boresight_deg, geometry) -
           snr_req_db;
}

LinkBreakdown evaluate_link(const CarrierConfig& carrier, const AtmosphericModel& model,
                            const GeometryConfig& geometry, double elevation_deg,
                            BeamMode beam_mode, double velocity_angle_deg, double snr_req_db) {
    LinkBreakdown b{};
    b.elevation_deg = elevation_deg;
    b.slant_range_km = slant_range_km(geometry, elevation_deg);
    b.off_boresight_deg = off_boresight_angle_deg(geometry, elevation_deg, beam_mode);
    b.tx_power_dbm = carrier.tx_power_dbm;
    b.ue_gain_dbi = carrier.ue_gain_dbi;
    b.sat_gain_dbi = sat_gain_db(carrier, b.off_boresight_deg);
    b.fspl_db = fspl_db(carrier.frequency_mhz, b.slant_range_km);
    b.atm_loss_db = atmospheric_loss_db(model, carrier, elevation_deg);
    b.impl_loss_db = carrier.impl_loss_db;
    b.received_power_dbm =
        received_power_dbm(carrier, model, elevation_deg, b.off_boresight_deg, geometry);
    b.noise_psd_dbm_hz = noise_psd_dbm_hz(carrier.noise_temp_k);
    b.noise_floor_dbm = b.noise_psd_dbm_hz + 10.0 * std::log10(carrier.bandwidth_hz);
    b.snr_db = b.received_power_dbm - b.noise_floor_dbm;
    b.predicted_snr_db =
        predicted_snr_db(carrier, model, elevation_deg, b.off_boresight_deg, geometry);
    b.snr_req_db = snr_req_db;
    b.margin_db = b.predicted_snr_db - snr_req_db;
    b.velocity_angle_deg = velocity_angle_deg;
    b.doppler_hz = doppler_shift_hz(carrier.frequency_mhz, kLeoSatelliteSpeedKmS, velocity_angle_deg);
    return b;
}

}  // namespace sulsim
