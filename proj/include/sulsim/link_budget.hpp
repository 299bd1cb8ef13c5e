#pragma once

#include <optional>
#include <string>

#include "sulsim/geometry.hpp"
#include "sulsim/types.hpp"

namespace sulsim {

inline constexpr double kSpeedOfLightMS = 299792458.0;
inline constexpr double kLeoSatelliteSpeedKmS = 7.5;

struct CarrierConfig {
    Carrier name = Carrier::PUL;
    double frequency_mhz = 0.0;
    double tx_power_dbm = 0.0;
    double ue_gain_dbi = 0.0;
    double sat_peak_gain_dbi = 0.0;
    std::optional<double> beamwidth_3db_deg;  // only consulted for non-zero off-boresight
    double atm_loss_ref_db = 0.0;
    double impl_loss_db = 0.0;
    double noise_temp_k = 290.0;
    double bandwidth_hz = 0.0;

    /// `prefix` is prepended to field names in ConfigError, e.g. "pul".
    void validate(const std::string& prefix) const;

    friend bool operator==(const CarrierConfig&, const CarrierConfig&) = default;
};

/// Ka-band primary uplink: 30 GHz, 65 dBi satellite gain, 500 K, 15 dB atmospheric loss.
CarrierConfig default_ka_band_pul();
/// L-band supplementary uplink: 1.6 GHz, 45 dBi satellite gain, 290 K, 1 dB atmospheric loss.
CarrierConfig default_l_band_sul();

/// Parametric atmospheric loss.
///
/// Constant applies the carrier's atm_loss_ref_db at every elevation. CosecantScaled
/// treats atm_loss_ref_db as the loss at reference_elevation_deg and scales it with the
/// air-mass factor 1/sin(θ), so the loss grows toward the horizon.
struct AtmosphericModel {
    AtmosphereKind kind = AtmosphereKind::CosecantScaled;
    double reference_elevation_deg = 10.0;

    void validate() const;

    friend bool operator==(const AtmosphericModel&, const AtmosphericModel&) = default;
};

double fspl_db(double frequency_mhz, double distance_km);

double atmospheric_loss_db(const AtmosphericModel& model, const CarrierConfig& carrier,
                           double elevation_deg);

/// Quadratic main-lobe roll-off: G_max - 12 (θ_off / θ_3dB)².
double sat_gain_db(const CarrierConfig& carrier, double off_boresight_deg);

/// Signed Doppler shift f·(v/c)·cos φ. Positive when the satellite approaches.
double doppler_shift_hz(double frequency_mhz, double velocity_kms, double velocity_angle_deg);

/// Thermal noise PSD, dBm/Hz, referenced to -174 dBm/Hz at 290 K.
double noise_psd_dbm_hz(double noise_temp_k);

double received_power_dbm(const CarrierConfig& carrier, const AtmosphericModel& model,
                          double elevation_deg, double off_boresight_deg,
                          const GeometryConfig& geometry);

/// Sums the link terms directly rather than going through received_power_dbm; the two
/// routes agree to rounding.
double predicted_snr_db(const CarrierConfig& carrier, const AtmosphericModel& model,
                        double elevation_deg, double off_boresight_deg,
                        const GeometryConfig& geometry);

double predicted_margin_db(const CarrierConfig& carrier, const AtmosphericModel& model,
                           double elevation_deg, double off_boresight_deg,
                           const GeometryConfig& geometry, double snr_req_db);

/// Every term of the uplink budget for one carrier at one elevation.
struct LinkBreakdown {
    double elevation_deg;
    double slant_range_km;
    double off_boresight_deg;
    double tx_power_dbm;
    double ue_gain_dbi;
    double sat_gain_dbi;
    double fspl_db;
    double atm_loss_db;
    double impl_loss_db;
    double received_power_dbm;
    double noise_psd_dbm_hz;
    double noise_floor_dbm;  // N0 + 10 log10(B)
    double snr_db;           // received power minus noise floor
    double predicted_snr_db;
    double snr_req_db;
    double margin_db;
    double velocity_angle_deg;
    double doppler_hz;
};

LinkBreakdown evaluate_link(const CarrierConfig& carrier, const AtmosphericModel& model,
                            const GeometryConfig& geometry, double elevation_deg,
                            BeamMode beam_mode, double velocity_angle_deg, double snr_req_db);

}  // namespace sulsim
