#include "sulsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sulsim/errors.hpp"

namespace sulsim {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kTinyDenominator = 1e-12;

void check_elevation(double elevation_deg) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0)) {
        throw DomainError("elevation " + std::to_string(elevation_deg) +
                          " deg outside [0, 90]");
    }
}

// Accepts ψ = 0 (zenith), which the public inverse rejects.
double elevation_at_central_angle_rad(const GeometryConfig& cfg, double psi_rad) {
    const double ratio = cfg.earth_radius_km / cfg.orbit_radius_km();
    const double num = std::cos(psi_rad) - ratio;
    const double den = std::sin(psi_rad);
    if (den < kTinyDenominator) return std::numbers::pi / 2.0;
    return std::clamp(std::atan2(num, den), 0.0, std::numbers::pi / 2.0);
}

}  // namespace

void GeometryConfig::validate() const {
    if (!(earth_radius_km > 0.0)) throw ConfigError("geometry.earth_radius_km", "must be > 0");
    if (!(altitude_km > 0.0)) throw ConfigError("geometry.altitude_km", "must be > 0");
    if (!(min_elevation_deg > 0.0)) {
        throw ConfigError("geometry.min_elevation_deg", "must be > 0");
    }
    if (!(min_elevation_deg < max_elevation_deg)) {
        throw ConfigError("geometry.max_elevation_deg", "must exceed min_elevation_deg");
    }
    if (!(max_elevation_deg <= 90.0)) {
        throw ConfigError("geometry.max_elevation_deg", "must be <= 90");
    }
}

double slant_range_km(const GeometryConfig& cfg, double elevation_deg) {
    check_elevation(elevation_deg);
    const double re = cfg.earth_radius_km;
    const double r = cfg.orbit_radius_km();
    const double el = elevation_deg * kDegToRad;
    if (elevation_deg == 90.0) return cfg.altitude_km;  // cos(π/2) is not exactly 0 in floating point
    const double c = std::cos(el);
    return std::sqrt(r * r - re * re * c * c) - re * std::sin(el);
}

double off_boresight_angle_deg(const GeometryConfig& cfg, double elevation_deg, BeamMode mode) {
    check_elevation(elevation_deg);
    if (mode == BeamMode::UeCentered) return 0.0;
    if (elevation_deg == 90.0) return 0.0;
    const double s = cfg.earth_radius_km / cfg.orbit_radius_km() *
                     std::cos(elevation_deg * kDegToRad);
    return std::asin(s) * kRadToDeg;
}

double central_angle_from_elevation_deg(const GeometryConfig& cfg, double elevation_deg) {
    check_elevation(elevation_deg);
    if (elevation_deg == 90.0) return 0.0;
    const double nadir_deg = off_boresight_angle_deg(cfg, elevation_deg, BeamMode::NadirFixed);
    return std::max(0.0, 90.0 - elevation_deg - nadir_deg);
}

double elevation_from_central_angle_deg(const GeometryConfig& cfg, double central_angle_deg) {
    if (!(central_angle_deg > 0.0)) {
        throw DomainError("central angle must be > 0 deg, got " +
                          std::to_string(central_angle_deg));
    }
    return elevation_at_central_angle_rad(cfg, central_angle_deg * kDegToRad) * kRadToDeg;
}

double overhead_velocity_angle_deg(const GeometryConfig& cfg, double elevation_deg,
                                   bool approaching) {
    // On a zenith pass cos φ = sin η, with η the satellite's off-nadir angle to the UE.
    const double nadir_deg = off_boresight_angle_deg(cfg, elevation_deg, BeamMode::NadirFixed);
    return approaching ? 90.0 - nadir_deg : 90.0 + nadir_deg;
}

double orbital_angular_rate_rad_s(const GeometryConfig& cfg) {
    const double r = cfg.orbit_radius_km();
    return std::sqrt(kEarthGravitationalParameterKm3S2 / (r * r * r));
}

namespace {

struct PassTrack {
    double peak_central_rad;
    double half_along_track_rad;
    double rate_rad_s;
};

PassTrack pass_track(const GeometryConfig& cfg) {
    const double psi_peak = central_angle_from_elevation_deg(cfg, cfg.max_elevation_deg) * kDegToRad;
    const double psi_edge = central_angle_from_elevation_deg(cfg, cfg.min_elevation_deg) * kDegToRad;
    // Spherical right triangle: cos ψ = cos ψ_peak · cos α.
    const double cos_alpha = std::clamp(std::cos(psi_edge) / std::cos(psi_peak), -1.0, 1.0);
    return {psi_peak, std::acos(cos_alpha), orbital_angular_rate_rad_s(cfg)};
}

}  // namespace

double full_pass_duration_s(const GeometryConfig& cfg) {
    cfg.validate();
    const PassTrack track = pass_track(cfg);
    return 2.0 * track.half_along_track_rad / track.rate_rad_s;
}

PassProfile build_pass_profile(const GeometryConfig& cfg, PassShape shape, double sample_step_s) {
    cfg.validate();
    if (!(sample_step_s > 0.0)) throw ConfigError("sample_step_s", "must be > 0");

    const PassTrack track = pass_track(cfg);
    const double half = track.half_along_track_rad / track.rate_rad_s;

    // Times relative to the peak, ascending.
    std::vector<double> offsets;
    const auto steps_before = static_cast<long>(std::floor(half / sample_step_s));
    if (half - static_cast<double>(steps_before) * sample_step_s > 1e-9) offsets.push_back(-half);
    for (long k = -steps_before; k <= 0; ++k) offsets.push_back(static_cast<double>(k) * sample_step_s);
    if (shape == PassShape::FullPass) {
        const std::size_t ascending = offsets.size();
        for (std::size_t i = ascending - 1; i-- > 0;) offsets.push_back(-offsets[i]);
    }

    const double re = cfg.earth_radius_km;
    const double r = cfg.orbit_radius_km();
    const double ue_x = re * std::cos(track.peak_central_rad);
    const double ue_z = re * std::sin(track.peak_central_rad);

    PassProfile profile;
    profile.shape = shape;
    profile.sample_step_s = sample_step_s;
    profile.samples.reserve(offsets.size());
    for (const double dt : offsets) {
        const double alpha = track.rate_rad_s * dt;
        const double cos_psi = std::cos(track.peak_central_rad) * std::cos(alpha);
        const double psi = std::acos(std::clamp(cos_psi, -1.0, 1.0));

        PassSample s;
        s.time_s = dt + half;
        if (std::abs(dt - (-half)) < 1e-12 || std::abs(dt - half) < 1e-12) {
            s.elevation_deg = cfg.min_elevation_deg;
        } else if (dt == 0.0) {
            s.elevation_deg = cfg.max_elevation_deg;
        } else {
            s.elevation_deg = std::clamp(elevation_at_central_angle_rad(cfg, psi) * kRadToDeg,
                                         cfg.min_elevation_deg, cfg.max_elevation_deg);
        }

        // Orbit in the x-y plane, UE tilted out of it by the peak central angle.
        const double sat_x = r * std::cos(alpha);
        const double sat_y = r * std::sin(alpha);
        const double los_x = ue_x - sat_x;
        const double los_y = -sat_y;
        const double los_z = ue_z;
        const double los_norm = std::sqrt(los_x * los_x + los_y * los_y + los_z * los_z);
        const double dot = -std::sin(alpha) * los_x + std::cos(alpha) * los_y;
        s.velocity_angle_deg = dt == 0.0 ? 90.0 : std::acos(std::clamp(dot / los_norm, -1.0, 1.0)) * kRadToDeg;

        profile.samples.push_back(s);
    }
    return profile;
}

}  // namespace sulsim
