#pragma once

#include <vector>

#include "sulsim/types.hpp"

namespace sulsim {

inline constexpr double kEarthGravitationalParameterKm3S2 = 398600.4418;

struct GeometryConfig {
    double earth_radius_km = 6371.0;
    double altitude_km = 600.0;
    double min_elevation_deg = 10.0;
    double max_elevation_deg = 90.0;  // peak elevation of a pass

    /// Throws ConfigError naming the first violated field.
    void validate() const;

    double orbit_radius_km() const noexcept { return earth_radius_km + altitude_km; }

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

/// UE-to-satellite line-of-sight distance at the given elevation, valid on [0°, 90°].
double slant_range_km(const GeometryConfig& cfg, double elevation_deg);

/// Angle between the beam boresight and the UE direction as seen from the satellite.
/// UeCentered beams track the UE (always 0); NadirFixed beams point at nadir.
double off_boresight_angle_deg(const GeometryConfig& cfg, double elevation_deg, BeamMode mode);

/// Earth-central angle between UE and sub-satellite point for a given elevation.
double central_angle_from_elevation_deg(const GeometryConfig& cfg, double elevation_deg);

/// Inverse of central_angle_from_elevation_deg. Requires ψ > 0; the result is clamped to [0°, 90°].
double elevation_from_central_angle_deg(const GeometryConfig& cfg, double central_angle_deg);

/// Angle between the satellite velocity and the satellite-to-UE line of sight on an
/// overhead (zenith) pass. Approaching geometry gives φ < 90° and a positive Doppler shift.
double overhead_velocity_angle_deg(const GeometryConfig& cfg, double elevation_deg,
                                   bool approaching = true);

/// Mean motion of the circular orbit, rad/s.
double orbital_angular_rate_rad_s(const GeometryConfig& cfg);

/// Time the satellite spends above min_elevation_deg on a FullPass.
double full_pass_duration_s(const GeometryConfig& cfg);

struct PassSample {
    double time_s = 0.0;
    double elevation_deg = 0.0;
    double velocity_angle_deg = 0.0;
};

struct PassProfile {
    std::vector<PassSample> samples;
    PassShape shape = PassShape::AscendOnly;
    double sample_step_s = 1.0;
};

/// Samples a circular-orbit pass over a non-rotating Earth. The time grid is anchored
/// at the pass peak so the peak is sampled exactly; the horizon-side endpoints at
/// min_elevation_deg are always included, so the first interval (and last, for
/// FullPass) may be shorter than sample_step_s. Times start at 0.
PassProfile build_pass_profile(const GeometryConfig& cfg, PassShape shape, double sample_step_s);

}  // namespace sulsim
