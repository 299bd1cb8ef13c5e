#pragma once
// Reference computations for the tests. Nothing here calls into the library's
// geometry or link-budget code; each quantity is reached by a different route.

#include <array>
#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline double rad(double deg) { return deg * kPi / 180.0; }
inline double deg(double rad) { return rad * 180.0 / kPi; }

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// Elevation of a satellite at Earth-central angle ψ, from explicit 2-D positions:
/// angle between the local horizontal at the UE and the UE→satellite vector.
inline double elevation_from_positions_deg(double re, double r, double psi_deg) {
    const Vec3 ue{0.0, re, 0.0};
    const Vec3 sat{r * std::sin(rad(psi_deg)), r * std::cos(rad(psi_deg)), 0.0};
    const Vec3 los = sub(sat, ue);
    const Vec3 up{0.0, 1.0, 0.0};
    return deg(std::asin(dot(los, up) / norm(los)));
}

/// Same elevation via the law of cosines on the Earth-centre/UE/satellite triangle.
inline double elevation_law_of_cosines_deg(double re, double r, double psi_deg) {
    const double d = std::sqrt(re * re + r * r - 2.0 * re * r * std::cos(rad(psi_deg)));
    return deg(std::asin((r * r - re * re - d * d) / (2.0 * re * d)));
}

/// Slant range found by bisecting the central angle until the position-based elevation
/// matches, then measuring the UE→satellite distance.
inline double slant_range_by_search_km(double re, double h, double elevation_deg) {
    const double r = re + h;
    double lo = 0.0;
    double hi = deg(std::acos(re / r));  // horizon: elevation 0
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (elevation_from_positions_deg(re, r, mid) > elevation_deg) lo = mid; else hi = mid;
    }
    const double psi = 0.5 * (lo + hi);
    const Vec3 ue{0.0, re, 0.0};
    const Vec3 sat{r * std::sin(rad(psi)), r * std::cos(rad(psi)), 0.0};
    return norm(sub(sat, ue));
}

/// Uplink SNR evaluated in linear units (mW, W/Hz) and converted to dB once at the end.
struct LinearCarrier {
    double frequency_mhz, tx_power_dbm, ue_gain_dbi, sat_gain_dbi;
    double atm_loss_db, impl_loss_db, noise_temp_k, bandwidth_hz;
};

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double received_power_linear_mw(const LinearCarrier& c, double distance_km) {
    // 32.45 dB reference plus f² d² scaling.
    const double path_gain = 1.0 / (from_db(32.45) * c.frequency_mhz * c.frequency_mhz *
                                    distance_km * distance_km);
    return from_db(c.tx_power_dbm) * from_db(c.ue_gain_dbi) * from_db(c.sat_gain_dbi) *
           path_gain / from_db(c.atm_loss_db) / from_db(c.impl_loss_db);
}

inline double snr_linear_route_db(const LinearCarrier& c, double distance_km) {
    const double noise_mw = from_db(-174.0) * (c.noise_temp_k / 290.0) * c.bandwidth_hz;
    return 10.0 * std::log10(received_power_linear_mw(c, distance_km) / noise_mw);
}

/// Literal transcription of the SUL activation pseudocode; 0 = PUL, 1 = SUL.
inline int activation_step(int c_active, double m_p, double m_s, double delta_s, double delta_h) {
    int c_new = c_active;
    if (c_active == 0) {
        if (m_p < delta_s && m_s > 0) {
            c_new = 1;
        } else {
            c_new = 0;
        }
    } else if (c_active == 1) {
        if (m_p > delta_s + delta_h) {
            c_new = 0;
        } else {
            c_new = 1;
        }
    }
    if (c_new != c_active) {
        c_active = c_new;
    }
    return c_active;
}

/// Time above the minimum elevation on a zenith pass, by stepping the central angle at
/// 1 ms and watching the position-based elevation.
inline double zenith_pass_duration_by_stepping_s(double re, double h, double mu,
                                                 double min_elevation_deg) {
    const double r = re + h;
    const double omega = std::sqrt(mu / (r * r * r));
    const double dt = 1e-3;
    double t = 0.0;
    // Start at the peak and walk outward; double for the full pass.
    while (elevation_from_positions_deg(re, r, deg(omega * (t + dt))) >= min_elevation_deg) t += dt;
    return 2.0 * t;
}

}  // namespace oracle
