#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sulsim/geometry.hpp"
#include "sulsim/link_budget.hpp"
#include "sulsim/sul_controller.hpp"
#include "sulsim/types.hpp"

namespace sulsim {

struct ScenarioConfig {
    GeometryConfig geometry;
    CarrierConfig pul = default_ka_band_pul();
    CarrierConfig sul = default_l_band_sul();
    AtmosphericModel atm_model;
    ControllerConfig controller;
    BeamMode beam_mode = BeamMode::UeCentered;
    double noise_sigma_db = 0.0;  // std-dev of the Gaussian margin perturbation
    std::uint64_t rng_seed = 1;
    PassShape pass_shape = PassShape::AscendOnly;
    double sample_step_s = 1.0;

    /// Checks every sub-config plus the cross-carrier constraints. Throws ConfigError.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// 600 km orbit, Ka-band PUL and L-band SUL, cosecant-scaled atmosphere referenced at
/// 10°, UE-centred beam, SNR_req = 0 dB, Δs = Δh = 3 dB, 1 s steps, ascending half-pass.
ScenarioConfig default_scenario();

struct CarrierSample {
    double snr_db = 0.0;
    double margin_db = 0.0;
    double received_power_dbm = 0.0;
    double doppler_hz = 0.0;
};

struct MarginSample {
    double elevation_deg = 0.0;
    double slant_range_km = 0.0;
    double velocity_angle_deg = 0.0;
    CarrierSample pul;
    CarrierSample sul;
};

MarginSample evaluate_margins(const ScenarioConfig& scenario, double elevation_deg,
                              double velocity_angle_deg);

struct TraceEntry {
    double time_s = 0.0;
    MarginSample sample;
    // Margins as seen by the controller, i.e. after perturbation.
    double observed_margin_pul_db = 0.0;
    double observed_margin_sul_db = 0.0;
    Carrier active_carrier = Carrier::PUL;
    bool available = false;
};

struct CdfPoint {
    double elevation_deg;
    double cumulative_fraction;

    friend bool operator==(const CdfPoint&, const CdfPoint&) = default;
};

struct PassResult {
    std::vector<TraceEntry> trace;
    std::size_t switch_count = 0;
    double availability_fraction = 0.0;
    std::vector<CdfPoint> availability_cdf;
};

/// Simulates one pass. In SulEnabled mode the controller picks the carrier each step
/// from the (optionally perturbed) margins; in PulOnly mode the UE stays on PUL.
/// A step is available when the active carrier's unperturbed margin is >= 0.
/// Deterministic for a given scenario, including its rng_seed.
PassResult run_pass(const ScenarioConfig& scenario, UplinkMode mode = UplinkMode::SulEnabled);

/// Cumulative share of available samples at or below each elevation, normalized so
/// the last point is 1. Empty when nothing is available.
std::vector<CdfPoint> availability_cdf(const PassResult& result);

/// Lowest elevation in [min_elevation_deg, 90°] where the mode's best margin against
/// target_snr_db is non-negative. 0.1° scan, then bisection to 0.01°; the returned
/// value is always a feasible elevation. nullopt if none qualifies.
std::optional<double> min_elevation_for_target(const ScenarioConfig& scenario,
                                               double target_snr_db, UplinkMode mode);

struct HysteresisRow {
    double hysteresis_db;
    double mean_switches;
    double p95_switches;  // nearest-rank 95th percentile
};

std::vector<HysteresisRow> hysteresis_sweep(const ScenarioConfig& scenario,
                                            std::span<const double> hysteresis_values_db,
                                            std::span<const std::uint64_t> seeds);

/// `count` seeds derived from `base`: base, base + 1, ...
std::vector<std::uint64_t> sweep_seeds(std::uint64_t base, std::size_t count);

/// Nearest-rank percentile (p in (0, 100]) of a non-empty sample.
double nearest_rank_percentile(std::vector<double> values, double p);

}  // namespace sulsim
