#include "sulsim/commands.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "sulsim/errors.hpp"

namespace sulsim {
namespace {

std::string fixed6(double v) { return fmt::format("{:.6f}", v); }

std::string optional_fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : ""; }

}  // namespace

std::vector<double> inclusive_range(double lo, double hi, double step, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw UsageError(fmt::format("{}: range bounds must be finite", what));
    }
    if (!(step > 0.0)) throw UsageError(fmt::format("{}: step must be > 0", what));
    if (lo > hi) throw UsageError(fmt::format("{}: min must not exceed max", what));
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = lo + static_cast<double>(i) * step;
    return values;
}

void cmd_link_budget(const ScenarioConfig& scenario, double elevation_deg, bool csv,
                     std::ostream& out) {
    scenario.validate();
    const double phi = overhead_velocity_angle_deg(scenario.geometry, elevation_deg);
    const auto& ctl = scenario.controller;
    const LinkBreakdown p = evaluate_link(scenario.pul, scenario.atm_model, scenario.geometry,
                                          elevation_deg, scenario.beam_mode, phi, ctl.snr_req_db);
    const LinkBreakdown s = evaluate_link(scenario.sul, scenario.atm_model, scenario.geometry,
                                          elevation_deg, scenario.beam_mode, phi, ctl.snr_req_db);

    struct Row {
        const char* quantity;
        const char* unit;
        double pul;
        double sul;
    };
    const std::vector<Row> rows = {
        {"frequency", "MHz", scenario.pul.frequency_mhz, scenario.sul.frequency_mhz},
        {"elevation", "deg", p.elevation_deg, s.elevation_deg},
        {"slant_range", "km", p.slant_range_km, s.slant_range_km},
        {"off_boresight", "deg", p.off_boresight_deg, s.off_boresight_deg},
        {"tx_power", "dBm", p.tx_power_dbm, s.tx_power_dbm},
        {"ue_gain", "dBi", p.ue_gain_dbi, s.ue_gain_dbi},
        {"sat_gain", "dBi", p.sat_gain_dbi, s.sat_gain_dbi},
        {"fspl", "dB", p.fspl_db, s.fspl_db},
        {"atm_loss", "dB", p.atm_loss_db, s.atm_loss_db},
        {"impl_loss", "dB", p.impl_loss_db, s.impl_loss_db},
        {"received_power", "dBm", p.received_power_dbm, s.received_power_dbm},
        {"noise_psd", "dBm/Hz", p.noise_psd_dbm_hz, s.noise_psd_dbm_hz},
        {"bandwidth", "Hz", scenario.pul.bandwidth_hz, scenario.sul.bandwidth_hz},
        {"noise_floor", "dBm", p.noise_floor_dbm, s.noise_floor_dbm},
        {"snr", "dB", p.snr_db, s.snr_db},
        {"predicted_snr", "dB", p.predicted_snr_db, s.predicted_snr_db},
        {"snr_req", "dB", p.snr_req_db, s.snr_req_db},
        {"margin", "dB", p.margin_db, s.margin_db},
        {"velocity_angle", "deg", p.velocity_angle_deg, s.velocity_angle_deg},
        {"doppler", "Hz", p.doppler_hz, s.doppler_hz},
    };

    if (csv) {
        out << kLinkBudgetHeader << '\n';
        for (const Row& r : rows) {
            out << r.quantity << ',' << r.unit << ',' << fixed6(r.pul) << ',' << fixed6(r.sul)
                << '\n';
        }
        return;
    }
    fmt::print(out, "{:<16}{:<8}{:>20}{:>20}\n", "quantity", "unit", "PUL", "SUL");
    for (const Row& r : rows) {
        fmt::print(out, "{:<16}{:<8}{:>20.6f}{:>20.6f}\n", r.quantity, r.unit, r.pul, r.sul);
    }
}

void cmd_snr_sweep(const ScenarioConfig& scenario, double target_min_db, double target_max_db,
                   double target_step_db, std::ostream& out) {
    const auto targets = inclusive_range(target_min_db, target_max_db, target_step_db, "snr-sweep");
    out << kSnrSweepHeader << '\n';
    for (const double t : targets) {
        const auto pul = min_elevation_for_target(scenario, t, UplinkMode::PulOnly);
        const auto sul = min_elevation_for_target(scenario, t, UplinkMode::SulEnabled);
        out << fixed6(t) << ',' << optional_fixed6(pul) << ',' << optional_fixed6(sul) << '\n';
    }
}

PassResult cmd_pass(const ScenarioConfig& scenario, UplinkMode mode, std::ostream& out) {
    PassResult result = run_pass(scenario, mode);
    out << kPassTraceHeader << '\n';
    for (const TraceEntry& e : result.trace) {
        const MarginSample& m = e.sample;
        out << fixed6(e.time_s) << ',' << fixed6(m.elevation_deg) << ',' << fixed6(m.slant_range_km)
            << ',' << fixed6(m.pul.snr_db) << ',' << fixed6(m.sul.snr_db) << ','
            << fixed6(m.pul.margin_db) << ',' << fixed6(m.sul.margin_db) << ','
            << fixed6(m.pul.doppler_hz) << ',' << fixed6(m.sul.doppler_hz) << ','
            << to_string(e.active_carrier) << ',' << (e.available ? 1 : 0) << '\n';
    }
    return result;
}

std::string pass_summary(const PassResult& result, UplinkMode mode) {
    return fmt::format("mode={} availability_fraction={:.6f} switch_count={}", to_string(mode),
                       result.availability_fraction, result.switch_count);
}

void cmd_hysteresis_sweep(const ScenarioConfig& scenario, double dh_min_db, double dh_max_db,
                          double dh_step_db, std::size_t n_seeds, std::ostream& out) {
    const auto values = inclusive_range(dh_min_db, dh_max_db, dh_step_db, "hysteresis-sweep");
    if (n_seeds == 0) throw UsageError("hysteresis-sweep: at least one seed is required");
    if (values.front() < 0.0) throw UsageError("hysteresis-sweep: hysteresis must be >= 0");
    const auto seeds = sweep_seeds(scenario.rng_seed, n_seeds);
    out << kHysteresisSweepHeader << '\n';
    for (const HysteresisRow& row : hysteresis_sweep(scenario, values, seeds)) {
        out << fixed6(row.hysteresis_db) << ',' << fixed6(row.mean_switches) << ','
            << fixed6(row.p95_switches) << '\n';
    }
}

}  // namespace sulsim
