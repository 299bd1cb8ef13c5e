#include "sulsim/pass_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sulsim/errors.hpp"

namespace sulsim {

void ScenarioConfig::validate() const {
    geometry.validate();
    pul.validate("pul");
    sul.validate("sul");
    atm_model.validate();
    controller.validate();
    if (pul.name != Carrier::PUL) throw ConfigError("pul.name", "must be PUL");
    if (sul.name != Carrier::SUL) throw ConfigError("sul.name", "must be SUL");
    if (!(sul.frequency_mhz < pul.frequency_mhz)) {
        throw ConfigError("sul.frequency_mhz",
                          "SUL carrier must sit below the PUL carrier (f_s < f_p)");
    }
    if (beam_mode == BeamMode::NadirFixed) {
        if (!pul.beamwidth_3db_deg) {
            throw ConfigError("pul.beamwidth_3db_deg", "required for NadirFixed beams");
        }
        if (!sul.beamwidth_3db_deg) {
            throw ConfigError("sul.beamwidth_3db_deg", "required for NadirFixed beams");
        }
    }
    if (!(noise_sigma_db >= 0.0) || !std::isfinite(noise_sigma_db)) {
        throw ConfigError("noise_sigma_db", "must be finite and >= 0");
    }
    if (!(sample_step_s > 0.0) || !std::isfinite(sample_step_s)) {
        throw ConfigError("sample_step_s", "must be finite and > 0");
    }
}

ScenarioConfig default_scenario() { return ScenarioConfig{}; }

MarginSample evaluate_margins(const ScenarioConfig& scenario, double elevation_deg,
                              double velocity_angle_deg) {
    MarginSample s;
    s.elevation_deg = elevation_deg;
    s.slant_range_km = slant_range_km(scenario.geometry, elevation_deg);
    s.velocity_angle_deg = velocity_angle_deg;
    const double off = off_boresight_angle_deg(scenario.geometry, elevation_deg, scenario.beam_mode);

    auto fill = [&](const CarrierConfig& carrier) {
        CarrierSample c;
        c.received_power_dbm =
            received_power_dbm(carrier, scenario.atm_model, elevation_deg, off, scenario.geometry);
        c.snr_db = predicted_snr_db(carrier, scenario.atm_model, elevation_deg, off, scenario.geometry);
        c.margin_db = c.snr_db - scenario.controller.snr_req_db;
        c.doppler_hz =
            doppler_shift_hz(carrier.frequency_mhz, kLeoSatelliteSpeedKmS, velocity_angle_deg);
        return c;
    };
    s.pul = fill(scenario.pul);
    s.sul = fill(scenario.sul);
    return s;
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

PassResult run_pass(const ScenarioConfig& scenario, UplinkMode mode) {
    scenario.validate();
    const PassProfile profile =
        build_pass_profile(scenario.geometry, scenario.pass_shape, scenario.sample_step_s);

    auto engine = make_engine(scenario.rng_seed);
    std::normal_distribution<double> noise(0.0, scenario.noise_sigma_db);
    const bool perturbed = scenario.noise_sigma_db > 0.0;

    PassResult result;
    result.trace.reserve(profile.samples.size());
    ControllerState state;
    std::size_t available_count = 0;

    for (const PassSample& p : profile.samples) {
        TraceEntry e;
        e.time_s = p.time_s;
        e.sample = evaluate_margins(scenario, p.elevation_deg, p.velocity_angle_deg);
        e.observed_margin_pul_db = e.sample.pul.margin_db;
        e.observed_margin_sul_db = e.sample.sul.margin_db;
        if (perturbed) {
            e.observed_margin_pul_db += noise(engine);
            e.observed_margin_sul_db += noise(engine);
        }

        if (mode == UplinkMode::PulOnly) {
            state.active_carrier = Carrier::PUL;
        } else if (result.trace.empty()) {
            state.active_carrier = initial_carrier(scenario.controller, e.observed_margin_pul_db,
                                                   e.observed_margin_sul_db);
        } else {
            state = step(state, scenario.controller, e.observed_margin_pul_db,
                         e.observed_margin_sul_db);
        }

        e.active_carrier = state.active_carrier;
        const double active_margin =
            e.active_carrier == Carrier::PUL ? e.sample.pul.margin_db : e.sample.sul.margin_db;
        e.available = active_margin >= 0.0;
        if (e.available) ++available_count;
        result.trace.push_back(e);
    }

    result.switch_count = state.switch_count;
    result.availability_fraction =
        result.trace.empty()
            ? 0.0
            : static_cast<double>(available_count) / static_cast<double>(result.trace.size());
    result.availability_cdf = availability_cdf(result);
    return result;
}

std::vector<CdfPoint> availability_cdf(const PassResult& result) {
    const auto& trace = result.trace;
    const auto total = static_cast<std::size_t>(
        std::count_if(trace.begin(), trace.end(), [](const TraceEntry& e) { return e.available; }));
    if (total == 0) return {};

    std::vector<std::size_t> order(trace.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trace[a].sample.elevation_deg < trace[b].sample.elevation_deg;
    });

    std::vector<CdfPoint> cdf;
    cdf.reserve(order.size());
    std::size_t running = 0;
    for (const std::size_t i : order) {
        if (trace[i].available) ++running;
        cdf.push_back({trace[i].sample.elevation_deg,
                       static_cast<double>(running) / static_cast<double>(total)});
    }
    return cdf;
}

std::optional<double> min_elevation_for_target(const ScenarioConfig& scenario,
                                               double target_snr_db, UplinkMode mode) {
    scenario.validate();
    if (!std::isfinite(target_snr_db)) throw DomainError("target SNR must be finite");

    constexpr double kScanStepDeg = 0.1;
    constexpr double kToleranceDeg = 0.01;
    const double lo_limit = scenario.geometry.min_elevation_deg;

    auto feasible = [&](double el) {
        const double off = off_boresight_angle_deg(scenario.geometry, el, scenario.beam_mode);
        double best = predicted_snr_db(scenario.pul, scenario.atm_model, el, off, scenario.geometry);
        if (mode == UplinkMode::SulEnabled) {
            best = std::max(best, predicted_snr_db(scenario.sul, scenario.atm_model, el, off,
                                                   scenario.geometry));
        }
        return best - target_snr_db >= 0.0;
    };

    if (feasible(lo_limit)) return lo_limit;

    const auto steps = static_cast<long>(std::ceil((90.0 - lo_limit) / kScanStepDeg - 1e-9));
    double prev = lo_limit;
    for (long k = 1; k <= steps; ++k) {
        const double el = std::min(90.0, lo_limit + static_cast<double>(k) * kScanStepDeg);
        if (feasible(el)) {
            double lo = prev;
            double hi = el;
            while (hi - lo > kToleranceDeg) {
                const double mid = 0.5 * (lo + hi);
                (feasible(mid) ? hi : lo) = mid;
            }
            return hi;
        }
        prev = el;
    }
    return std::nullopt;
}

double nearest_rank_percentile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("percentile of an empty sample");
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    const auto rank = static_cast<std::size_t>(std::max(1.0, std::ceil(p / 100.0 * n)));
    return values[std::min(rank, values.size()) - 1];
}

std::vector<std::uint64_t> sweep_seeds(std::uint64_t base, std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    std::iota(seeds.begin(), seeds.end(), base);
    return seeds;
}

std::vector<HysteresisRow> hysteresis_sweep(const ScenarioConfig& scenario,
                                            std::span<const double> hysteresis_values_db,
                                            std::span<const std::uint64_t> seeds) {
    if (hysteresis_values_db.empty()) throw ConfigError("hysteresis_values_db", "must not be empty");
    if (seeds.empty()) throw ConfigError("seeds", "must not be empty");

    std::vector<HysteresisRow> rows;
    rows.reserve(hysteresis_values_db.size());
    for (const double dh : hysteresis_values_db) {
        ScenarioConfig s = scenario;
        s.controller.hysteresis_margin_db = dh;
        std::vector<double> counts;
        counts.reserve(seeds.size());
        for (const std::uint64_t seed : seeds) {
            s.rng_seed = seed;
            counts.push_back(static_cast<double>(run_pass(s).switch_count));
        }
        const double mean =
            std::accumulate(counts.begin(), counts.end(), 0.0) / static_cast<double>(counts.size());
        rows.push_back({dh, mean, nearest_rank_percentile(std::move(counts), 95.0)});
    }
    return rows;
}

}  // namespace sulsim
