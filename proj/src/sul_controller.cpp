#include "sulsim/sul_controller.hpp"

#include <cmath>

#include "sulsim/errors.hpp"

namespace sulsim {

void ControllerConfig::validate() const {
    if (!(safety_margin_db >= 0.0)) {
        throw ConfigError("controller.safety_margin_db", "must be >= 0");
    }
    if (!(hysteresis_margin_db >= 0.0)) {
        throw ConfigError("controller.hysteresis_margin_db", "must be >= 0");
    }
    if (!std::isfinite(safety_margin_db)) {
        throw ConfigError("controller.safety_margin_db", "must be finite");
    }
    if (!std::isfinite(hysteresis_margin_db)) {
        throw ConfigError("controller.hysteresis_margin_db", "must be finite");
    }
    if (!std::isfinite(snr_req_db)) throw ConfigError("controller.snr_req_db", "must be finite");
}

ControllerState step(const ControllerState& state, const ControllerConfig& cfg,
                     double margin_pul_db, double margin_sul_db) {
    ControllerState next = state;
    next.last_decision = Decision::Stay;

    if (state.active_carrier == Carrier::PUL) {
        if (margin_pul_db < cfg.safety_margin_db && margin_sul_db > 0.0) {
            next.active_carrier = Carrier::SUL;
            next.last_decision = Decision::SwitchToSUL;
        }
    } else if (margin_pul_db > cfg.safety_margin_db + cfg.hysteresis_margin_db) {
        next.active_carrier = Carrier::PUL;
        next.last_decision = Decision::SwitchToPUL;
    }

    if (next.last_decision != Decision::Stay) ++next.switch_count;
    return next;
}

Carrier initial_carrier(const ControllerConfig& cfg, double margin_pul_db,
                        double /*margin_sul_db*/) {
    if (margin_pul_db >= cfg.safety_margin_db) return Carrier::PUL;
    // SUL whether or not it closes the link; a dual outage camps on SUL.
    return Carrier::SUL;
}

}  // namespace sulsim
