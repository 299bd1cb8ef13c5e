#pragma once

#include <cstddef>

#include "sulsim/types.hpp"

namespace sulsim {

struct ControllerConfig {
    double safety_margin_db = 3.0;      // Δs: PUL margin below this is unreliable
    double hysteresis_margin_db = 3.0;  // Δh: extra clearance before returning to PUL
    double snr_req_db = 0.0;

    void validate() const;

    friend bool operator==(const ControllerConfig&, const ControllerConfig&) = default;
};

enum class Decision { Stay, SwitchToPUL, SwitchToSUL };

struct ControllerState {
    Carrier active_carrier = Carrier::PUL;
    std::size_t switch_count = 0;
    Decision last_decision = Decision::Stay;

    friend bool operator==(const ControllerState&, const ControllerState&) = default;
};

/// Elevation-aware SUL activation with hysteresis.
///
/// On PUL: move to SUL iff M_p < Δs and M_s > 0. On SUL: return to PUL iff
/// M_p > Δs + Δh. Comparisons are strict, so a margin sitting exactly on a threshold
/// never switches. The SUL side is gated on M_s > 0, not on Δs; the safety margin
/// only guards the PUL. When both margins are negative the controller keeps its
/// carrier; outage accounting belongs to the caller.
ControllerState step(const ControllerState& state, const ControllerConfig& cfg,
                     double margin_pul_db, double margin_sul_db);

/// Carrier to start a pass on: PUL when it clears the safety margin, otherwise SUL
/// (even if SUL has no margin either).
Carrier initial_carrier(const ControllerConfig& cfg, double margin_pul_db, double margin_sul_db);

}  // namespace sulsim
