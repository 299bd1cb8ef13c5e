#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "sulsim/pass_sim.hpp"

namespace sulsim {

inline constexpr const char* kSnrSweepHeader =
    "target_snr_db,min_elev_pul_deg,min_elev_sul_enabled_deg";
inline constexpr const char* kPassTraceHeader =
    "time_s,elevation_deg,slant_range_km,snr_pul_db,snr_sul_db,margin_pul_db,margin_sul_db,"
    "doppler_pul_hz,doppler_sul_hz,active_carrier,available";
inline constexpr const char* kHysteresisSweepHeader = "hysteresis_db,mean_switches,p95_switches";
inline constexpr const char* kLinkBudgetHeader = "quantity,unit,pul,sul";

/// Per-carrier breakdown of every budget term at one elevation. Doppler is reported
/// for the approaching half of an overhead pass.
void cmd_link_budget(const ScenarioConfig& scenario, double elevation_deg, bool csv,
                     std::ostream& out);

void cmd_snr_sweep(const ScenarioConfig& scenario, double target_min_db, double target_max_db,
                   double target_step_db, std::ostream& out);

/// Writes the trace CSV and returns the result for the summary line.
PassResult cmd_pass(const ScenarioConfig& scenario, UplinkMode mode, std::ostream& out);

std::string pass_summary(const PassResult& result, UplinkMode mode);

void cmd_hysteresis_sweep(const ScenarioConfig& scenario, double dh_min_db, double dh_max_db,
                          double dh_step_db, std::size_t n_seeds, std::ostream& out);

/// Inclusive arithmetic grid lo, lo + step, ... <= hi. Throws UsageError on a bad range.
std::vector<double> inclusive_range(double lo, double hi, double step, const char* what);

}  // namespace sulsim
