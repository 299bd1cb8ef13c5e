#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sulsim/commands.hpp"
#include "sulsim/errors.hpp"

using namespace sulsim;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string row_of(const std::string& csv, const std::string& quantity) {
    for (const auto& l : lines(csv)) {
        if (l.rfind(quantity + ",", 0) == 0) return l;
    }
    return {};
}

}  // namespace

TEST_CASE("link-budget CSV carries every term") {
    auto s = default_scenario();
    s.atm_model.kind = AtmosphereKind::Constant;
    std::ostringstream out;
    cmd_link_budget(s, 90.0, true, out);
    const auto csv = out.str();
    CHECK(lines(csv).front() == kLinkBudgetHeader);
    CHECK(row_of(csv, "snr") == "snr,dB,-4.921170,16.904575");
    CHECK(row_of(csv, "predicted_snr") == "predicted_snr,dB,-4.921170,16.904575");
    CHECK(row_of(csv, "fspl") == "fspl,dB,177.555450,152.095425");
    CHECK(row_of(csv, "slant_range") == "slant_range,km,600.000000,600.000000");
    CHECK(row_of(csv, "velocity_angle") == "velocity_angle,deg,90.000000,90.000000");
    for (const char* q : {"tx_power", "ue_gain", "sat_gain", "atm_loss", "impl_loss",
                          "received_power", "noise_psd", "noise_floor", "margin", "doppler"}) {
        CHECK(!row_of(csv, q).empty());
    }

    std::ostringstream low;
    cmd_link_budget(s, 10.0, true, low);
    CHECK(split(row_of(low.str(), "snr"))[3] == "6.749097");

    std::ostringstream text;
    cmd_link_budget(s, 45.0, false, text);
    CHECK(text.str().find("received_power") != std::string::npos);

    std::ostringstream bad;
    CHECK_THROWS_AS(cmd_link_budget(s, 95.0, true, bad), DomainError);
}

TEST_CASE("snr-sweep CSV") {
    std::ostringstream out;
    cmd_snr_sweep(default_scenario(), 0.0, 10.0, 1.0, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == kSnrSweepHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i]);
        REQUIRE(cells.size() == 3);
        CHECK(std::stod(cells[0]) == doctest::Approx(static_cast<double>(i - 1)));
        REQUIRE(!cells[2].empty());
        if (!cells[1].empty()) CHECK(std::stod(cells[1]) >= std::stod(cells[2]));
    }
    CHECK(std::stod(split(rows[1])[2]) <= 15.0);
    // PUL peaks near 7.5 dB, so targets of 8 dB and above are unreachable on PUL alone.
    CHECK(split(rows[9])[1].empty());

    std::ostringstream bad;
    CHECK_THROWS_AS(cmd_snr_sweep(default_scenario(), 5.0, 0.0, 1.0, bad), UsageError);
    CHECK_THROWS_AS(cmd_snr_sweep(default_scenario(), 0.0, 5.0, 0.0, bad), UsageError);
}

TEST_CASE("pass CSV is stable and well-formed") {
    std::ostringstream a;
    std::ostringstream b;
    const auto ra = cmd_pass(default_scenario(), UplinkMode::SulEnabled, a);
    cmd_pass(default_scenario(), UplinkMode::SulEnabled, b);
    CHECK(a.str() == b.str());

    const auto rows = lines(a.str());
    REQUIRE(rows.size() == ra.trace.size() + 1);
    CHECK(rows[0] == kPassTraceHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i]);
        REQUIRE(cells.size() == 11);
        CHECK((cells[9] == "PUL" || cells[9] == "SUL"));
        CHECK((cells[10] == "0" || cells[10] == "1"));
        const auto dot = cells[1].find('.');
        REQUIRE(dot != std::string::npos);
        CHECK(cells[1].size() - dot - 1 == 6);
    }

    std::ostringstream pul;
    const auto rp = cmd_pass(default_scenario(), UplinkMode::PulOnly, pul);
    CHECK(ra.availability_fraction > rp.availability_fraction);
    CHECK(pass_summary(ra, UplinkMode::SulEnabled) ==
          "mode=SulEnabled availability_fraction=1.000000 switch_count=1");
}

TEST_CASE("hysteresis-sweep CSV") {
    std::ostringstream out;
    cmd_hysteresis_sweep(default_scenario(), 0.0, 3.0, 0.5, 3, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == kHysteresisSweepHeader);
    CHECK(rows[1] == "0.000000,1.000000,1.000000");

    std::ostringstream bad;
    CHECK_THROWS_AS(cmd_hysteresis_sweep(default_scenario(), 0.0, 3.0, 0.5, 0, bad), UsageError);
    CHECK_THROWS_AS(cmd_hysteresis_sweep(default_scenario(), -1.0, 3.0, 0.5, 2, bad), UsageError);
}

TEST_CASE("inclusive range") {
    CHECK(inclusive_range(0.0, 6.0, 0.5, "x").size() == 13);
    CHECK(inclusive_range(0.0, 1.0, 0.1, "x").size() == 11);
    CHECK(inclusive_range(2.0, 2.0, 1.0, "x").size() == 1);
}
