#include "sulsim/types.hpp"

namespace sulsim {

std::string_view to_string(Carrier c) noexcept { return c == Carrier::PUL ? "PUL" : "SUL"; }

std::string_view to_string(BeamMode m) noexcept {
    return m == BeamMode::UeCentered ? "UeCentered" : "NadirFixed";
}

std::string_view to_string(PassShape s) noexcept {
    return s == PassShape::AscendOnly ? "AscendOnly" : "FullPass";
}

std::string_view to_string(AtmosphereKind k) noexcept {
    return k == AtmosphereKind::Constant ? "Constant" : "CosecantScaled";
}

std::string_view to_string(UplinkMode m) noexcept {
    return m == UplinkMode::PulOnly ? "PulOnly" : "SulEnabled";
}

std::optional<Carrier> parse_carrier(std::string_view s) noexcept {
    if (s == "PUL") return Carrier::PUL;
    if (s == "SUL") return Carrier::SUL;
    return std::nullopt;
}

std::optional<BeamMode> parse_beam_mode(std::string_view s) noexcept {
    if (s == "UeCentered") return BeamMode::UeCentered;
    if (s == "NadirFixed") return BeamMode::NadirFixed;
    return std::nullopt;
}

std::optional<PassShape> parse_pass_shape(std::string_view s) noexcept {
    if (s == "AscendOnly") return PassShape::AscendOnly;
    if (s == "FullPass") return PassShape::FullPass;
    return std::nullopt;
}

std::optional<AtmosphereKind> parse_atmosphere_kind(std::string_view s) noexcept {
    if (s == "Constant") return AtmosphereKind::Constant;
    if (s == "CosecantScaled") return AtmosphereKind::CosecantScaled;
    return std::nullopt;
}

}  // namespace sulsim
