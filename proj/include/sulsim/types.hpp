#pragma once

#include <optional>
#include <string_view>

namespace sulsim {

/// Uplink carrier. PUL is the high-frequency primary, SUL the low-frequency supplement.
enum class Carrier { PUL, SUL };

enum class BeamMode { UeCentered, NadirFixed };

enum class PassShape { AscendOnly, FullPass };

enum class AtmosphereKind { Constant, CosecantScaled };

/// Which carriers the UE may use during a pass.
enum class UplinkMode { PulOnly, SulEnabled };

std::string_view to_string(Carrier c) noexcept;
std::string_view to_string(BeamMode m) noexcept;
std::string_view to_string(PassShape s) noexcept;
std::string_view to_string(AtmosphereKind k) noexcept;
std::string_view to_string(UplinkMode m) noexcept;

std::optional<Carrier> parse_carrier(std::string_view s) noexcept;
std::optional<BeamMode> parse_beam_mode(std::string_view s) noexcept;
std::optional<PassShape> parse_pass_shape(std::string_view s) noexcept;
std::optional<AtmosphereKind> parse_atmosphere_kind(std::string_view s) noexcept;

}  // namespace sulsim
