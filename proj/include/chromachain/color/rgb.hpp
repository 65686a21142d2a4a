#pragma once

#include "chromachain/color/ncs.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <string>

namespace chromachain::color {

/// Display-referred 8-bit triple. Only an approximation of an NCS color.
struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Anchor colors for the RGB approximation. These are design constants, not
/// colorimetric truth; they can be overridden from the knowledge file.
struct DisplayAnchors {
  std::array<Rgb, 4> elementary{Rgb{255, 212, 0}, Rgb{198, 0, 58}, Rgb{0, 134, 191},
                                Rgb{0, 154, 107}};  // Y, R, B, G
  Rgb white{255, 255, 255};
  Rgb black{0, 0, 0};

  friend bool operator==(const DisplayAnchors&, const DisplayAnchors&) = default;
};

/// Full-chroma color F is interpolated between the two neighbouring anchors in
/// linear light, then mixed with white and black by the color's nuance:
/// (c*F + w*WHITE + s*BLACK) / 100, each channel rounded half-up.
Rgb ncs_to_rgb(const NcsColor& c, const DisplayAnchors& anchors = {});

/// "#RRGGBB", uppercase.
std::string to_hex(Rgb rgb);

void to_json(nlohmann::json& j, const DisplayAnchors& a);
void from_json(const nlohmann::json& j, DisplayAnchors& a);

}  // namespace chromachain::color
