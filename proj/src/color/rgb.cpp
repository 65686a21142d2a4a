#include "chromachain/color/rgb.hpp"

#include "chromachain/error.hpp"

#include <cmath>
#include <cstdio>

namespace chromachain::color {

namespace {

double srgb_to_linear(std::uint8_t v) {
  const double x = v / 255.0;
  return x <= 0.04045 ? x / 12.92 : std::pow((x + 0.055) / 1.055, 2.4);
}

// Returns the encoded value on the 0..255 scale, unrounded.
double linear_to_srgb(double v) {
  const double x = v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
  return 255.0 * x;
}

std::uint8_t round_half_up(double v) {
  const double r = std::floor(v + 0.5);
  return static_cast<std::uint8_t>(r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r));
}

nlohmann::json rgb_json(Rgb c) { return nlohmann::json::array({c.r, c.g, c.b}); }

Rgb rgb_from(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::kSchemaViolation,
                std::string("display_anchors.") + field + ": expected [r, g, b]");
  }
  std::array<std::uint8_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0 || j[i].get<int>() > 255) {
      throw Error(ErrorCode::kSchemaViolation,
                  std::string("display_anchors.") + field + ": channels must be integers in [0, 255]");
    }
    out[i] = static_cast<std::uint8_t>(j[i].get<int>());
  }
  return Rgb{out[0], out[1], out[2]};
}

}  // namespace

Rgb ncs_to_rgb(const NcsColor& c, const DisplayAnchors& anchors) {
  std::array<double, 3> full{0.0, 0.0, 0.0};
  if (!c.hue().is_neutral()) {
    const Rgb from = anchors.elementary[static_cast<std::size_t>(c.hue().start())];
    const Rgb to = anchors.elementary[static_cast<std::size_t>(next(c.hue().start()))];
    const double t = c.hue().percent() / 100.0;
    const std::array<std::uint8_t, 3> f{from.r, from.g, from.b};
    const std::array<std::uint8_t, 3> g{to.r, to.g, to.b};
    for (std::size_t i = 0; i < 3; ++i) {
      full[i] = linear_to_srgb((1.0 - t) * srgb_to_linear(f[i]) + t * srgb_to_linear(g[i]));
    }
  }
  const std::array<std::uint8_t, 3> white{anchors.white.r, anchors.white.g, anchors.white.b};
  const std::array<std::uint8_t, 3> black{anchors.black.r, anchors.black.g, anchors.black.b};
  std::array<std::uint8_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double mixed = (c.chromaticness() * full[i] + c.whiteness() * double(white[i]) +
                          c.blackness() * double(black[i])) /
                         100.0;
    out[i] = round_half_up(mixed);
  }
  return Rgb{out[0], out[1], out[2]};
}

std::string to_hex(Rgb rgb) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", rgb.r, rgb.g, rgb.b);
  return buf;
}

void to_json(nlohmann::json& j, const DisplayAnchors& a) {
  j = nlohmann::json{{"Y", rgb_json(a.elementary[0])}, {"R", rgb_json(a.elementary[1])},
                     {"B", rgb_json(a.elementary[2])}, {"G", rgb_json(a.elementary[3])},
                     {"white", rgb_json(a.white)},     {"black", rgb_json(a.black)}};
}

void from_json(const nlohmann::json& j, DisplayAnchors& a) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "display_anchors: expected object");
  DisplayAnchors out;
  const char* keys[] = {"Y", "R", "B", "G"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (j.contains(keys[i])) out.elementary[i] = rgb_from(j.at(keys[i]), keys[i]);
  }
  if (j.contains("white")) out.white = rgb_from(j.at("white"), "white");
  if (j.contains("black")) out.black = rgb_from(j.at("black"), "black");
  a = out;
}

}  // namespace chromachain::color
