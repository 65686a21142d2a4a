#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace chromachain::color {

/// The four chromatic elementary hues, in circle order Y -> R -> B -> G -> Y.
enum class ElementaryHue : std::uint8_t { kY = 0, kR = 1, kB = 2, kG = 3 };

char to_char(ElementaryHue h);
ElementaryHue next(ElementaryHue h);

/// Either Neutral, or a position `percent` of the way from `start` toward the
/// next elementary hue. percent is in [0, 100); 0 is the pure elementary hue.
class NcsHue {
 public:
  static NcsHue neutral() { return NcsHue(); }
  static NcsHue chromatic(ElementaryHue start, int percent);

  [[nodiscard]] bool is_neutral() const noexcept { return neutral_; }
  [[nodiscard]] ElementaryHue start() const noexcept { return start_; }
  [[nodiscard]] int percent() const noexcept { return percent_; }

  /// "N", "Y", "Y90R", ...
  [[nodiscard]] std::string code() const;

  friend bool operator==(const NcsHue&, const NcsHue&) = default;

 private:
  NcsHue() = default;
  bool neutral_ = true;
  ElementaryHue start_ = ElementaryHue::kY;
  int percent_ = 0;
};

/// One color in NCS terms. Whiteness is derived: 100 - blackness - chromaticness.
class NcsColor {
 public:
  /// Pure white, 0000-N.
  NcsColor() : NcsColor(0, 0, NcsHue::neutral()) {}
  /// Throws InvalidSum / InconsistentNeutral / InvalidColor when the triple
  /// breaks an invariant.
  NcsColor(int blackness, int chromaticness, NcsHue hue);

  [[nodiscard]] int blackness() const noexcept { return blackness_; }
  [[nodiscard]] int chromaticness() const noexcept { return chromaticness_; }
  [[nodiscard]] int whiteness() const noexcept { return 100 - blackness_ - chromaticness_; }
  [[nodiscard]] const NcsHue& hue() const noexcept { return hue_; }

  /// Same hue, different nuance. Neutral/chromatic consistency is re-checked.
  [[nodiscard]] NcsColor with_nuance(int blackness, int chromaticness) const;
  [[nodiscard]] NcsColor with_hue(NcsHue hue) const;

  /// The two-digit notation cannot express 100 in either field.
  [[nodiscard]] bool representable() const noexcept {
    return blackness_ <= 99 && chromaticness_ <= 99;
  }

  friend bool operator==(const NcsColor&, const NcsColor&) = default;

 private:
  int blackness_;
  int chromaticness_;
  NcsHue hue_;
};

/// Parses canonical `SSCC-H` notation (surrounding whitespace ignored).
NcsColor parse_ncs(std::string_view notation);

/// Canonical notation; throws NotationOverflow for a field equal to 100.
std::string format_ncs(const NcsColor& c);

/// Y=0, R=90, B=180, G=270; throws NeutralHasNoAngle.
double hue_angle(const NcsHue& h);

/// hue_angle in exact tenths of a degree (every NCS hue lands on the 0.9 grid).
int hue_angle_tenths(const NcsHue& h);

/// Minimal circular difference in degrees, in [0, 180].
double hue_distance(const NcsHue& a, const NcsHue& b);

/// Index of the quadrant (0=Y, 1=R, 2=B, 3=G) containing a chromatic hue.
int hue_family(const NcsHue& h);

}  // namespace chromachain::color

namespace nlohmann {
template <>
struct adl_serializer<chromachain::color::NcsColor> {
  static chromachain::color::NcsColor from_json(const json& j);
  static void to_json(json& j, const chromachain::color::NcsColor& c);
};
}  // namespace nlohmann
