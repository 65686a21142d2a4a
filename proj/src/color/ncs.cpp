#include "chromachain/color/ncs.hpp"

#include "chromachain/error.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <optional>

namespace chromachain::color {

namespace {

std::optional<ElementaryHue> hue_from_char(char c) {
  switch (c) {
    case 'Y': return ElementaryHue::kY;
    case 'R': return ElementaryHue::kR;
    case 'B': return ElementaryHue::kB;
    case 'G': return ElementaryHue::kG;
    default: return std::nullopt;
  }
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int two_digits(std::string_view s, std::size_t at) {
  return (s[at] - '0') * 10 + (s[at + 1] - '0');
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view notation, const char* why) {
  throw Error(ErrorCode::kMalformedNotation,
              "malformed NCS notation '" + std::string(notation) + "': " + why);
}

}  // namespace

char to_char(ElementaryHue h) {
  static constexpr std::array<char, 4> kChars{'Y', 'R', 'B', 'G'};
  return kChars[static_cast<std::size_t>(h)];
}

ElementaryHue next(ElementaryHue h) {
  return static_cast<ElementaryHue>((static_cast<int>(h) + 1) % 4);
}

NcsHue NcsHue::chromatic(ElementaryHue start, int percent) {
  if (percent < 0 || percent >= 100) {
    throw Error(ErrorCode::kInvalidColor,
                "hue percent must be in [0, 100), got " + std::to_string(percent));
  }
  NcsHue h;
  h.neutral_ = false;
  h.start_ = start;
  h.percent_ = percent;
  return h;
}

std::string NcsHue::code() const {
  if (neutral_) return "N";
  std::string out(1, to_char(start_));
  if (percent_ > 0) {
    out += static_cast<char>('0' + percent_ / 10);
    out += static_cast<char>('0' + percent_ % 10);
    out += to_char(next(start_));
  }
  return out;
}

NcsColor::NcsColor(int blackness, int chromaticness, NcsHue hue)
    : blackness_(blackness), chromaticness_(chromaticness), hue_(hue) {
  if (blackness < 0 || blackness > 100 || chromaticness < 0 || chromaticness > 100) {
    throw Error(ErrorCode::kInvalidColor, "blackness and chromaticness must be in [0, 100]");
  }
  if (blackness + chromaticness > 100) {
    throw Error(ErrorCode::kInvalidSum, "blackness + chromaticness = " +
                                            std::to_string(blackness + chromaticness) +
                                            " exceeds 100");
  }
  if ((chromaticness == 0) != hue.is_neutral()) {
    throw Error(ErrorCode::kInconsistentNeutral,
                chromaticness == 0 ? "chromaticness 0 requires the neutral hue N"
                                   : "neutral hue N requires chromaticness 0");
  }
}

NcsColor NcsColor::with_nuance(int blackness, int chromaticness) const {
  return NcsColor(blackness, chromaticness, hue_);
}

NcsColor NcsColor::with_hue(NcsHue hue) const { return NcsColor(blackness_, chromaticness_, hue); }

NcsColor parse_ncs(std::string_view raw) {
  const std::string_view s = trim(raw);
  // SSCC-N, SSCC-Y, SSCC-Y90R
  if (s.size() != 6 && s.size() != 9) malformed(raw, "expected SSCC-H");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_digit(s[i])) malformed(raw, "nuance must be four digits");
  }
  if (s[4] != '-') malformed(raw, "missing '-' after nuance");

  const int blackness = two_digits(s, 0);
  const int chromaticness = two_digits(s, 2);

  NcsHue hue = NcsHue::neutral();
  if (s.size() == 6) {
    if (s[5] != 'N') {
      auto h = hue_from_char(s[5]);
      if (!h) malformed(raw, "unknown hue code");
      hue = NcsHue::chromatic(*h, 0);
    }
  } else {
    auto from = hue_from_char(s[5]);
    auto to = hue_from_char(s[8]);
    if (!from || !to || !is_digit(s[6]) || !is_digit(s[7])) malformed(raw, "bad hue code");
    const int percent = two_digits(s, 6);
    if (percent == 0) malformed(raw, "a zero hue percent is written as the bare elementary hue");
    if (next(*from) != *to) {
      throw Error(ErrorCode::kNonAdjacentHuePair,
                  "hue pair " + std::string(1, to_char(*from)) + "->" +
                      std::string(1, to_char(*to)) + " is not adjacent on Y->R->B->G->Y");
    }
    hue = NcsHue::chromatic(*from, percent);
  }
  return NcsColor(blackness, chromaticness, hue);
}

std::string format_ncs(const NcsColor& c) {
  if (!c.representable()) {
    throw Error(ErrorCode::kNotationOverflow, "a nuance field of 100 has no SSCC notation");
  }
  std::string out;
  out.reserve(9);
  out += static_cast<char>('0' + c.blackness() / 10);
  out += static_cast<char>('0' + c.blackness() % 10);
  out += static_cast<char>('0' + c.chromaticness() / 10);
  out += static_cast<char>('0' + c.chromaticness() % 10);
  out += '-';
  out += c.hue().code();
  return out;
}

int hue_angle_tenths(const NcsHue& h) {
  if (h.is_neutral()) throw Error(ErrorCode::kNeutralHasNoAngle, "neutral hue has no angle");
  return 900 * static_cast<int>(h.start()) + 9 * h.percent();
}

double hue_angle(const NcsHue& h) { return hue_angle_tenths(h) / 10.0; }

double hue_distance(const NcsHue& a, const NcsHue& b) {
  int d = std::abs(hue_angle_tenths(a) - hue_angle_tenths(b));
  if (d > 1800) d = 3600 - d;
  return d / 10.0;
}

int hue_family(const NcsHue& h) {
  if (h.is_neutral()) throw Error(ErrorCode::kNeutralHasNoAngle, "neutral hue has no family");
  return static_cast<int>(h.start());
}

}  // namespace chromachain::color

namespace nlohmann {

chromachain::color::NcsColor adl_serializer<chromachain::color::NcsColor>::from_json(
    const json& j) {
  if (!j.is_string()) {
    throw chromachain::Error(chromachain::ErrorCode::kMalformedNotation,
                             "NCS color must be a notation string");
  }
  return chromachain::color::parse_ncs(j.get<std::string>());
}

void adl_serializer<chromachain::color::NcsColor>::to_json(
    json& j, const chromachain::color::NcsColor& c) {
  j = chromachain::color::format_ncs(c);
}

}  // namespace nlohmann
