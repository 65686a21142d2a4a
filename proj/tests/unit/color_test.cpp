#include "chromachain/color/ncs.hpp"
#include "chromachain/color/rgb.hpp"
#include "chromachain/color/scheme.hpp"
#include "chromachain/error.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

using namespace chromachain;
using namespace chromachain::color;

namespace {

ErrorCode code_of(const std::string& notation) {
  try {
    parse_ncs(notation);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << notation << " parsed without error";
  return ErrorCode::kUsage;
}

std::vector<NcsHue> all_chromatic_hues() {
  std::vector<NcsHue> out;
  for (int s = 0; s < 4; ++s) {
    for (int p = 0; p < 100; ++p) out.push_back(NcsHue::chromatic(static_cast<ElementaryHue>(s), p));
  }
  return out;
}

ColorScheme scheme_with_dominant(const std::string& dominant) {
  ColorScheme s;
  s.at(Role::kDominant) = parse_ncs(dominant);
  s.at(Role::kSecondary) = parse_ncs("1000-N");
  s.at(Role::kAccent) = parse_ncs("2000-N");
  return s;
}

}  // namespace

TEST(ParseNcs, ChromaticNotation) {
  const NcsColor c = parse_ncs("1050-Y90R");
  EXPECT_EQ(c.blackness(), 10);
  EXPECT_EQ(c.chromaticness(), 50);
  EXPECT_EQ(c.whiteness(), 40);
  ASSERT_FALSE(c.hue().is_neutral());
  EXPECT_EQ(c.hue().start(), ElementaryHue::kY);
  EXPECT_EQ(c.hue().percent(), 90);
}

TEST(ParseNcs, PureWhite) {
  const NcsColor c = parse_ncs("0000-N");
  EXPECT_EQ(c.blackness(), 0);
  EXPECT_EQ(c.chromaticness(), 0);
  EXPECT_TRUE(c.hue().is_neutral());
}

TEST(ParseNcs, SumOfHundredIsLegal) {
  const NcsColor c = parse_ncs("7030-B");
  EXPECT_EQ(c.blackness(), 70);
  EXPECT_EQ(c.chromaticness(), 30);
  EXPECT_EQ(c.hue(), NcsHue::chromatic(ElementaryHue::kB, 0));
  EXPECT_EQ(c.whiteness(), 0);
}

TEST(ParseNcs, TrimsWhitespace) { EXPECT_EQ(format_ncs(parse_ncs("  2030-G20Y\n")), "2030-G20Y"); }

TEST(ParseNcs, ErrorCodes) {
  EXPECT_EQ(code_of("1050Y90R"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("10-50-Y"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("1050-X"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("1050-y90r"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("1050-Y9R"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("1050-Y00R"), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of(""), ErrorCode::kMalformedNotation);
  EXPECT_EQ(code_of("6050-Y"), ErrorCode::kInvalidSum);
  EXPECT_EQ(code_of("1050-N"), ErrorCode::kInconsistentNeutral);
  EXPECT_EQ(code_of("1000-Y"), ErrorCode::kInconsistentNeutral);
  EXPECT_EQ(code_of("1000-Y20R"), ErrorCode::kInconsistentNeutral);
  EXPECT_EQ(code_of("3050-G20R"), ErrorCode::kNonAdjacentHuePair);
  // Adjacency is checked before the nuance sum.
  EXPECT_EQ(code_of("6050-G20R"), ErrorCode::kNonAdjacentHuePair);
  EXPECT_EQ(code_of("6050-G20Y"), ErrorCode::kInvalidSum);
  EXPECT_EQ(format_ncs(parse_ncs("3050-G20Y")), "3050-G20Y");
}

// Enumerate all 16 ordered pairs of elementary hues; exactly the four
// successor pairs on Y->R->B->G->Y are legal.
TEST(ParseNcs, AdjacencyTableOverAllOrderedPairs) {
  const std::string letters = "YRBG";
  int legal = 0;
  int rejected = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string n = std::string("2030-") + letters[i] + "20" + letters[j];
      const bool successor = j == (i + 1) % 4;
      if (successor) {
        EXPECT_EQ(format_ncs(parse_ncs(n)), n);
        ++legal;
      } else {
        EXPECT_EQ(code_of(n), ErrorCode::kNonAdjacentHuePair) << n;
        ++rejected;
      }
    }
  }
  EXPECT_EQ(legal, 4);
  EXPECT_EQ(rejected, 12);
}

TEST(FormatNcs, HundredHasNoNotation) {
  const NcsColor black(100, 0, NcsHue::neutral());
  EXPECT_FALSE(black.representable());
  EXPECT_THROW(format_ncs(black), Error);
}

TEST(NcsRoundTrip, RandomColors) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    const int black = static_cast<int>(rng() % 100);
    const int chroma = static_cast<int>(rng() % static_cast<unsigned>(std::min(99, 100 - black) + 1));
    NcsHue hue = NcsHue::neutral();
    if (chroma > 0) {
      hue = NcsHue::chromatic(static_cast<ElementaryHue>(rng() % 4), static_cast<int>(rng() % 100));
    }
    const NcsColor c(black, chroma, hue);
    const std::string text = format_ncs(c);
    ASSERT_EQ(parse_ncs(text), c) << text;
    ASSERT_EQ(format_ncs(parse_ncs(text)), text);
  }
}

TEST(HueAngle, Anchors) {
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-Y").hue()), 0.0);
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-R").hue()), 90.0);
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-B").hue()), 180.0);
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-G").hue()), 270.0);
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-Y90R").hue()), 81.0);
  EXPECT_DOUBLE_EQ(hue_angle(parse_ncs("1050-G50Y").hue()), 315.0);
  EXPECT_THROW(hue_angle(NcsHue::neutral()), Error);
}

TEST(HueDistance, Examples) {
  const auto h = [](const char* n) { return parse_ncs(n).hue(); };
  EXPECT_DOUBLE_EQ(hue_distance(h("1050-Y"), h("1050-R")), 90.0);
  EXPECT_DOUBLE_EQ(hue_distance(h("1050-Y90R"), h("1050-R")), 9.0);
  EXPECT_DOUBLE_EQ(hue_distance(h("1050-Y"), h("1050-G50Y")), 45.0);
  EXPECT_THROW(hue_distance(NcsHue::neutral(), h("1050-Y")), Error);
}

TEST(HueDistance, IsAMetricOnTheHueGrid) {
  const auto hues = all_chromatic_hues();
  for (const auto& a : hues) {
    for (const auto& b : hues) {
      const double ab = hue_distance(a, b);
      ASSERT_GE(ab, 0.0);
      ASSERT_LE(ab, 180.0);
      ASSERT_EQ(ab, hue_distance(b, a));
      ASSERT_EQ(ab == 0.0, a == b);
    }
  }
  // Triangle inequality on every 1-degree-or-finer triple would be 64M checks;
  // every third hue keeps it exhaustive over a 2.7 degree grid.
  for (std::size_t i = 0; i < hues.size(); i += 3) {
    for (std::size_t j = 0; j < hues.size(); ++j) {
      for (std::size_t k = 0; k < hues.size(); k += 3) {
        ASSERT_LE(hue_distance(hues[i], hues[k]),
                  hue_distance(hues[i], hues[j]) + hue_distance(hues[j], hues[k]) + 1e-9);
      }
    }
  }
}

TEST(NcsToRgb, Endpoints) {
  EXPECT_EQ(ncs_to_rgb(NcsColor(100, 0, NcsHue::neutral())), (Rgb{0, 0, 0}));
  EXPECT_EQ(ncs_to_rgb(NcsColor(0, 0, NcsHue::neutral())), (Rgb{255, 255, 255}));
}

// Golden values computed by an independent script applying the anchor model:
// sRGB anchors -> linear light, lerp by hue percent, re-encode, then
// (c*F + w*255)/100 rounded half-up.
TEST(NcsToRgb, FrozenGoldens) {
  EXPECT_EQ(ncs_to_rgb(parse_ncs("1050-Y90R")), (Rgb{204, 138, 129}));
  EXPECT_EQ(ncs_to_rgb(parse_ncs("0520-Y30R")), (Rgb{239, 227, 197}));
  EXPECT_EQ(ncs_to_rgb(parse_ncs("3060-B50G")), (Rgb{26, 112, 119}));
  EXPECT_EQ(ncs_to_rgb(parse_ncs("2040-G50Y")), (Rgb{177, 176, 133}));
  EXPECT_EQ(to_hex(ncs_to_rgb(parse_ncs("1050-Y90R"))), "#CC8A81");
}

TEST(NcsToRgb, ElementaryAnchorsAtFullChroma) {
  // blackness 0, chromaticness 100 is F itself.
  EXPECT_EQ(ncs_to_rgb(NcsColor(0, 100, NcsHue::chromatic(ElementaryHue::kR, 0))),
            (Rgb{198, 0, 58}));
}

TEST(NcsToRgb, Monotonicity) {
  for (const auto& hue : all_chromatic_hues()) {
    if (hue.percent() % 7 != 0) continue;
    for (int chroma = 1; chroma <= 60; chroma += 11) {
      Rgb prev = ncs_to_rgb(NcsColor(0, chroma, hue));
      for (int black = 1; black + chroma <= 100; ++black) {
        const Rgb cur = ncs_to_rgb(NcsColor(black, chroma, hue));
        ASSERT_LE(cur.r, prev.r);
        ASSERT_LE(cur.g, prev.g);
        ASSERT_LE(cur.b, prev.b);
        prev = cur;
      }
    }
    // whiteness -> 100 with blackness fixed at 0: chroma -> 0 approaches white.
    int prev_gap = 3 * 255;
    for (int chroma = 100; chroma >= 1; --chroma) {
      const Rgb c = ncs_to_rgb(NcsColor(0, chroma, hue));
      const int gap = (255 - c.r) + (255 - c.g) + (255 - c.b);
      ASSERT_LE(gap, prev_gap);
      prev_gap = gap;
    }
    EXPECT_LE(prev_gap, 9);
  }
}

// "1010-N" is not a legal color (hue N requires chromaticness 0); both legal
// neighbours land in the neutral / low-chroma branch.
TEST(ClassifyMood, NeutralLowChroma) {
  EXPECT_THROW(parse_ncs("1010-N"), Error);
  for (const char* dominant : {"1000-N", "1010-Y20R"}) {
    const ColorMood m = classify_mood(scheme_with_dominant(dominant));
    EXPECT_EQ(m.tones, Tone::kNeutral) << dominant;
    EXPECT_EQ(m.distance, Distance::kMedium) << dominant;
    EXPECT_EQ(m.heaviness, Heaviness::kLight) << dominant;
  }
}

TEST(ClassifyMood, WarmRed) {
  const ColorMood m = classify_mood(scheme_with_dominant("2060-R"));
  EXPECT_EQ(m.tones, Tone::kWarm);
  EXPECT_EQ(m.distance, Distance::kClose);
  EXPECT_EQ(m.heaviness, Heaviness::kMedium);
}

TEST(ClassifyMood, CoolBlue) {
  const ColorMood m = classify_mood(scheme_with_dominant("1020-B"));
  EXPECT_EQ(m.tones, Tone::kCool);
  EXPECT_EQ(m.distance, Distance::kFar);
  EXPECT_EQ(m.heaviness, Heaviness::kLight);
}

TEST(ClassifyMood, BoundaryAnglesAndChroma) {
  EXPECT_EQ(classify_tone(parse_ncs("1040-R50B")), Tone::kNeutral);  // 135 degrees
  EXPECT_EQ(classify_tone(parse_ncs("1040-G50Y")), Tone::kNeutral);  // 315 degrees
  EXPECT_EQ(classify_tone(parse_ncs("1040-R49B")), Tone::kWarm);
  EXPECT_EQ(classify_tone(parse_ncs("1040-R51B")), Tone::kCool);
  EXPECT_EQ(classify_tone(parse_ncs("1040-G51Y")), Tone::kWarm);
  EXPECT_EQ(classify_tone(parse_ncs("1010-R")), Tone::kNeutral);
  EXPECT_EQ(classify_tone(parse_ncs("1011-R")), Tone::kWarm);
  EXPECT_EQ(classify_mood(scheme_with_dominant("5020-B")).heaviness, Heaviness::kDark);
  EXPECT_EQ(classify_mood(scheme_with_dominant("4920-Y")).heaviness, Heaviness::kMedium);
}

TEST(ClassifyMood, TotalOverAllRepresentableDominants) {
  for (int black = 0; black <= 99; black += 3) {
    for (int chroma = 0; chroma + black <= 100 && chroma <= 99; chroma += 3) {
      std::vector<NcsHue> hues{NcsHue::neutral()};
      if (chroma > 0) hues = all_chromatic_hues();
      for (const auto& h : hues) {
        ColorScheme s;
        s.at(Role::kDominant) = NcsColor(black, chroma, h);
        const ColorMood m = classify_mood(s);
        ASSERT_GE(static_cast<int>(m.tones), 0);
        ASSERT_LE(static_cast<int>(m.tones), 2);
        ASSERT_LE(static_cast<int>(m.distance), 2);
        ASSERT_LE(static_cast<int>(m.heaviness), 2);
      }
    }
  }
}

TEST(SchemeJson, RoundTrip) {
  ColorScheme s;
  s.at(Role::kDominant) = parse_ncs("0520-Y30R");
  s.at(Role::kSecondary) = parse_ncs("3030-Y70R");
  s.at(Role::kAccent) = parse_ncs("1060-R10B");
  s.variations_of(Role::kDominant) = {parse_ncs("1520-Y30R")};
  s.reasoning = "cream walls";
  const nlohmann::json j = s;
  EXPECT_EQ(j.get<ColorScheme>(), s);
  EXPECT_EQ(j.at("dominant"), "0520-Y30R");
}

TEST(SchemeJson, RejectsTooManyVariations) {
  nlohmann::json j = {{"dominant", "0520-Y30R"},
                      {"secondary", "3030-Y70R"},
                      {"accent", "1060-R10B"},
                      {"variations", {{"dominant", {"1020-Y30R", "1520-Y30R", "2020-Y30R", "2520-Y30R"}}}}};
  EXPECT_THROW(j.get<ColorScheme>(), Error);
}
