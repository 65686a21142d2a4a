#include "chromachain/error.hpp"
#include "chromachain/validate/validators.hpp"

#include "../support/design_cases.hpp"
#include "../support/window_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromachain;
using namespace chromachain::validate;
using chromachain::testing::make_scheme;

namespace {

const std::filesystem::path kScenes = std::filesystem::path(CHROMACHAIN_DATA_DIR) / "scenes";

const knowledge::CompositionRules kRules{};

scene::ColorAssignment roles_to_assignment(const scene::SceneSpec& s, const color::ColorScheme& scheme,
                                           const std::vector<int>& roles) {
  scene::ColorAssignment a;
  const auto elements = s.colorable_elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto r = static_cast<color::Role>(roles[i]);
    a.elements.push_back({elements[i]->id, r, scheme.at(r)});
  }
  return a;
}

}  // namespace

TEST(ValidateScheme, DesignerCases) {
  for (const auto& c : chromachain::testing::scheme_cases()) {
    const auto report = validate_scheme(c.scheme, c.concepts, kRules);
    EXPECT_EQ(report.codes(), c.expected) << c.name;
    EXPECT_EQ(report.passed(), c.expected.empty()) << c.name;
  }
}

TEST(ValidateScheme, SeventySixtyIsNotANotation) {
  // The literal 70/60 nuance sums past 100; the dark case uses 4555 instead.
  EXPECT_THROW(color::parse_ncs("7060-Y90R"), Error);
}

TEST(ValidateScheme, ThresholdsAreInclusive) {
  auto c = chromachain::testing::scheme_cases()[0].concepts;
  EXPECT_TRUE(validate_scheme(make_scheme("4050-Y90R", "4030-Y70R", "2060-R"), c, kRules).passed());
  EXPECT_EQ(validate_scheme(make_scheme("4150-Y90R", "4030-Y70R", "2060-R"), c, kRules).codes(),
            (std::set<std::string>{"DOMINANT_TOO_DARK"}));
  EXPECT_EQ(validate_scheme(make_scheme("4051-Y90R", "4030-Y70R", "2060-R"), c, kRules).codes(),
            (std::set<std::string>{"DOMINANT_TOO_SATURATED"}));
}

TEST(ValidateScheme, NeutralRequestOnlyWarns) {
  auto c = chromachain::testing::concepts({"Calm"}, color::Tone::kNeutral, color::Distance::kMedium,
                                          color::Heaviness::kLight);
  const auto report = validate_scheme(make_scheme("1030-Y90R", "3020-Y70R", "2040-R"), c, kRules);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].rule_code, RuleCode::kToneMismatch);
  EXPECT_EQ(report.violations[0].severity, Severity::kWarning);
  EXPECT_TRUE(report.passed());
  nlohmann::json j = report;
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["violations"][0]["severity"], "warning");
}

TEST(ValidateScheme, VariationHueMustMatch) {
  auto s = make_scheme("1050-Y90R", "4030-Y70R", "2060-R");
  auto c = chromachain::testing::scheme_cases()[0].concepts;
  s.variations_of(color::Role::kDominant) = {color::parse_ncs("2040-Y90R")};
  EXPECT_TRUE(validate_scheme(s, c, kRules).passed());
  s.variations_of(color::Role::kDominant).push_back(color::parse_ncs("2040-Y80R"));
  EXPECT_EQ(validate_scheme(s, c, kRules).codes(), (std::set<std::string>{"HUE_SHIFT_EXCEEDED"}));
}

TEST(ValidateScheme, ReplacementDominantShift) {
  auto c = chromachain::testing::scheme_cases()[0].concepts;
  const auto before = make_scheme("1050-Y90R", "4030-Y70R", "2060-R");
  const auto near = make_scheme("1050-Y80R", "4030-Y70R", "2060-R");   // 9 deg
  const auto far = make_scheme("1050-Y60R", "4030-Y70R", "2060-R");    // 27 deg
  EXPECT_TRUE(validate_scheme(near, c, kRules, &before).passed());
  EXPECT_EQ(validate_scheme(far, c, kRules, &before).codes(), (std::set<std::string>{"HUE_SHIFT_EXCEEDED"}));
  EXPECT_TRUE(validate_scheme(far, c, kRules).passed());
}

TEST(HueFamilySpan, Examples) {
  EXPECT_EQ(hue_family_span(make_scheme("1000-N", "2000-N", "3000-N")), 0);
  EXPECT_EQ(hue_family_span(make_scheme("1020-Y10R", "2020-Y20R", "3000-N")), 1);
  EXPECT_EQ(hue_family_span(make_scheme("1050-Y90R", "4030-Y70R", "2060-R")), 2);
  EXPECT_EQ(hue_family_span(make_scheme("1030-B", "4030-Y70R", "2060-R")), 3);
  EXPECT_EQ(hue_family_span(make_scheme("1010-Y70R", "2030-B", "1040-G50Y")), 4);
  // wraps through Y at 0 degrees
  EXPECT_EQ(hue_family_span(make_scheme("1020-G80Y", "1020-Y10R", "1020-G90Y")), 2);
}

TEST(HueFamilySpan, NeverBelowDistinctQuadrants) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    color::ColorScheme s;
    std::set<int> quadrants;
    for (auto& c : s.colors) {
      const auto start = static_cast<color::ElementaryHue>(rng() % 4);
      c = color::NcsColor(10, 20, color::NcsHue::chromatic(start, static_cast<int>(rng() % 100)));
      quadrants.insert(color::hue_family(c.hue()));
    }
    const int span = hue_family_span(s);
    EXPECT_GE(span, static_cast<int>(quadrants.size()));
    EXPECT_LE(span, 4);
  }
}

TEST(ValidateAssignment, DesignerCases) {
  const auto bedroom = scene::load_scene(kScenes / "bedroom.json");
  for (const auto& c : chromachain::testing::assignment_cases(bedroom)) {
    const auto report = validate_assignment(c.assignment, bedroom, chromachain::testing::bedroom_scheme(), kRules);
    EXPECT_EQ(report.codes(), c.expected) << c.name;
  }
}

TEST(ValidateAssignment, CoverageErrors) {
  const auto bedroom = scene::load_scene(kScenes / "bedroom.json");
  auto a = chromachain::testing::assign_roles(bedroom, chromachain::testing::bedroom_scheme(),
                                              chromachain::testing::bedroom_roles());
  const auto scheme = chromachain::testing::bedroom_scheme();
  auto expect_code = [&](const scene::ColorAssignment& x, ErrorCode code) {
    try {
      (void)validate_assignment(x, bedroom, scheme, kRules);
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  auto missing = a;
  missing.elements.pop_back();
  expect_code(missing, ErrorCode::kUncoveredElement);
  auto extra = a;
  extra.elements.push_back({"chandelier", color::Role::kAccent, scheme.at(color::Role::kAccent)});
  expect_code(extra, ErrorCode::kUnknownElement);
  auto twice = a;
  twice.elements.push_back(a.elements.front());
  expect_code(twice, ErrorCode::kUnknownElement);
}

TEST(ValidateAssignment, Deterministic) {
  const auto bedroom = scene::load_scene(kScenes / "bedroom.json");
  const auto cases = chromachain::testing::assignment_cases(bedroom);
  for (const auto& c : cases) {
    const auto a = validate_assignment(c.assignment, bedroom, chromachain::testing::bedroom_scheme(), kRules);
    const auto b = validate_assignment(c.assignment, bedroom, chromachain::testing::bedroom_scheme(), kRules);
    EXPECT_EQ(a, b);
    EXPECT_EQ(nlohmann::json(a).dump(), nlohmann::json(b).dump());
  }
}

TEST(ValidateAssignment, BruteForceMatchesOracle) {
  const auto scheme = chromachain::testing::contrasting_scheme();
  auto reg = scene::SceneRegistry::load_directory(kScenes);
  std::mt19937_64 rng(11);
  // Bundled top-8 restrictions plus random small scenes in integer percents.
  std::vector<std::pair<scene::SceneSpec, std::vector<std::int64_t>>> scenes;
  for (const auto& id : reg.ids()) {
    auto sub = chromachain::testing::largest_subscene(reg.get(id), 8);
    std::vector<std::int64_t> w;
    for (const auto& e : sub.elements) w.push_back(std::llround(reg.get(id).find(e.id)->area_fraction * 100.0));
    scenes.emplace_back(std::move(sub), std::move(w));
  }
  for (int k = 0; k < 12; ++k) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n), 1);
    for (int left = 100 - n; left > 0; --left) ++w[rng() % w.size()];
    scene::SceneSpec s;
    s.id = "random" + std::to_string(k);
    s.name = s.id;
    std::vector<std::pair<std::string, std::string>> adj;
    for (int i = 0; i < n; ++i) {
      const double f = static_cast<double>(w[static_cast<std::size_t>(i)]) / 100.0;
      s.elements.push_back({"e" + std::to_string(i), "thing", scene::size_class_for(f), f, true, std::nullopt});
      if (i > 0) adj.emplace_back("e" + std::to_string(i - 1), "e" + std::to_string(i));
    }
    s.set_adjacency(adj);
    scenes.emplace_back(s, w);
  }
  for (auto& [s, w] : scenes) {
    const auto elements = s.colorable_elements();
    const std::size_t n = elements.size();
    const auto& weights = w;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    std::vector<int> roles(n);
    std::size_t mismatches = 0;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t x = code;
      for (std::size_t i = 0; i < n; ++i, x /= 3) roles[i] = static_cast<int>(x % 3);
      const bool expected = chromachain::testing::oracle_windows_ok(weights, roles);
      const bool got = validate_assignment(roles_to_assignment(s, scheme, roles), s, scheme, kRules).passed();
      if (expected != got) ++mismatches;
    }
    EXPECT_EQ(mismatches, 0u) << s.id;
  }
}

TEST(ValidateAssignment, AddingWindowKeepingElementStaysPassing) {
  const auto scheme = chromachain::testing::contrasting_scheme();
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 50000 && checked < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n) + 1, 1);
    for (int left = 100 - n - 1; left > 0; --left) ++w[rng() % w.size()];
    std::vector<int> roles(w.size());
    for (auto& r : roles) r = static_cast<int>(rng() % 3);
    std::vector<std::int64_t> base_w(w.begin(), w.end() - 1);
    std::vector<int> base_roles(roles.begin(), roles.end() - 1);
    if (!chromachain::testing::oracle_windows_ok(base_w, base_roles)) continue;
    if (!chromachain::testing::oracle_windows_ok(w, roles)) continue;

    auto build = [&](std::size_t count) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < count; ++i) total += w[i];
      scene::SceneSpec s;
      s.id = "grow";
      s.name = "grow";
      std::vector<std::pair<std::string, std::string>> adj;
      for (std::size_t i = 0; i < count; ++i) {
        const double f = static_cast<double>(w[i]) / static_cast<double>(total);
        s.elements.push_back({"e" + std::to_string(i), "thing", scene::size_class_for(f), f, true, std::nullopt});
        if (i > 0) adj.emplace_back("e0", "e" + std::to_string(i));
      }
      s.set_adjacency(adj);
      return s;
    };
    const auto before = build(base_w.size());
    const auto after = build(w.size());
    ASSERT_TRUE(validate_assignment(roles_to_assignment(before, scheme, base_roles), before, scheme, kRules).passed());
    EXPECT_TRUE(validate_assignment(roles_to_assignment(after, scheme, roles), after, scheme, kRules).passed());
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(ContrastHueDelta, AchromaticRules) {
  EXPECT_EQ(contrast_hue_delta(color::parse_ncs("1000-N"), color::parse_ncs("5000-N")), 0.0);
  EXPECT_EQ(contrast_hue_delta(color::parse_ncs("1000-N"), color::parse_ncs("1020-Y")), 180.0);
  EXPECT_NEAR(contrast_hue_delta(color::parse_ncs("0520-Y30R"), color::parse_ncs("0525-Y40R")), 9.0, 1e-9);
}

TEST(ValidateAssignment, DegenerateSceneRelaxesWindows) {
  scene::SceneSpec s;
  s.id = "closet";
  s.name = "Closet";
  s.elements.push_back({"wall", "wall", scene::SizeClass::kLarge, 1.0, true, std::nullopt});
  const auto scheme = chromachain::testing::contrasting_scheme();
  scene::ColorAssignment a;
  a.elements.push_back({"wall", color::Role::kDominant, scheme.at(color::Role::kDominant)});
  const auto report = validate_assignment(a, s, scheme, kRules);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.codes(), (std::set<std::string>{"RATIO_WINDOW_MISS"}));
  for (const auto& v : report.violations) EXPECT_EQ(v.severity, Severity::kWarning);
}

TEST(ValidateScheme, OppositeSecondaryIsAWarning) {
  const auto warm = chromachain::testing::concepts({"Farmhouse"}, color::Tone::kWarm, color::Distance::kClose,
                                                   color::Heaviness::kMedium);
  const auto s = chromachain::testing::make_scheme("1050-Y90R", "2030-B", "2060-R");
  const auto report = validate_scheme(s, warm, kRules);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].rule_code, RuleCode::kToneMismatch);
  EXPECT_EQ(report.violations[0].severity, Severity::kWarning);
  EXPECT_EQ(report.violations[0].subject, "secondary");
  // A neutral secondary is fine.
  EXPECT_TRUE(validate_scheme(chromachain::testing::make_scheme("1050-Y90R", "2000-N", "2060-R"), warm, kRules)
                  .violations.empty());
}
