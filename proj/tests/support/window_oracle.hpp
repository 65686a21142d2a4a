#pragma once

// Exact integer re-derivation of the role-window rule, independent of the
// validator's floating-point path. Areas are integer weights; a role passes
// when 100 * share lies in [lo - slack, hi + slack] percent.

#include "chromachain/color/scheme.hpp"
#include "chromachain/scene/scene.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace chromachain::testing {

struct PercentWindow {
  std::int64_t lo;
  std::int64_t hi;
};

// Defaults widened by the 5-point slack.
inline constexpr std::array<PercentWindow, 3> kSlackedWindows{{{55, 75}, {15, 35}, {0, 15}}};

inline bool oracle_windows_ok(const std::vector<std::int64_t>& weights, const std::vector<int>& roles,
                              const std::array<PercentWindow, 3>& w = kSlackedWindows) {
  std::int64_t total = 0;
  std::array<std::int64_t, 3> sums{};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    sums[static_cast<std::size_t>(roles[i])] += weights[i];
  }
  for (std::size_t r = 0; r < 3; ++r) {
    if (100 * sums[r] < w[r].lo * total || 100 * sums[r] > w[r].hi * total) return false;
  }
  return true;
}

/// Integer weights of a scene whose fractions are whole percents.
inline std::vector<std::int64_t> percent_weights(const std::vector<const scene::SceneElement*>& elements) {
  std::vector<std::int64_t> out;
  for (const auto* e : elements) out.push_back(std::llround(e->area_fraction * 100.0));
  return out;
}

/// The n largest colorable elements (ties keep scene order), renormalized to
/// sum to one, with adjacency restricted to the survivors.
inline scene::SceneSpec largest_subscene(const scene::SceneSpec& s, std::size_t n) {
  auto colorable = s.colorable_elements();
  std::stable_sort(colorable.begin(), colorable.end(),
                   [](const auto* a, const auto* b) { return a->area_fraction > b->area_fraction; });
  colorable.resize(std::min(n, colorable.size()));
  double total = 0.0;
  for (const auto* e : colorable) total += e->area_fraction;
  scene::SceneSpec out;
  out.id = s.id + "_top" + std::to_string(n);
  out.name = s.name;
  std::set<std::string> kept;
  for (const auto* e : colorable) {
    auto copy = *e;
    copy.area_fraction = e->area_fraction / total;
    copy.size_class = scene::size_class_for(copy.area_fraction);
    out.elements.push_back(copy);
    kept.insert(e->id);
  }
  std::vector<std::pair<std::string, std::string>> adj;
  for (const auto& [a, b] : s.adjacency()) {
    if (kept.count(a) && kept.count(b)) adj.emplace_back(a, b);
  }
  out.set_adjacency(std::move(adj));
  return out;
}

/// Role colors that clear the contrast rule pairwise, so only windows matter.
inline color::ColorScheme contrasting_scheme() {
  color::ColorScheme s;
  s.colors = {color::parse_ncs("0520-Y30R"), color::parse_ncs("2030-B"), color::parse_ncs("1060-R50B")};
  return s;
}

}  // namespace chromachain::testing
