#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdyn/error.hpp"

namespace vdyn {

using Json = nlohmann::ordered_json;

struct OrbitReport {
  std::string action;
  Json params = Json::object();
  std::uint64_t count = 0;
  std::vector<std::uint64_t> orbit_sizes;  // descending
  std::uint64_t order = 1;
  std::map<std::string, bool> checks;

  bool operator==(const OrbitReport&) const = default;
};

/// Cycle structure of a permutation given as image indices.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;  // each starts at its least index
};

/// Throws kNotBijective when `image` is not a permutation of [0, n).
CycleDecomposition decompose_permutation(const std::vector<std::size_t>& image);

std::uint64_t lcm_of(const std::vector<std::uint64_t>& sizes);

/// Partitions `elements` into cycles of `act`. Elements must be sorted and
/// distinct; an image outside the set or an element hit twice is an error.
template <class T, class Action>
OrbitReport orbit_decomposition(std::string action_name, Json params,
                                const std::vector<T>& elements, Action&& act) {
  std::vector<std::size_t> image(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const T next = act(elements[i]);
    auto it = std::lower_bound(elements.begin(), elements.end(), next);
    if (it == elements.end() || !(*it == next))
      throw Error(ErrorCode::kNotBijective, action_name + " maps an element outside the set");
    image[i] = static_cast<std::size_t>(it - elements.begin());
  }
  const auto cycles = decompose_permutation(image);

  OrbitReport report;
  report.action = std::move(action_name);
  report.params = std::move(params);
  report.count = elements.size();
  for (const auto& c : cycles.cycles) report.orbit_sizes.push_back(c.size());
  std::sort(report.orbit_sizes.rbegin(), report.orbit_sizes.rend());
  report.order = lcm_of(report.orbit_sizes);
  return report;
}

/// True when act^power fixes every element.
template <class T, class Action>
bool is_identity_power(const std::vector<T>& elements, Action&& act, int power) {
  for (const auto& x : elements) {
    T y = x;
    for (int i = 0; i < power; ++i) y = act(y);
    if (!(y == x)) return false;
  }
  return true;
}

}  // namespace vdyn
