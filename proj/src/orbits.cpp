#include "vdyn/orbits.hpp"

namespace vdyn {

CycleDecomposition decompose_permutation(const std::vector<std::size_t>& image) {
  const std::size_t n = image.size();
  std::vector<char> hit(n, 0);
  for (std::size_t j : image) {
    if (j >= n) throw Error(ErrorCode::kNotBijective, "image index outside the set");
    if (hit[j]) throw Error(ErrorCode::kNotBijective, "element has two preimages");
    hit[j] = 1;
  }
  CycleDecomposition out;
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = image[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& sizes) {
  std::uint64_t acc = 1;
  for (auto s : sizes) acc = std::lcm(acc, s);
  return acc;
}

}  // namespace vdyn
