#include "tripack/generator.hpp"

#include <random>

#include "tripack/error.hpp"

namespace tripack {

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::BilaterallyComplete:
      return "bilateral";
    case GenMode::Complete:
      return "complete";
    case GenMode::General:
      return "general";
  }
  return "?";
}

std::optional<GenMode> parse_gen_mode(std::string_view text) {
  for (auto mode : {GenMode::BilaterallyComplete, GenMode::Complete, GenMode::General}) {
    if (text == to_string(mode)) return mode;
  }
  return std::nullopt;
}

TripartiteGraph generate(const GenSpec& spec) {
  for (double d : {spec.bc_density, spec.ab_density, spec.ac_density}) {
    if (!(d >= 0.0 && d <= 1.0)) throw PreconditionError("densities must lie in [0, 1]");
  }

  std::array<std::vector<VertexId>, 3> parts;
  VertexId next = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t n = k == 0 ? spec.p : k == 1 ? spec.q : spec.r;
    for (std::size_t i = 0; i < n; ++i) parts[k].push_back(next++);
  }

  std::array<double, 3> density{1.0, 1.0, spec.bc_density};
  std::array<bool, 3> sampled{false, false, spec.mode != GenMode::Complete};
  if (spec.mode == GenMode::General) {
    density[0] = spec.ab_density;
    density[1] = spec.ac_density;
    sampled[0] = sampled[1] = true;
  }

  std::mt19937_64 rng(spec.seed);
  std::array<std::vector<Edge>, 3> sides;
  for (auto side : kSides) {
    auto [x, y] = side_parts(side);
    const std::size_t s = index(side);
    for (VertexId u : parts[index(x)]) {
      for (VertexId v : parts[index(y)]) {
        bool keep = true;
        if (sampled[s]) {
          double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          keep = unit < density[s];
        }
        if (keep) sides[s].emplace_back(u, v);
      }
    }
  }
  return TripartiteGraph(std::move(parts), std::move(sides));
}

}  // namespace tripack
