#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tripack/graph.hpp"

namespace tripack {

enum class GenMode { BilaterallyComplete, Complete, General };

std::string_view to_string(GenMode mode);
std::optional<GenMode> parse_gen_mode(std::string_view text);

struct GenSpec {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  double bc_density = 0.5;
  GenMode mode = GenMode::BilaterallyComplete;
  double ab_density = 1.0;  // General mode only
  double ac_density = 1.0;  // General mode only
  std::uint64_t seed = 0;
};

/// Deterministic instance generator.
///
/// Vertices are numbered A = 0..p-1, B = p..p+q-1, C = p+q..p+q+r-1. The
/// random stream is std::mt19937_64 seeded with `seed`. Sides are sampled in
/// the order AB, AC, BC; within a side, pairs are visited row-major (first
/// part vertex, then second part vertex, both ascending). Each sampled pair
/// consumes one 64-bit draw x and is kept iff (x >> 11) * 2^-53 < density.
/// Sides that are full by construction consume no draws.
///
/// Throws PreconditionError if a density lies outside [0, 1].
TripartiteGraph generate(const GenSpec& spec);

}  // namespace tripack
