#pragma once

#include <cstdint>

#include "cachelab/model.hpp"

namespace cachelab {

struct GeneratorSpec {
  std::size_t files = 4;
  std::size_t steps = 12;
  std::int64_t min_size = 1;
  std::int64_t max_size = 1;
  std::int64_t min_cost = 1;
  std::int64_t max_cost = 1;
  Rational tick_density = 0;  // probability that a step is a tick
  std::uint64_t seed = 0;
};

/// Uniform random trace: files f0..f{n-1} with integer size and cost drawn
/// uniformly from the given ranges, then each step is a tick with
/// probability tick_density or a request to a uniformly chosen file.
/// Throws std::invalid_argument for empty ranges or a density outside [0,1].
Trace generate_trace(const GeneratorSpec& spec);

}  // namespace cachelab
