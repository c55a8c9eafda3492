#pragma once

#include <cstdint>
#include <vector>

#include "cachelab/generator.hpp"
#include "cachelab/rng.hpp"

namespace cachelab::testing {

struct Instance {
  Trace trace;
  std::int64_t k = 1;
  std::uint64_t seed = 0;
};

/// Seeded oracle-sized instances: k in {1,2,3}, at most 6 files, at most
/// 14 steps, roughly one step in six a tick. sized = true draws sizes in
/// [1,3] and costs in [1,4]; unit_cost keeps costs at 1.
inline std::vector<Instance> corpus(std::size_t count, std::uint64_t seed, bool sized = false,
                                    bool unit_cost = true) {
  std::vector<Instance> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Rng r = rng.split(i);
    Instance inst;
    inst.k = 1 + static_cast<std::int64_t>(r.below(3));
    inst.seed = r.next();
    GeneratorSpec g;
    g.files = 2 + r.below(5);
    g.steps = 4 + r.below(11);
    if (sized) {
      g.max_size = std::min<std::int64_t>(3, inst.k);
    }
    if (!unit_cost) g.max_cost = 4;
    g.tick_density = Rational(1, 6);
    g.seed = inst.seed;
    inst.trace = generate_trace(g);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace cachelab::testing
