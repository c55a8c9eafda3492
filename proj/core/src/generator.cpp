#include "cachelab/generator.hpp"

#include <stdexcept>

#include "cachelab/rng.hpp"

namespace cachelab {

Trace generate_trace(const GeneratorSpec& spec) {
  if (spec.files == 0 && spec.steps > 0 && spec.tick_density < 1) {
    throw std::invalid_argument("requests need at least one file");
  }
  if (spec.min_size < 1 || spec.max_size < spec.min_size) throw std::invalid_argument("bad size range");
  if (spec.min_cost < 0 || spec.max_cost < spec.min_cost) throw std::invalid_argument("bad cost range");
  if (spec.tick_density < 0 || spec.tick_density > 1) throw std::invalid_argument("tick density must be in [0,1]");

  Rng rng(spec.seed);
  Rng files_rng = rng.split(0);
  Rng events_rng = rng.split(1);
  auto uniform = [](Rng& r, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(r.below(static_cast<std::uint64_t>(hi - lo) + 1));
  };

  Trace trace;
  for (std::size_t i = 0; i < spec.files; ++i) {
    std::int64_t size = uniform(files_rng, spec.min_size, spec.max_size);
    std::int64_t cost = uniform(files_rng, spec.min_cost, spec.max_cost);
    trace.catalog.add({"f" + std::to_string(i), size, Rational(cost)});
  }
  for (std::size_t i = 0; i < spec.steps; ++i) {
    if (spec.tick_density > 0 && events_rng.unit_rational() < spec.tick_density) {
      trace.events.push_back(Event::tick());
    } else {
      trace.events.push_back(Event::request(static_cast<FileIndex>(events_rng.below(spec.files))));
    }
  }
  return trace;
}

}  // namespace cachelab
