#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cachelab/rational.hpp"

namespace cachelab {

enum class Problem : std::uint8_t {
  RentalPaging,
  WeightedRentalPaging,
  RentalCaching,
  RentalCachingFault,
  PagingZapping,
  WeightedPagingZapping,
  CachingZapping,
  RentalPagingZapping,
  WeightedRentalPagingZapping,
  RentalCachingZapping,
  RentalCachingZappingFault,
  InfiniteRentalCaching,
};

enum class Setting : std::uint8_t { Deterministic, Randomized };

/// lambda >= 1/k, 1/k^2 <= lambda < 1/k, lambda < 1/k^2.
enum class Band : std::uint8_t { High, Middle, Low };

std::string_view to_string(Problem p);
std::string_view to_string(Setting s);
std::string_view to_string(Band b);
Problem parse_problem(std::string_view text);
Setting parse_setting(std::string_view text);
const std::vector<Problem>& all_problems();

Band rental_band(std::int64_t k, const Rational& lambda);

struct BoundQuery {
  Problem problem = Problem::RentalPaging;
  Setting setting = Setting::Deterministic;
  std::int64_t k = 1;
  Rational lambda = 0;
  std::optional<Rational> zap_cost;
};

struct Bound {
  std::optional<Rational> lower;  // absent when no bound is known
  std::optional<Rational> upper;
  std::string lower_formula;
  std::string upper_formula;
  std::vector<std::string> notes;
};

/// Evaluates the competitive-ratio bounds for one problem and setting.
/// Constants involving e use euler_e(). Throws std::invalid_argument for
/// k < 1, lambda < 0 or a paging-with-zapping row without N >= 1.
Bound bounds(const BoundQuery& query);

}  // namespace cachelab
