#include "cachelab/bounds.hpp"

#include <stdexcept>

namespace cachelab {

namespace {

struct Name {
  Problem problem;
  std::string_view text;
};

constexpr Name kNames[] = {
    {Problem::RentalPaging, "rental-paging"},
    {Problem::WeightedRentalPaging, "weighted-rental-paging"},
    {Problem::RentalCaching, "rental-caching"},
    {Problem::RentalCachingFault, "rental-caching-fault"},
    {Problem::PagingZapping, "paging-zapping"},
    {Problem::WeightedPagingZapping, "weighted-paging-zapping"},
    {Problem::CachingZapping, "caching-zapping"},
    {Problem::RentalPagingZapping, "rental-paging-zapping"},
    {Problem::WeightedRentalPagingZapping, "weighted-rental-paging-zapping"},
    {Problem::RentalCachingZapping, "rental-caching-zapping"},
    {Problem::RentalCachingZappingFault, "rental-caching-zapping-fault"},
    {Problem::InfiniteRentalCaching, "infinite-rental-caching"},
};

Bound rental_paging(const BoundQuery& q, bool weighted) {
  Bound b;
  Rational k(q.k);
  const Rational& l = q.lambda;
  Band band = rental_band(q.k, l);
  if (q.setting == Setting::Deterministic) {
    if (band == Band::High) {
      b.lower = 2 - l;
      b.lower_formula = "2 - lambda";
    } else {
      b.lower = (k + k * l) / (1 + k * k * l);
      b.lower_formula = "(k + k*lambda) / (1 + k^2*lambda)";
    }
    if (weighted) {
      b.upper = k;
      b.upper_formula = "k";
    } else if (band == Band::High) {
      b.upper = Rational(2);
      b.upper_formula = "2";
    } else if (band == Band::Middle) {
      b.upper = 1 + 1 / (k * l);
      b.upper_formula = "1 + 1/(k*lambda)";
    } else {
      b.upper = k;
      b.upper_formula = "k";
    }
    return b;
  }
  if (band == Band::High) {
    b.lower = e_over_e_minus_one();
    b.upper = e_over_e_minus_one();
    b.lower_formula = b.upper_formula = "e/(e-1)";
  } else {
    Rational h = harmonic(q.k);
    b.lower = (h + k * k * h * l) / (1 + k * k * h * l);
    b.lower_formula = "(H_k + k^2*H_k*lambda) / (1 + k^2*H_k*lambda)";
    b.upper = h + e_over_e_minus_one();
    b.upper_formula = "H_k + e/(e-1)";
    b.notes.push_back(
        "lower bound taken with k^2*H_k*lambda in both numerator and denominator");
  }
  return b;
}

Bound paging_zapping(const BoundQuery& q) {
  Bound b;
  if (q.setting != Setting::Deterministic) return b;
  Rational k(q.k);
  const Rational& n = *q.zap_cost;
  b.lower = (n * (2 * k + 1) - (k + 1)) / (n + 2 * k);
  b.lower_formula = "(N*(2k+1) - (k+1)) / (N + 2k)";
  Rational cap = 2 * k + 1;
  b.upper = n < cap ? n : cap;
  b.upper_formula = "min(N, 2k+1)";
  return b;
}

Bound rental_paging_zapping(const BoundQuery& q, bool weighted) {
  Bound b;
  if (q.setting != Setting::Deterministic) return b;
  Rational k(q.k);
  if (weighted) {
    b.upper = 2 * k + 1;
    b.upper_formula = "2k+1";
    return b;
  }
  switch (rental_band(q.k, q.lambda)) {
    case Band::High:
      b.upper = Rational(3);
      b.upper_formula = "3";
      break;
    case Band::Middle:
      b.upper = 1 + 2 / (k * q.lambda);
      b.upper_formula = "1 + 2/(k*lambda)";
      break;
    case Band::Low:
      b.upper = 2 * k + 1;
      b.upper_formula = "2k+1";
      break;
  }
  return b;
}

bool needs_zap_cost(Problem p) {
  return p == Problem::PagingZapping || p == Problem::WeightedPagingZapping;
}

}  // namespace

std::string_view to_string(Problem p) {
  for (const auto& n : kNames) {
    if (n.problem == p) return n.text;
  }
  return "rental-paging";
}

std::string_view to_string(Setting s) { return s == Setting::Deterministic ? "deterministic" : "randomized"; }

std::string_view to_string(Band b) {
  switch (b) {
    case Band::High: return "high";
    case Band::Middle: return "middle";
    case Band::Low: return "low";
  }
  return "low";
}

Problem parse_problem(std::string_view text) {
  for (const auto& n : kNames) {
    if (n.text == text) return n.problem;
  }
  throw std::invalid_argument("unknown problem '" + std::string(text) + "'");
}

Setting parse_setting(std::string_view text) {
  if (text == "deterministic" || text == "det") return Setting::Deterministic;
  if (text == "randomized" || text == "rand") return Setting::Randomized;
  throw std::invalid_argument("unknown setting '" + std::string(text) + "'");
}

const std::vector<Problem>& all_problems() {
  static const std::vector<Problem> all = [] {
    std::vector<Problem> v;
    for (const auto& n : kNames) v.push_back(n.problem);
    return v;
  }();
  return all;
}

Band rental_band(std::int64_t k, const Rational& lambda) {
  Rational kk(k);
  if (lambda >= 1 / kk) return Band::High;
  if (lambda >= 1 / (kk * kk)) return Band::Middle;
  return Band::Low;
}

Bound bounds(const BoundQuery& q) {
  if (q.k < 1) throw std::invalid_argument("k must be >= 1");
  if (q.lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  if (needs_zap_cost(q.problem) && (!q.zap_cost || *q.zap_cost < 1)) {
    throw std::invalid_argument("this problem needs a zap cost N >= 1");
  }
  switch (q.problem) {
    case Problem::RentalPaging:
    case Problem::RentalCachingFault:
      return rental_paging(q, false);
    case Problem::WeightedRentalPaging:
    case Problem::RentalCaching:
      return rental_paging(q, true);
    case Problem::PagingZapping:
    case Problem::WeightedPagingZapping:
      return paging_zapping(q);
    case Problem::CachingZapping: {
      Bound b;
      if (q.setting == Setting::Deterministic) {
        b.upper = Rational(2 * q.k + 1);
        b.upper_formula = "2k+1";
      }
      return b;
    }
    case Problem::RentalPagingZapping:
    case Problem::RentalCachingZappingFault:
      return rental_paging_zapping(q, false);
    case Problem::WeightedRentalPagingZapping:
    case Problem::RentalCachingZapping:
      return rental_paging_zapping(q, true);
    case Problem::InfiniteRentalCaching: {
      Bound b;
      if (q.setting == Setting::Deterministic) {
        b.upper = Rational(2);
        b.upper_formula = "2";
      } else {
        b.upper = e_over_e_minus_one();
        b.upper_formula = "e/(e-1)";
      }
      return b;
    }
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace cachelab
