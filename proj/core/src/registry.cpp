#include "cachelab/registry.hpp"

#include <charconv>
#include <stdexcept>

#include "cachelab/baselines.hpp"
#include "cachelab/meta.hpp"
#include "cachelab/rng.hpp"
#include "cachelab/ski_rental.hpp"

namespace cachelab {

namespace {

std::optional<CilpVariant> cilp_variant(std::string_view base) {
  static constexpr std::pair<std::string_view, CilpVariant> kAliases[] = {
      {"zap-paging-cilp", CilpVariant::ZappingPaging},
      {"zap-caching-cilp", CilpVariant::ZappingCaching},
  };
  for (auto v : {CilpVariant::Paging, CilpVariant::RentalPaging, CilpVariant::RentalCaching,
                 CilpVariant::ZappingPaging, CilpVariant::ZappingCaching, CilpVariant::RentalZappingPaging,
                 CilpVariant::RentalZappingCaching}) {
    if (to_string(v) == base) return v;
  }
  for (const auto& [alias, v] : kAliases) {
    if (alias == base) return v;
  }
  return std::nullopt;
}

[[noreturn]] void bad(std::string_view name, const std::string& why) {
  throw std::invalid_argument("policy '" + std::string(name) + "': " + why);
}

SkiKind ski_kind(std::string_view name, std::string_view arg) {
  if (arg == "det") return SkiKind::Deterministic;
  if (arg == "rand") return SkiKind::Randomized;
  bad(name, "expected ':det' or ':rand'");
}

std::int64_t parse_positive(std::string_view name, std::string_view text) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v < 1) bad(name, "expected a positive integer");
  return v;
}

struct Split {
  std::string_view head;
  std::string_view rest;  // after the first ':'
  bool has_rest = false;
};

Split split_colon(std::string_view s) {
  auto pos = s.find(':');
  if (pos == std::string_view::npos) return {s, {}, false};
  return {s.substr(0, pos), s.substr(pos + 1), true};
}

}  // namespace

PolicyInfo describe_policy(std::string_view name) {
  PolicyInfo info{std::string(name), false, std::nullopt};
  auto [head, rest, has_rest] = split_colon(name);
  if (auto v = cilp_variant(head)) {
    CilpConfig cfg{*v, std::nullopt};
    if (has_rest) {
      if (rest.substr(0, 6) != "gamma=") bad(name, "expected ':gamma=<rational>'");
      if (!is_rental(*v)) bad(name, "gamma applies to rental variants only");
      try {
        cfg.gamma = parse_rational(rest.substr(6));
      } catch (const std::invalid_argument& e) {
        bad(name, e.what());
      }
      if (*cfg.gamma <= 0) bad(name, "gamma must be positive");
    }
    info.cilp = cfg;
    return info;
  }
  if (head == "alg-inf" || head == "high-rent") {
    if (!has_rest) bad(name, "expected ':det' or ':rand'");
    info.randomized = ski_kind(name, rest) == SkiKind::Randomized;
    return info;
  }
  if (head == "meta") {
    auto plus = rest.rfind('+');
    if (!has_rest || plus == std::string_view::npos) bad(name, "expected 'meta:<inner>+alg-inf:<det|rand>'");
    auto inner = describe_policy(rest.substr(0, plus));
    auto ski = rest.substr(plus + 1);
    auto [ski_head, ski_arg, ski_has] = split_colon(ski);
    if (ski_head != "alg-inf" || !ski_has) bad(name, "the second component must be alg-inf:det or alg-inf:rand");
    info.randomized = inner.randomized || ski_kind(name, ski_arg) == SkiKind::Randomized;
    return info;
  }
  if (head == "a_d") {
    auto [inner, d, has_d] = split_colon(rest);
    if (!has_rest || !has_d) bad(name, "expected 'a_d:<inner>:<d>'");
    if (inner != "lru" && inner != "fifo" && inner != "fwf" && inner != "marking") {
      bad(name, "inner policy must be lru, fifo, fwf or marking");
    }
    parse_positive(name, d);
    return info;
  }
  if (has_rest) bad(name, "unexpected arguments");
  if (head == "lru" || head == "fifo" || head == "fwf" || head == "marking" || head == "landlord" ||
      head == "zap-first") {
    return info;
  }
  if (head == "rand-marking") {
    info.randomized = true;
    return info;
  }
  bad(name, "unknown policy");
}

std::unique_ptr<Policy> make_policy(std::string_view name, const Catalog& catalog, const ProblemParams& params,
                                    std::uint64_t seed) {
  PolicyInfo info = describe_policy(name);
  if (info.cilp) return std::make_unique<CilpPolicy>(catalog, params, *info.cilp);
  auto [head, rest, has_rest] = split_colon(name);
  if (head == "alg-inf") return std::make_unique<AlgInfinity>(catalog, params, ski_kind(name, rest), seed);
  if (head == "high-rent") return std::make_unique<HighRentPaging>(catalog, params, ski_kind(name, rest), seed);
  if (head == "meta") {
    auto plus = rest.rfind('+');
    Rng rng(seed);
    ProblemParams inner_params = params;
    inner_params.lambda = 0;
    auto inner = make_policy(rest.substr(0, plus), catalog, inner_params, rng.split(1).key());
    auto [ski_head, ski_arg, ski_has] = split_colon(rest.substr(plus + 1));
    ProblemParams ski_params = params;
    ski_params.zap_cost.reset();
    auto ski = std::make_unique<AlgInfinity>(catalog, ski_params, ski_kind(name, ski_arg), rng.split(2).key());
    return std::make_unique<MetaPolicy>(catalog, params, std::move(inner), std::move(ski));
  }
  if (head == "a_d") {
    auto [inner, d, has_d] = split_colon(rest);
    return std::make_unique<IdleEvicting>(catalog, params, make_policy(inner, catalog, params, seed),
                                          parse_positive(name, d));
  }
  if (head == "lru") return std::make_unique<Lru>(catalog, params);
  if (head == "fifo") return std::make_unique<Fifo>(catalog, params);
  if (head == "fwf") return std::make_unique<Fwf>(catalog, params);
  if (head == "marking") return std::make_unique<Marking>(catalog, params, false);
  if (head == "rand-marking") return std::make_unique<Marking>(catalog, params, true, seed);
  if (head == "landlord") return std::make_unique<Landlord>(catalog, params);
  if (head == "zap-first") return std::make_unique<ZapFirst>(catalog, params);
  bad(name, "unknown policy");
}

std::vector<std::string> policy_name_patterns() {
  return {"paging-cilp",
          "rental-paging-cilp[:gamma=<rat>]",
          "rental-caching-cilp[:gamma=<rat>]",
          "zapping-paging-cilp",
          "zapping-caching-cilp",
          "rental-zapping-paging-cilp[:gamma=<rat>]",
          "rental-zapping-caching-cilp[:gamma=<rat>]",
          "alg-inf:det|rand",
          "high-rent:det|rand",
          "meta:<inner>+alg-inf:det|rand",
          "lru",
          "fifo",
          "fwf",
          "marking",
          "rand-marking",
          "landlord",
          "zap-first",
          "a_d:lru|fifo|fwf|marking:<d>"};
}

}  // namespace cachelab
