#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cachelab/cilp.hpp"
#include "cachelab/policy.hpp"

namespace cachelab {

struct PolicyInfo {
  std::string name;
  bool randomized = false;
  std::optional<CilpConfig> cilp;  // set for the CILP family
};

/// Parses a policy name such as "lru", "rental-paging-cilp:gamma=1/4",
/// "a_d:lru:3" or "meta:lru+alg-inf:det". Throws std::invalid_argument.
PolicyInfo describe_policy(std::string_view name);

/// Builds the named policy. Randomized policies draw from seed; meta
/// components get independent streams split from it.
std::unique_ptr<Policy> make_policy(std::string_view name, const Catalog& catalog, const ProblemParams& params,
                                    std::uint64_t seed = 0);

/// Names accepted by make_policy, for help output.
std::vector<std::string> policy_name_patterns();

}  // namespace cachelab
