#pragma once

#include <map>
#include <memory>
#include <string>

#include "weylcc/eaw.hpp"

namespace weylcc::testing {

// Shared, lazily built groups; layer caches survive across test cases.
inline AffineGroup& group(const std::string& label, const std::string& twist = "all") {
  static std::map<std::string, std::unique_ptr<AffineGroup>> cache;
  auto& slot = cache[label + "/" + twist];
  if (!slot) slot = std::make_unique<AffineGroup>(parse_cartan_type(label), TwistSelection::parse(twist));
  return *slot;
}

inline ExtAffineElement P(const AffineGroup& g, const std::string& s) { return parse_element(g, s); }

}  // namespace weylcc::testing
