#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "banachproj/convex_sets.hpp"

namespace banachproj {

/// Malformed set description; the message names the offending field.
class SetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"kind":"box","lower":[...],"upper":[...]}
// {"kind":"ball","center":[...],"radius":r}
// {"kind":"vpolytope","vertices":[[...],...]}
// {"kind":"translate","inner":{...},"shift":[...]}
ConvexSet set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConvexSet& set);

ConvexSet read_set_file(const std::string& path);

}  // namespace banachproj
