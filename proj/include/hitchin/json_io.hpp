#pragma once

#include "hitchin/adelic.hpp"
#include "hitchin/polytope.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hitchin {

using Json = nlohmann::ordered_json;

// Input that does not conform to a schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

Json levi_to_json(const Levi& m);
Levi levi_from_json(const Json& j, int n);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, int n);

struct FamilyInput {
  PositiveOrthogonalFamily family;
  std::optional<Vec> xi;
};

// {"group": {"n": n}, "levi": [[...]], "points": {"1,2|3": ["p/q", ...]}, "xi": [...]?}
FamilyInput family_from_json(const Json& j);
Json family_to_json(const PositiveOrthogonalFamily& f);

struct InstanceInput {
  CharDatum datum;
  std::optional<Vec> xi;
};

// {"q": q, "D": [["t", 1]], "lambda": "..."} or {"q": q, "D": [], "det": d}, optional "xi".
InstanceInput instance_from_json(const Json& j);
Json instance_to_json(const CharDatum& c, const std::optional<Vec>& xi);

Json hn_to_json(const HNResult& r);

}  // namespace hitchin
