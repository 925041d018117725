#pragma once

#include <json.hpp>

#include "plethyst/partition.hpp"
#include "plethyst/symfunc.hpp"
#include "plethyst/tableau.hpp"
#include "plethyst/verify.hpp"

// JSON forms. Key order is fixed; coefficients are decimal strings.
namespace plethyst {

using Json = nlohmann::ordered_json;

// [3,1]; the empty partition is [].
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// [[1,1,2],[3]]
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// {"basis":"s","degree":4,"terms":[{"partition":[4],"coeff":"1"},...]},
// terms revlex-decreasing.
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const ExpansionReport& r);

}  // namespace plethyst
