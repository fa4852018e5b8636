#pragma once

#include <json.hpp>

#include "groupfn/fillins.hpp"
#include "groupfn/groups.hpp"
#include "groupfn/minimality.hpp"
#include "groupfn/pwl.hpp"

namespace groupfn {

using json = nlohmann::json;

// Wire formats.  All rationals travel as "p/q" or "n" strings; JSON numbers
// for values are rejected so that no float can slip in.
json to_json(const PwlPeriodic& pi);
json to_json(const FiniteGroupFunction& h);
json to_json(const MinimalityVerdict& v);
json to_json(const ExtremalityCertificate& c);
json to_json(const FillInParameters& p);

PwlPeriodic pwl_from_json(const json& j);
FiniteGroupFunction group_from_json(const json& j);

// True when the document carries a finite group function ("N" present).
bool is_group_json(const json& j);

}  // namespace groupfn
