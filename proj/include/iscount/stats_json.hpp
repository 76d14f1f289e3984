#pragma once

#include <json.hpp>

#include "iscount/stats.hpp"

namespace iscount {

inline nlohmann::ordered_json stats_to_json(const SearchStats& s) {
    nlohmann::ordered_json j;
    j["branch_nodes"] = s.branch_nodes;
    j["depth"] = s.max_depth;
    j["r1"] = s.r1;
    j["r2"] = s.r2;
    j["d0"] = s.d0;
    j["d1"] = s.d1;
    j["d2"] = s.d2;
    j["restarts"] = s.restarts;
    j["bisections"] = s.bisections;
    j["widths"] = s.widths;
    return j;
}

}  // namespace iscount
