#pragma once

#include <string>
#include <vector>

#include "cai/graph.hpp"
#include "cai/partition.hpp"

namespace cai {

struct ear {
    // ear 0: the cycle path[0] .. path[k-1] (closing edge implicit); later ears: path from x to y
    std::vector<int> path;
    int parent = -1;
    // positions of the endpoints on the parent's path; for ear 0 the cycle is read as the
    // path path[0] .. path[k-1], i.e. cut at its closing edge
    int nest_lo = -1;
    int nest_hi = -1;
};

struct ear_decomposition {
    std::vector<ear> ears;
};

struct ear_check {
    bool ok = true;
    int property = -1;
    int ear_index = -1;
    std::string detail;
};

bool sp_recognize(const graph& g);

// shortest cycle, then repeatedly the shortest attachable path; no validation
ear_decomposition build_shortest_ears(const graph& g);

// independent re-check of properties 0-5; property 4 only when require_nested
ear_check validate_ears(const graph& g, const ear_decomposition& ed, bool require_nested = true);

// build + validate, throws property_violation
ear_decomposition short_nested_ears(const graph& g);

cai_partition cai_from_ears(const graph& g, const ear_decomposition& ed);

cai_partition solve_series_parallel(const graph& g);

std::string format_ears(const ear_decomposition& ed);

}  // namespace cai
