#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cai/embedding.hpp"
#include "cai/graph.hpp"
#include "cai/partition.hpp"

namespace cai {

enum class config_kind {
    adjacent_deg2,
    deg2_on_c4,
    deg2_dist2,
    triple_sharing_c4,
    twin_c4,
    separating_c4,
    plain_c4,
    deg2_facial_dist3,
    deg2_two_hex_faces,
    bad_deg2_on_oct_face,
    base_cycle,
    base_small,
};

// AdjacentDeg2, Deg2OnC4, ...
const char* config_kind_name(config_kind k);
// reducible kinds in detection priority order
const std::vector<config_kind>& detection_order();

struct config_match {
    config_kind kind = config_kind::base_small;
    std::vector<std::pair<std::string, int>> roles;
    std::vector<int> faces;
    // construction chosen during normalisation, e.g. "case1", "three_cut"
    std::string variant;
    // the pattern was matched on the arc-reversed graph
    bool reversed = false;

    int role(const std::string& name) const;  // -1 when absent
    std::string describe() const;
};

struct subproblem {
    graph g;
    rotation_system rot;
    std::vector<int> to_parent;              // -1 for vertices created by the reduction
    std::map<int, std::string> synthetic;    // those vertices, by name (a*, b*, z)
};

struct reduction_step {
    config_match match;
    std::vector<subproblem> subs;
    std::vector<std::pair<int, int>> added_arcs;  // parent ids, synthetic endpoints as -1
    bool reversed_component = false;
};

// calls visit on every structural match of kind k until it returns true
void for_each_match(const graph& g, const rotation_system& rot, config_kind k,
                    const std::function<bool(const config_match&)>& visit);

// first structural match in priority order; base kinds when they apply
config_match detect(const graph& g, const rotation_system& rot, int base_size = 12);

// throws class_violation when a subproblem leaves F or does not shrink
reduction_step reduce(const graph& g, const rotation_system& rot, const config_match& m);

struct lift_outcome {
    cai_partition partition;
    std::string case_label;
    bool local_search = false;
};

// throws no_case_applies when neither the case analysis nor the local search succeeds
lift_outcome lift(const graph& g, const reduction_step& step, const std::vector<cai_partition>& subs);

struct reduce_options {
    int base_size = 12;
    bool trace = false;
};

struct reduce_stats {
    std::map<std::string, long long> rules;
    std::map<std::string, long long> cases;
    long long steps = 0;
    long long base_cycle = 0;
    long long base_small = 0;
    long long skipped_matches = 0;
    long long local_search = 0;
    long long no_configuration = 0;
    long long no_case_applies = 0;
    long long lifts_verified = 0;
    int max_depth = 0;
};

struct subcubic_result {
    cai_partition partition;
    reduce_stats stats;
    std::string trace;
};

// g must lie in F under rot; throws not_in_class otherwise
subcubic_result solve_subcubic(const graph& g, const rotation_system& rot, const reduce_options& opts = {});

}  // namespace cai
