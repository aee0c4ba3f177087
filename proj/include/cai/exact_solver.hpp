#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cai/graph.hpp"
#include "cai/partition.hpp"

namespace cai {

enum class vertex_order { ascending, degree_descending };
enum class solve_status { found, unsat, budget_exceeded };

const char* solve_status_name(solve_status s);

struct solve_options {
    std::vector<int> forced_a;
    std::vector<int> forced_i;
    vertex_order order = vertex_order::degree_descending;
    long long node_budget = 0;  // 0 = unlimited
    int worker_count = 1;
};

struct cai_result {
    solve_status status = solve_status::unsat;
    std::optional<cai_partition> partition;
    long long nodes = 0;
};

struct two_acyclic_result {
    solve_status status = solve_status::unsat;
    std::optional<bi_acyclic_partition> partition;
    long long nodes = 0;
};

struct forall_result {
    bool holds = true;
    std::optional<bi_acyclic_partition> counterexample;
    long long partitions_checked = 0;
};

cai_result solve_cai(const graph& g, const solve_options& opts = {});

// every (A1, A2) with both sides acyclic is tested; n <= 24
forall_result forall_two_acyclic(const graph& g, const std::function<bool(const bi_acyclic_partition&)>& pred);

two_acyclic_result solve_two_forest(const graph& g, const solve_options& opts = {});

}  // namespace cai
