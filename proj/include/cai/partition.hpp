#pragma once

#include <string>
#include <vector>

#include "cai/embedding.hpp"
#include "cai/graph.hpp"

namespace cai {

struct cai_partition {
    vertex_set a;
    vertex_set i;
};

struct bi_acyclic_partition {
    vertex_set a1;
    vertex_set a2;
};

struct tripartition {
    std::vector<int> color;
    std::vector<int> members(int c) const;
};

struct verdict {
    bool ok = true;
    std::string clause;  // "independent", "acyclic", "connected"; empty when ok
    std::string detail;
    std::vector<int> witness;
    explicit operator bool() const { return ok; }
};

cai_partition partition_from_a(int n, const std::vector<int>& a);
cai_partition partition_from_a(const vertex_set& a);

verdict verify_cai(const graph& g, const cai_partition& p);
verdict verify_two_acyclic(const graph& g, const bi_acyclic_partition& p);

// v in a with exactly one neighbour in a: a minus v stays connected and acyclic
bool leaf_removable(const graph& g, const vertex_set& a, int v);
// v outside a with exactly one neighbour in a: a plus v stays connected and acyclic
bool leaf_addable(const graph& g, const vertex_set& a, int v);
vertex_set remove_leaf(const graph& g, vertex_set a, int v);
vertex_set add_leaf(const graph& g, vertex_set a, int v);

// cai_sub indexes t - I_cls with the surviving vertices renumbered in increasing order
bi_acyclic_partition lift_obs_main(const graph& t, const rotation_system& rot, const tripartition& tri, int cls,
                                   const cai_partition& cai_sub);

bool is_permeating(const graph& t, const face_set& faces, const vertex_set& a);

}  // namespace cai
