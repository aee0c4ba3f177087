#pragma once

#include <string>
#include <vector>

#include "cai/duality.hpp"
#include "cai/embedding.hpp"
#include "cai/exact_solver.hpp"
#include "cai/graph.hpp"

namespace cai {

struct gadget {
    graph g;
    rotation_system rot;
    std::vector<int> interface;  // (0,1,2,3) for G1, (1,2,13) for G2
};

gadget build_g1();
gadget build_g2();

struct lemma_item {
    int item = 0;
    std::string statement;
    bool ok = false;
    std::string detail;
};

struct gadget_report {
    std::vector<lemma_item> items;
    bool ok() const;
};

gadget_report verify_gadget_lemma();
std::string format_report(const gadget_report& r);

// hubs v0..v17 are vertices 0..17
triangulation_bundle build_theorem12();
// 2k-1 chained copies; k = 1 gives build_theorem12()
triangulation_bundle build_corollary11(int k);

// which in a..e; bit j of orientation flips the j-th free edge
graph catalog_fig8(char which, unsigned orientation = 0);
int fig8_free_edges(char which);

struct theorem10_class {
    int cls = 0;
    int vertices = 0;
    cai_result result;
    bool verified_found = false;
};

// budgeted search on G - I_i for the three classes of the 138-vertex graph
std::vector<theorem10_class> certify_theorem10(long long node_budget, int workers = 1);

}  // namespace cai
