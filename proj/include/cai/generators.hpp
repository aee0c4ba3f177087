#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cai/duality.hpp"
#include "cai/embedding.hpp"
#include "cai/graph.hpp"

namespace cai {

// splitmix64: state += 0x9e3779b97f4a7c15, then two xor-shift-multiply rounds
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return next() >> 63; }

private:
    std::uint64_t state_;
};

struct embedded_graph {
    graph g;
    rotation_system rot;
};

// even_cycle {2k}, prism {2k}, ladder {k}, theta {a,b,c}, hypercube {3}, sp_nested {ears}, hexgrid {rows,cols}
embedded_graph family(const std::string& name, const std::vector<int>& size);
std::vector<std::string> family_names();

graph random_orientation(const graph& g, std::uint64_t seed);
embedded_graph random_orientation(const embedded_graph& e, std::uint64_t seed);

// two new 2-vertices on edge uv; arcs of a directed graph are oriented by the seed
embedded_graph subdivide_even(const embedded_graph& e, int u, int v, std::uint64_t seed);
graph subdivide_even(const graph& g, int u, int v, std::uint64_t seed);

// a path of `length` edges from u to v through face f (u, v on f)
embedded_graph insert_ear(const embedded_graph& e, int f, int u, int v, int length, std::uint64_t seed);

// planar bipartite 2-connected subcubic, oriented; n within [min_n, max_n]
embedded_graph random_f_instance(std::uint64_t seed, int min_n, int max_n);

// 2-connected simple series-parallel graph by random series/parallel growth
graph random_series_parallel(std::uint64_t seed, int n, bool bipartite);

triangulation_bundle random_eulerian_triangulation(int size_hint, std::uint64_t seed);

// membership in F: planar (under rot), bipartite, 2-connected, subcubic, oriented
void validate_class_f(const graph& g, const rotation_system& rot);

}  // namespace cai
