#include <numeric>

#include "cai/duality.hpp"
#include "cai/error.hpp"
#include "cai/exact_solver.hpp"
#include "cai/generators.hpp"
#include "cai/partition.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cai;

namespace {

graph directed_c4() { return graph(mode::directed, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// naive clause recomputation: edge scan for I, union-find or source peeling for A
bool naive_cai(const graph& g, const vertex_set& a) {
    int n = g.n();
    for (const auto& e : g.arcs())
        if (!a.contains(e.from) && !a.contains(e.to)) return false;
    if (n == 0) return true;
    if (a.empty()) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    int comps = a.size();
    bool forest = true;
    for (auto [u, v] : g.edges()) {
        if (!a.contains(u) || !a.contains(v)) continue;
        int x = find(u), y = find(v);
        if (x == y)
            forest = false;
        else
            p[x] = y, --comps;
    }
    if (comps != 1) return false;
    if (!g.directed()) return forest;
    std::vector<int> indeg(n, 0);
    for (const auto& e : g.arcs())
        if (a.contains(e.from) && a.contains(e.to)) ++indeg[e.to];
    std::vector<int> stack;
    for (int v : a.members())
        if (!indeg[v]) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : g.out(v))
            if (a.contains(w) && --indeg[w] == 0) stack.push_back(w);
    }
    return seen == a.size();
}

}  // namespace

TEST_CASE("verify_cai examples") {
    auto c4 = directed_c4();
    CHECK(verify_cai(c4, partition_from_a(4, {0, 1, 2})).ok);
    auto q3 = family("hypercube", {3}).g;
    auto face = partition_from_a(8, {0, 1, 3, 2});
    auto v = verify_cai(q3, face);
    CHECK_FALSE(v.ok);
    CHECK(v.clause == "independent");
    CHECK(v.witness.size() == 2);
    for (int mask = 0; mask < 256; ++mask) {
        vertex_set a(8);
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) a.insert(i);
        CHECK_FALSE(verify_cai(q3, partition_from_a(a)).ok);
    }
}

TEST_CASE("verify_cai edge cases") {
    graph empty(mode::undirected, 0, {});
    CHECK(verify_cai(empty, partition_from_a(0, {})).ok);
    graph one(mode::undirected, 1, {});
    CHECK(verify_cai(one, partition_from_a(1, {0})).ok);
    CHECK_FALSE(verify_cai(one, partition_from_a(1, {})).ok);
    cai_partition overlap{vertex_set(2, {0, 1}), vertex_set(2, {1})};
    graph two(mode::undirected, 2, {{0, 1}});
    CHECK(code_of([&] { verify_cai(two, overlap); }) == error_code::malformed_partition);
    cai_partition missing{vertex_set(2, {0}), vertex_set(2)};
    CHECK(code_of([&] { verify_cai(two, missing); }) == error_code::malformed_partition);
}

TEST_CASE("verify_cai clauses and witnesses") {
    auto c4 = directed_c4();
    auto all = verify_cai(c4, partition_from_a(4, {0, 1, 2, 3}));
    CHECK(all.clause == "acyclic");
    CHECK(all.witness.size() == 4);
    graph c6(mode::undirected, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto split = verify_cai(c6, partition_from_a(6, {0, 2, 3, 5}));
    CHECK(split.clause == "connected");
}

TEST_CASE("verify_cai agrees with naive recomputation") {
    splitmix64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng.below(10));
        auto m = rng.coin() ? mode::directed : mode::undirected;
        std::vector<arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < 30) arcs.push_back(rng.coin() ? arc{u, v} : arc{v, u});
        graph g(m, n, arcs);
        vertex_set a(n);
        for (int v = 0; v < n; ++v)
            if (rng.below(100) < 65) a.insert(v);
        auto got = verify_cai(g, partition_from_a(a));
        CHECK(got.ok == naive_cai(g, a));
        if (!got.ok) CHECK_FALSE(got.clause.empty());
    }
}

TEST_CASE("verify_two_acyclic") {
    // directed C4 up to an octahedron with a Eulerian orientation
    auto oct = triangulate_up(directed_c4(), rotation_system({{1, 3}, {2, 0}, {3, 1}, {0, 2}}));
    REQUIRE(oct.g.n() == 6);
    int found = 0;
    for (int mask = 0; mask < 64; ++mask) {
        vertex_set a1(6);
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) a1.insert(i);
        if (a1.size() != 3) continue;
        bi_acyclic_partition p{a1, a1.complement()};
        bool both_triangles_open = induced_acyclic(oct.g, p.a1) && induced_acyclic(oct.g, p.a2);
        CHECK(verify_two_acyclic(oct.g, p).ok == both_triangles_open);
        found += both_triangles_open;
    }
    CHECK(found > 0);
    graph tri(mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    auto bad = verify_two_acyclic(tri, {vertex_set::all(3), vertex_set(3)});
    CHECK_FALSE(bad.ok);
    CHECK(bad.clause == "acyclic");
}

TEST_CASE("lift_obs_main on the octahedron") {
    auto oct = triangulate_up(directed_c4(), rotation_system({{1, 3}, {2, 0}, {3, 1}, {0, 2}}));
    for (int cls = 0; cls < 3; ++cls) {
        auto del = delete_class(oct, cls);
        CHECK(del.g.n() == 4);
        auto r = solve_cai(del.g);
        REQUIRE(r.status == solve_status::found);
        CHECK(r.partition->a.size() == 3);
        auto lifted = lift_obs_main(oct.g, oct.rot, oct.tri, cls, *r.partition);
        CHECK(lifted.a1.size() == 3);
        CHECK(lifted.a2.size() == 3);
        CHECK(verify_two_acyclic(oct.g, lifted).ok);
        for (int v : oct.tri.members(cls)) CHECK(lifted.a2.contains(v));
        CHECK(is_permeating(oct.g, oct.faces, lifted.a1));
    }
}

TEST_CASE("lift_obs_main preconditions") {
    graph tri(mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    tripartition tp{{0, 1, 2}};
    CHECK(code_of([&] {
              lift_obs_main(tri, rotation_system({{1, 2}, {2, 0}, {0, 1}}), tp, 0, partition_from_a(2, {0}));
          }) == error_code::precondition);
}

TEST_CASE("permeating examples") {
    auto oct = triangulate_up(directed_c4(), rotation_system({{1, 3}, {2, 0}, {3, 1}, {0, 2}}));
    auto equator = oct.tri.members(0);
    vertex_set rest = vertex_set(6, equator).complement();
    CHECK(rest.size() == 4);
    CHECK(is_permeating(oct.g, oct.faces, rest));
    CHECK_FALSE(is_permeating(oct.g, oct.faces, vertex_set(6, {0})));
}

TEST_CASE("observation 6 equivalence on small triangulations") {
    int checked = 0;
    for (int seed = 1; seed <= 40 && checked < 12; ++seed) {
        auto t = random_eulerian_triangulation(4 + seed % 5, seed);
        if (t.g.n() > 14) continue;
        ++checked;
        for (int cls = 0; cls < 3; ++cls) {
            auto del = delete_class(t, cls);
            std::vector<int> others;
            for (int v = 0; v < t.g.n(); ++v)
                if (t.tri.color[v] != cls) others.push_back(v);
            int k = static_cast<int>(others.size());
            for (int mask = 0; mask < (1 << k); ++mask) {
                vertex_set a(t.g.n());
                vertex_set sub_a(del.g.n());
                for (int j = 0; j < k; ++j)
                    if (mask >> j & 1) {
                        a.insert(others[j]);
                        sub_a.insert(del.old_to_new[others[j]]);
                    }
                bool left = !a.empty() && induced_connected(t.g, a) && induced_acyclic(t.g, a) &&
                            is_permeating(t.g, t.faces, a);
                bool right = verify_cai(del.g, partition_from_a(sub_a)).ok;
                CHECK(left == right);
            }
        }
    }
    CHECK(checked >= 5);
}

TEST_CASE("leaf helpers keep A connected and acyclic") {
    splitmix64 rng(5);
    int removed = 0, added = 0;
    for (int seed = 1; seed <= 30; ++seed) {
        auto e = random_f_instance(seed, 8, 24);
        auto r = solve_cai(e.g);
        REQUIRE(r.status == solve_status::found);
        vertex_set a = r.partition->a;
        for (int v = 0; v < e.g.n(); ++v) {
            if (leaf_removable(e.g, a, v) && a.size() > 1) {
                auto b = remove_leaf(e.g, a, v);
                CHECK(induced_connected(e.g, b));
                CHECK(induced_acyclic(e.g, b));
                ++removed;
            }
        }
        // grow a random tree one leaf at a time
        vertex_set t(e.g.n(), {static_cast<int>(rng.below(e.g.n()))});
        for (int step = 0; step < e.g.n() / 2; ++step) {
            std::vector<int> cand;
            for (int v = 0; v < e.g.n(); ++v)
                if (leaf_addable(e.g, t, v)) cand.push_back(v);
            if (cand.empty()) break;
            t = add_leaf(e.g, t, cand[rng.below(cand.size())]);
            CHECK(induced_connected(e.g, t));
            CHECK(induced_acyclic(e.g, t));
            ++added;
        }
        int v = static_cast<int>(rng.below(e.g.n()));
        if (!leaf_removable(e.g, a, v)) CHECK_THROWS_AS(remove_leaf(e.g, a, v), error);
    }
    CHECK(removed > 0);
    CHECK(added > 0);
}
