#include "cai/error.hpp"
#include "cai/exact_solver.hpp"
#include "cai/gadgets.hpp"
#include "cai/generators.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cai;

namespace {

// 2^n enumeration with the verifier as the only judge
bool naive_has_cai(const graph& g) {
    int n = g.n();
    for (int mask = 1; mask < (1 << n); ++mask) {
        vertex_set a(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) a.insert(v);
        if (verify_cai(g, partition_from_a(a)).ok) return true;
    }
    return n == 0;
}

graph random_connected(splitmix64& rng, int n, mode m) {
    std::vector<arc> arcs;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(v));
        arcs.push_back(rng.coin() ? arc{u, v} : arc{v, u});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.below(100) >= 30) continue;
            bool dup = false;
            for (const auto& a : arcs) dup = dup || (a.from == u && a.to == v) || (a.from == v && a.to == u);
            if (!dup) arcs.push_back(rng.coin() ? arc{u, v} : arc{v, u});
        }
    return graph(m, n, arcs);
}

}  // namespace

TEST_CASE("hypercube has no CAI-partition") {
    auto q3 = family("hypercube", {3}).g;
    auto r = solve_cai(q3);
    CHECK(r.status == solve_status::unsat);
    CHECK_FALSE(r.partition);
}

TEST_CASE("hypercube oriented from even to odd parity") {
    auto q3 = family("hypercube", {3}).g;
    std::vector<arc> arcs;
    for (auto [u, v] : q3.edges()) {
        bool u_even = __builtin_popcount(u) % 2 == 0;
        arcs.push_back(u_even ? arc{u, v} : arc{v, u});
    }
    graph d(mode::directed, 8, arcs);
    auto r = solve_cai(d);
    REQUIRE(r.status == solve_status::found);
    CHECK(verify_cai(d, *r.partition).ok);
    // a hand-picked partition also verifies
    CHECK(verify_cai(d, partition_from_a(8, {1, 2, 4, 5, 6, 7})).ok);
}

TEST_CASE("catalog graphs have no CAI-partition") {
    for (char w : {'b', 'c', 'd'}) CHECK(solve_cai(catalog_fig8(w)).status == solve_status::unsat);
    for (unsigned o : {0u, 5u, 63u}) CHECK(solve_cai(catalog_fig8('e', o)).status == solve_status::unsat);
    for (unsigned o : {0u, 77u, 255u}) CHECK(solve_cai(catalog_fig8('a', o)).status == solve_status::unsat);
}

TEST_CASE("forced sets") {
    graph c6(mode::undirected, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    solve_options o;
    o.forced_i = {3};
    auto r = solve_cai(c6, o);
    REQUIRE(r.status == solve_status::found);
    CHECK(r.partition->i.contains(3));
    o.forced_i = {3, 4};
    CHECK(solve_cai(c6, o).status == solve_status::unsat);
    o.forced_i = {};
    o.forced_a = {0, 1, 2, 3, 4, 5};
    CHECK(solve_cai(c6, o).status == solve_status::unsat);
    o.forced_a = {2};
    o.forced_i = {2};
    CHECK(code_of([&] { solve_cai(c6, o); }) == error_code::contradictory_forced);
    o.forced_i = {9};
    o.forced_a = {};
    CHECK(code_of([&] { solve_cai(c6, o); }) == error_code::out_of_range);
}

TEST_CASE("disconnected graphs") {
    graph two(mode::undirected, 4, {{0, 1}, {2, 3}});
    CHECK(solve_cai(two).status == solve_status::unsat);
    graph single(mode::undirected, 1, {});
    CHECK(solve_cai(single).status == solve_status::found);
}

TEST_CASE("budget is distinct from unsat") {
    auto t = build_theorem12();
    auto h = delete_class(t, 1);
    solve_options o;
    o.node_budget = 50;
    auto r = solve_cai(h.g, o);
    CHECK(r.status == solve_status::budget_exceeded);
    CHECK(r.nodes <= 51);
}

TEST_CASE("completeness against enumeration") {
    splitmix64 rng(17);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng.below(7));
        auto g = random_connected(rng, n, rng.coin() ? mode::directed : mode::undirected);
        auto r = solve_cai(g);
        bool expect = naive_has_cai(g);
        CHECK((r.status == solve_status::found) == expect);
        if (r.partition) CHECK(verify_cai(g, *r.partition).ok);
    }
}

TEST_CASE("determinism and parallel agreement") {
    for (int seed = 1; seed <= 20; ++seed) {
        auto e = random_f_instance(seed, 10, 30);
        auto a = solve_cai(e.g);
        auto b = solve_cai(e.g);
        REQUIRE(a.status == solve_status::found);
        CHECK(a.partition->a == b.partition->a);
        CHECK(a.nodes == b.nodes);
        solve_options par;
        par.worker_count = 4;
        auto c = solve_cai(e.g, par);
        CHECK(c.status == solve_status::found);
        CHECK(verify_cai(e.g, *c.partition).ok);
    }
    solve_options par;
    par.worker_count = 4;
    CHECK(solve_cai(family("hypercube", {3}).g, par).status == solve_status::unsat);
    par.order = vertex_order::ascending;
    CHECK(solve_cai(catalog_fig8('d'), par).status == solve_status::unsat);
}

TEST_CASE("forall over two-acyclic partitions") {
    auto g1 = build_g1().g;
    auto item9 = forall_two_acyclic(g1, [](const bi_acyclic_partition& p) {
        bool premise = p.a1.contains(1) && p.a1.contains(2);
        bool all_in_a2 = true;
        for (int v = 8; v <= 12; ++v) all_in_a2 = all_in_a2 && p.a2.contains(v);
        return !(premise && all_in_a2);
    });
    CHECK(item9.holds);
    CHECK(item9.partitions_checked > 0);

    auto g2 = build_g2().g;
    auto item10 = forall_two_acyclic(g2, [](const bi_acyclic_partition& p) {
        bool premise = p.a1.contains(1) && p.a1.contains(2);
        bool all_in_a2 = true;
        for (int v = 8; v <= 13; ++v) all_in_a2 = all_in_a2 && p.a2.contains(v);
        return !(premise && all_in_a2);
    });
    CHECK(item10.holds);

    graph tri(mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    auto split = forall_two_acyclic(tri, [](const bi_acyclic_partition& p) {
        return std::min(p.a1.size(), p.a2.size()) == 1;
    });
    CHECK(split.holds);
    CHECK(split.partitions_checked == 6);

    auto refuted = forall_two_acyclic(tri, [](const bi_acyclic_partition& p) { return p.a1.size() != 2; });
    CHECK_FALSE(refuted.holds);
    REQUIRE(refuted.counterexample);
    CHECK(refuted.counterexample->a1.size() == 2);

    std::vector<arc> path;
    for (int v = 0; v + 1 < 25; ++v) path.push_back({v, v + 1});
    graph big(mode::directed, 25, path);
    CHECK(code_of([&] { forall_two_acyclic(big, [](const bi_acyclic_partition&) { return true; }); }) ==
          error_code::size_guard);
}

TEST_CASE("two forests") {
    graph k4(mode::undirected, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto r = solve_two_forest(k4);
    REQUIRE(r.status == solve_status::found);
    CHECK(r.partition->a1.size() == 2);
    CHECK(verify_two_acyclic(k4, *r.partition).ok);
    graph c5(mode::undirected, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(solve_two_forest(c5).status == solve_status::found);
    auto g1 = underlying(build_g1().g);
    auto f = solve_two_forest(g1);
    REQUIRE(f.status == solve_status::found);
    CHECK(verify_two_acyclic(g1, *f.partition).ok);
    CHECK(code_of([&] { solve_two_forest(build_g1().g); }) == error_code::mode_mismatch);
}
