#include <set>

#include "cai/ear_solver.hpp"
#include "cai/error.hpp"
#include "cai/generators.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cai;

namespace {

graph k23() { return graph(mode::undirected, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

graph k4() { return graph(mode::undirected, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

int i_on_ear(const ear& e, const cai_partition& p) {
    int c = 0;
    for (int v : e.path) c += p.i.contains(v);
    return c;
}

}  // namespace

TEST_CASE("series-parallel recognition") {
    CHECK(sp_recognize(k23()));
    CHECK_FALSE(sp_recognize(k4()));
    CHECK_FALSE(sp_recognize(family("hypercube", {3}).g));
    CHECK(sp_recognize(family("even_cycle", {6}).g));
    CHECK(sp_recognize(family("theta", {2, 4, 4}).g));
    CHECK_FALSE(sp_recognize(family("prism", {6}).g));
}

TEST_CASE("K23 decomposition") {
    auto ed = short_nested_ears(k23());
    REQUIRE(ed.ears.size() == 2);
    CHECK(ed.ears[0].path.size() == 4);
    CHECK(ed.ears[1].path.size() == 3);
    CHECK(ed.ears[1].parent == 0);
    CHECK(ed.ears[1].nest_hi - ed.ears[1].nest_lo == 2);
    CHECK(validate_ears(k23(), ed).ok);
    auto p = cai_from_ears(k23(), ed);
    CHECK(verify_cai(k23(), p).ok);
    CHECK(p.i.size() == 2);
    // the ear's interior vertex goes to I since both ends are in A
    CHECK(p.i.contains(ed.ears[1].path[1]));
    for (const auto& e : ed.ears) CHECK(i_on_ear(e, p) <= 1);
}

TEST_CASE("cycle is one ear") {
    auto c6 = family("even_cycle", {6}).g;
    auto ed = short_nested_ears(c6);
    CHECK(ed.ears.size() == 1);
    auto p = solve_series_parallel(c6);
    CHECK(p.a.size() == 5);
    CHECK(p.i.size() == 1);
}

TEST_CASE("nested theta chains") {
    for (int k = 1; k <= 6; ++k) {
        auto g = family("sp_nested", {k}).g;
        auto ed = short_nested_ears(g);
        CHECK(validate_ears(g, ed).ok);
        CHECK(ed.ears.size() == static_cast<size_t>(k) + 1);
        CHECK(verify_cai(g, cai_from_ears(g, ed)).ok);
    }
}

TEST_CASE("random series-parallel instances") {
    for (int seed = 0; seed < 200; ++seed) {
        int n = 4 + seed % 120;
        auto g = random_series_parallel(seed, n, seed % 2 == 0);
        REQUIRE(sp_recognize(g));
        REQUIRE(is_two_connected(g));
        auto ed = short_nested_ears(g);
        auto chk = validate_ears(g, ed);
        CHECK(chk.ok);
        auto p = cai_from_ears(g, ed);
        CHECK(verify_cai(g, p).ok);
        for (const auto& e : ed.ears) CHECK(i_on_ear(e, p) <= 1);
    }
}

TEST_CASE("non series-parallel graphs never get a short nested decomposition") {
    int tried = 0;
    for (int seed = 0; tried < 100; ++seed) {
        auto g = underlying(random_f_instance(seed, 8, 40).g);
        if (sp_recognize(g)) continue;
        ++tried;
        CHECK(code_of([&] { short_nested_ears(g); }) == error_code::property_violation);
        CHECK(code_of([&] { solve_series_parallel(g); }) == error_code::not_in_class);
    }
    CHECK(code_of([&] { short_nested_ears(k4()); }) == error_code::property_violation);
}

TEST_CASE("validator catches corrupted decompositions") {
    auto g = family("sp_nested", {3}).g;
    auto ed = short_nested_ears(g);
    REQUIRE(ed.ears.size() == 4);

    auto dropped = ed;
    dropped.ears.pop_back();
    auto c0 = validate_ears(g, dropped);
    CHECK_FALSE(c0.ok);
    CHECK(c0.property == 0);

    auto swapped = ed;
    std::reverse(swapped.ears[1].path.begin(), swapped.ears[1].path.end());
    std::swap(swapped.ears[1].nest_lo, swapped.ears[1].nest_hi);
    // reversing an ear is harmless when the interval is read back consistently
    auto reread = validate_ears(g, swapped);
    CHECK((reread.ok || reread.property >= 3));

    auto bad_parent = ed;
    bad_parent.ears[2].parent = 3;
    CHECK_FALSE(validate_ears(g, bad_parent).ok);
}

TEST_CASE("input checks") {
    auto directed = random_orientation(k23(), 1);
    CHECK(code_of([&] { solve_series_parallel(directed); }) == error_code::not_in_class);
    CHECK(code_of([&] { short_nested_ears(directed); }) == error_code::mode_mismatch);
    graph path(mode::undirected, 3, {{0, 1}, {1, 2}});
    CHECK(code_of([&] { solve_series_parallel(path); }) == error_code::not_in_class);

    graph chorded(mode::undirected, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    ear_decomposition manual;
    manual.ears.push_back({{0, 1, 2, 3}, -1, -1, -1});
    manual.ears.push_back({{0, 2}, 0, 0, 2});
    CHECK(code_of([&] { cai_from_ears(chorded, manual); }) == error_code::ear_without_interior);
}

TEST_CASE("ear text format") {
    auto text = format_ears(short_nested_ears(k23()));
    CHECK(text.rfind("ear 0 cycle ", 0) == 0);
    CHECK(text.find("ear 1 path ") != std::string::npos);
    CHECK(text.find(" parent 0 interval ") != std::string::npos);
}

TEST_CASE("endpoint chords and endpoint-only parents") {
    // triangle 0 3 4 with the ear 0 1 2 3: its endpoints are joined by a cycle edge
    graph tri_ear(mode::undirected, 5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    auto e1 = short_nested_ears(tri_ear);
    CHECK(validate_ears(tri_ear, e1).ok);
    CHECK(verify_cai(tri_ear, cai_from_ears(tri_ear, e1)).ok);

    // the ear 2 6 3 hangs off ear 0 5 7 3 2, where 2 is only an endpoint
    graph g(mode::undirected, 8,
            {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 6}, {3, 7}, {5, 7}});
    auto ed = short_nested_ears(g);
    CHECK(validate_ears(g, ed).ok);
    bool found = false;
    for (const auto& e : ed.ears)
        if (e.path.size() == 3 && e.path[1] == 6) {
            found = true;
            CHECK(ed.ears[e.parent].path.size() == 5);
        }
    CHECK(found);
    auto p = cai_from_ears(g, ed);
    CHECK(verify_cai(g, p).ok);
    for (const auto& e : ed.ears) CHECK(i_on_ear(e, p) <= 1);
}
