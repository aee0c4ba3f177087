#include <regex>
#include <set>
#include <sstream>

#include "cai/error.hpp"
#include "cai/exact_solver.hpp"
#include "cai/generators.hpp"
#include "cai/reduction_solver.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cai;

namespace {

std::vector<embedded_graph> corpus(int randoms, int min_n, int max_n) {
    std::vector<embedded_graph> out;
    std::vector<std::pair<std::string, std::vector<int>>> fams = {
        {"prism", {8}}, {"prism", {10}}, {"hexgrid", {2, 3}}, {"hexgrid", {3, 3}},
        {"hypercube", {3}}, {"ladder", {7}}, {"theta", {3, 5, 5}}, {"even_cycle", {14}}};
    for (const auto& [f, sz] : fams)
        for (int s = 0; s < 4; ++s) out.push_back(random_orientation(family(f, sz), s));
    for (int s = 0; s < randoms; ++s) out.push_back(random_f_instance(s, min_n, max_n));
    return out;
}

// a 2-vertex between two hexagons, surrounded by a ring of 6-faces
embedded_graph two_hex_instance(std::uint64_t seed) {
    std::vector<std::vector<int>> faces = {
        {0, 1, 2, 3, 4, 5},     {0, 5, 6, 7, 8, 1},       {1, 2, 9, 24, 14, 8},   {2, 3, 10, 16, 15, 9},
        {3, 4, 11, 19, 18, 10}, {4, 5, 6, 12, 17, 11},    {6, 7, 13, 21, 20, 12}, {7, 8, 14, 23, 22, 13},
        {9, 15, 16, 10, 18, 19, 11, 17, 12, 20, 21, 13, 22, 23, 14, 24}};
    std::set<std::pair<int, int>> es;
    for (const auto& f : faces)
        for (size_t i = 0; i < f.size(); ++i) {
            int u = f[i], v = f[(i + 1) % f.size()];
            es.insert({std::min(u, v), std::max(u, v)});
        }
    std::vector<arc> arcs;
    for (auto [u, v] : es) arcs.push_back({u, v});
    embedded_graph e{graph(mode::undirected, 25, arcs), rotation_from_faces(25, faces)};
    return random_orientation(e, seed);
}

struct match_tally {
    int matches = 0;
    int lifted = 0;
    int skipped = 0;
    std::set<std::string> cases;
};

// reduce every structural match, solve the pieces exactly, lift and verify
void lift_every_match(const embedded_graph& e, config_kind k, match_tally& t) {
    for_each_match(e.g, e.rot, k, [&](const config_match& m) {
        ++t.matches;
        CHECK(m.kind == k);
        reduction_step st;
        try {
            st = reduce(e.g, e.rot, m);
        } catch (const error& ex) {
            CHECK(ex.code() == error_code::class_violation);
            ++t.skipped;
            return false;
        }
        int size = e.g.n() + e.g.num_edges();
        std::vector<cai_partition> parts;
        for (const auto& sp : st.subs) {
            CHECK(sp.g.n() + sp.g.num_edges() < size);
            CHECK_NOTHROW(validate_class_f(sp.g, sp.rot));
            CHECK(sp.to_parent.size() == static_cast<size_t>(sp.g.n()));
            auto r = solve_cai(sp.g);
            REQUIRE(r.status == solve_status::found);
            parts.push_back(*r.partition);
        }
        auto out = lift(e.g, st, parts);
        CHECK(verify_cai(e.g, out.partition).ok);
        CHECK_FALSE(out.local_search);
        t.cases.insert(out.case_label);
        ++t.lifted;
        return false;
    });
}

}  // namespace

TEST_CASE("detection priority order") {
    const auto& order = detection_order();
    REQUIRE(order.size() == 10);
    CHECK(order.front() == config_kind::adjacent_deg2);
    CHECK(order[3] == config_kind::triple_sharing_c4);
    CHECK(order[6] == config_kind::plain_c4);
    CHECK(order.back() == config_kind::bad_deg2_on_oct_face);
    CHECK(std::string(config_kind_name(config_kind::twin_c4)) == "TwinC4");
}

TEST_CASE("detect examples") {
    auto c8 = random_orientation(family("even_cycle", {8}), 3);
    CHECK(detect(c8.g, c8.rot, 0).kind == config_kind::base_cycle);
    auto q3 = random_orientation(family("hypercube", {3}), 4);
    CHECK(detect(q3.g, q3.rot).kind == config_kind::base_small);
    auto m = detect(q3.g, q3.rot, 0);
    std::set<config_kind> c4_family = {config_kind::triple_sharing_c4, config_kind::twin_c4,
                                       config_kind::separating_c4, config_kind::plain_c4};
    CHECK(c4_family.count(m.kind));

    // two adjacent 2-vertices on a subdivided prism edge
    auto p = random_orientation(family("prism", {8}), 1);
    auto sub = subdivide_even(p, 0, 1, 9);
    auto a = detect(sub.g, sub.rot, 0);
    REQUIRE(a.kind == config_kind::adjacent_deg2);
    int a0 = a.role("a0"), b1 = a.role("b1"), a2 = a.role("a2"), b3 = a.role("b3");
    CHECK(sub.g.neighbors(b1).size() == 2);
    CHECK(sub.g.neighbors(a2).size() == 2);
    CHECK(sub.g.adjacent(a0, b1));
    CHECK(sub.g.adjacent(b1, a2));
    CHECK(sub.g.adjacent(a2, b3));
    CHECK(a.role("nothing") == -1);
}

TEST_CASE("adjacent 2-vertices reduce to one arc copying the path direction") {
    auto p = random_orientation(family("prism", {8}), 1);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto sub = subdivide_even(p, 0, 1, seed);
        auto m = detect(sub.g, sub.rot, 0);
        REQUIRE(m.kind == config_kind::adjacent_deg2);
        if (m.variant != "nonadjacent") continue;
        auto st = reduce(sub.g, sub.rot, m);
        REQUIRE(st.subs.size() == 1);
        const auto& h = st.subs[0];
        CHECK(h.g.n() == sub.g.n() - 2);
        int a0 = m.role("a0"), b3 = m.role("b3");
        int ha0 = -1, hb3 = -1;
        for (int v = 0; v < h.g.n(); ++v) {
            if (h.to_parent[v] == a0) ha0 = v;
            if (h.to_parent[v] == b3) hb3 = v;
        }
        REQUIRE(ha0 >= 0);
        REQUIRE(hb3 >= 0);
        if (sub.g.has_arc(a0, m.role("b1")))
            CHECK(h.g.has_arc(ha0, hb3));
        else
            CHECK(h.g.has_arc(hb3, ha0));
    }
}

TEST_CASE("every match of every kind lifts") {
    std::map<config_kind, match_tally> tally;
    for (const auto& e : corpus(120, 10, 26))
        for (config_kind k : detection_order()) lift_every_match(e, k, tally[k]);
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        lift_every_match(two_hex_instance(seed), config_kind::deg2_two_hex_faces,
                         tally[config_kind::deg2_two_hex_faces]);
    for (config_kind k : detection_order()) {
        INFO(config_kind_name(k));
        CHECK(tally[k].lifted > 0);
        CHECK(tally[k].lifted + tally[k].skipped == tally[k].matches);
    }
    CHECK(tally[config_kind::adjacent_deg2].cases.count("nonadjacent"));
    CHECK(tally[config_kind::triple_sharing_c4].cases.count("cube"));
}

TEST_CASE("two-hex configuration") {
    auto e = two_hex_instance(2);
    CHECK_NOTHROW(validate_class_f(e.g, e.rot));
    int found = 0;
    for_each_match(e.g, e.rot, config_kind::deg2_two_hex_faces, [&](const config_match& m) {
        CHECK(m.role("a'1") == 0);
        CHECK(m.faces.size() == 2);
        ++found;
        return false;
    });
    CHECK(found == 1);
}

TEST_CASE("solve_subcubic base cases") {
    auto c6 = random_orientation(family("even_cycle", {6}), 7);
    for (int base : {0, 12}) {
        reduce_options o;
        o.base_size = base;
        auto r = solve_subcubic(c6.g, c6.rot, o);
        CHECK(r.partition.a.size() == 5);
        CHECK(r.partition.i.size() == 1);
        CHECK(r.stats.base_cycle == 1);
    }
    auto q3 = family("hypercube", {3});
    CHECK(code_of([&] { solve_subcubic(q3.g, q3.rot); }) == error_code::not_in_class);
    auto oq3 = random_orientation(q3, 5);
    auto r = solve_subcubic(oq3.g, oq3.rot);
    CHECK(verify_cai(oq3.g, r.partition).ok);
    CHECK(solve_cai(oq3.g).status == solve_status::found);
}

TEST_CASE("no fallback on the corpus") {
    reduce_options o;
    o.base_size = 6;
    long long steps = 0;
    for (const auto& e : corpus(150, 8, 60)) {
        auto r = solve_subcubic(e.g, e.rot, o);
        CHECK(verify_cai(e.g, r.partition).ok);
        CHECK(r.stats.no_configuration == 0);
        CHECK(r.stats.no_case_applies == 0);
        CHECK(r.stats.local_search == 0);
        CHECK(r.stats.lifts_verified == r.stats.steps);
        steps += r.stats.steps;
    }
    CHECK(steps > 1000);
}

TEST_CASE("detection never comes up empty above the base size") {
    for (const auto& e : corpus(150, 13, 60)) {
        if (e.g.n() <= 12) continue;
        CHECK_NOTHROW(detect(e.g, e.rot));
    }
}

TEST_CASE("oracle agreement on small instances") {
    int count = 0;
    for (int seed = 0; count < 200; ++seed) {
        auto e = random_f_instance(1000 + seed, 8, 18);
        if (e.g.n() > 18) continue;
        ++count;
        reduce_options o;
        o.base_size = 4;
        auto r = solve_subcubic(e.g, e.rot, o);
        CHECK(verify_cai(e.g, r.partition).ok);
        CHECK(solve_cai(e.g).status == solve_status::found);
    }
}

TEST_CASE("trace format") {
    auto e = random_f_instance(5, 30, 40);
    reduce_options o;
    o.trace = true;
    auto r = solve_subcubic(e.g, e.rot, o);
    REQUIRE_FALSE(r.trace.empty());
    std::regex step(R"(( *)\[d=(\d+)\] n=\d+ e=\d+ rule=[A-Za-z0-9]+( variant=\S+)?( reversed)? roles( \S+=\d+)+ subs=\d+/\d+(,\d+/\d+)?)");
    std::regex lift_line(R"(( *)\[d=(\d+)\] lift rule=[A-Za-z0-9]+ case=\S+)");
    std::regex base(R"(( *)\[d=(\d+)\] base rule=(BaseCycle n=\d+|BaseSmall n=\d+ e=\d+))");
    std::istringstream in(r.trace);
    std::string ln;
    int steps = 0, lifts = 0, bases = 0;
    while (std::getline(in, ln)) {
        std::smatch m;
        bool ok = std::regex_match(ln, m, step) || std::regex_match(ln, m, lift_line) || std::regex_match(ln, m, base);
        INFO(ln);
        REQUIRE(ok);
        CHECK(m[1].length() == 2 * std::stoi(m[2]));
        steps += ln.find(" subs=") != std::string::npos;
        lifts += ln.find(" lift ") != std::string::npos;
        bases += ln.find(" base ") != std::string::npos;
    }
    CHECK(steps == r.stats.steps);
    CHECK(lifts == r.stats.steps);
    CHECK(bases == r.stats.base_cycle + r.stats.base_small);
    CHECK(solve_subcubic(e.g, e.rot).trace.empty());
}

TEST_CASE("lift rejects mismatched input") {
    auto p = random_orientation(family("prism", {8}), 1);
    auto sub = subdivide_even(p, 0, 1, 3);
    auto m = detect(sub.g, sub.rot, 0);
    auto st = reduce(sub.g, sub.rot, m);
    CHECK(code_of([&] { lift(sub.g, st, {}); }) == error_code::invalid_argument);
    CHECK(code_of([&] { reduce(sub.g, sub.rot, config_match{}); }) == error_code::invalid_argument);
}
