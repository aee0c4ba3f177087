#include <cstdio>
#include <filesystem>

#include "cai/error.hpp"
#include "cai/gadgets.hpp"
#include "cai/generators.hpp"
#include "cai/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cai;

namespace {

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("single arc digraph") {
    auto f = parse_graph("graph directed\nn 2\ne 0 1");
    CHECK(f.g.directed());
    CHECK(f.g.n() == 2);
    CHECK(f.g.num_arcs() == 1);
    CHECK(f.g.has_arc(0, 1));
    CHECK_FALSE(f.rot.has_value());
}

TEST_CASE("comments and blank lines") {
    auto f = parse_graph("# a square\ngraph undirected\n\nn 4  # four vertices\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    CHECK(f.g.num_edges() == 4);
}

TEST_CASE("gadget round trip") {
    for (const auto& gd : {build_g1(), build_g2()}) {
        auto text = serialize_graph(gd.g, &gd.rot);
        auto back = parse_graph(text);
        CHECK(back.g == gd.g);
        REQUIRE(back.rot.has_value());
        CHECK(*back.rot == gd.rot);
        CHECK(serialize_graph(back.g, &*back.rot) == text);
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto e = random_f_instance(seed, 8, 40);
        auto text = serialize_graph(e.g, &e.rot);
        auto back = parse_graph(text);
        CHECK(back.g == e.g);
        CHECK(serialize_graph(back.g, &*back.rot) == text);
    }
}

TEST_CASE("rotation errors") {
    std::string base = "graph undirected\nn 3\ne 0 1\ne 1 2\ne 2 0\n";
    CHECK(code_of([&] { parse_graph(base + "rot 0 1 2\nrot 1 2 0\nrot 2 0\n"); }) ==
          error_code::inconsistent_rotation);
    CHECK(code_of([&] { parse_graph(base + "rot 0 1 2\nrot 1 2 0\n"); }) == error_code::inconsistent_rotation);
    CHECK(code_of([&] { parse_graph(base + "rot 0 1 2\nrot 0 2 1\n"); }) == error_code::inconsistent_rotation);
    CHECK(message_of([&] { parse_graph(base + "rot 0 1 2\nrot 1 2 0\nrot 2 0\n"); }).find("line 8") !=
          std::string::npos);
    CHECK_NOTHROW(parse_graph(base + "rot 0 1 2\nrot 1 2 0\nrot 2 0 1\n"));
}

TEST_CASE("syntax errors carry a location") {
    auto m = message_of([] { parse_graph("graph directed\nn 3\ne 0 x\n"); });
    CHECK(m.find("line 3 col 5") != std::string::npos);
    CHECK(code_of([] { parse_graph("graph sideways\nn 1\n"); }) == error_code::parse_error);
    CHECK(code_of([] { parse_graph("n 2\n"); }) == error_code::parse_error);
    CHECK(code_of([] { parse_graph("graph directed\ne 0 1\n"); }) == error_code::parse_error);
    CHECK(code_of([] { parse_graph("graph directed\nn 2\nedge 0 1\n"); }) == error_code::parse_error);
    CHECK(code_of([] { parse_graph("graph directed\n"); }) == error_code::parse_error);
}

TEST_CASE("semantic errors") {
    CHECK(code_of([] { parse_graph("graph directed\nn 2\ne 0 2\n"); }) == error_code::out_of_range);
    CHECK(code_of([] { parse_graph("graph directed\nn 2\ne 1 1\n"); }) == error_code::invalid_graph);
    CHECK(code_of([] { parse_graph("graph undirected\nn 2\ne 0 1\ne 1 0\n"); }) == error_code::invalid_graph);
    CHECK(code_of([] { parse_graph("graph directed\nn 2\ne 0 1\ne 0 1\n"); }) == error_code::invalid_graph);
    // a digon is two distinct arcs and parses
    CHECK_NOTHROW(parse_graph("graph directed\nn 2\ne 0 1\ne 1 0\n"));
}

TEST_CASE("partition files") {
    auto p = parse_partition("A 0 1 2\nI 3\n", 4);
    CHECK_FALSE(p.two_acyclic);
    CHECK(p.cai.a.size() == 3);
    CHECK(p.cai.i.contains(3));
    CHECK(serialize_partition(p.cai) == "A 0 1 2\nI 3\n");
    auto q = parse_partition("A1 0 2\nA2 1 3\n", 4);
    CHECK(q.two_acyclic);
    CHECK(serialize_partition(q.bi) == "A1 0 2\nA2 1 3\n");
    auto empty_i = parse_partition("A 0 1\nI\n", 2);
    CHECK(empty_i.cai.i.empty());
    CHECK(code_of([] { parse_partition("A 0 1\nI 1\n", 2); }) == error_code::malformed_partition);
    CHECK(code_of([] { parse_partition("A 0\n", 2); }) == error_code::malformed_partition);
    CHECK(code_of([] { parse_partition("A 0 5\n", 2); }) == error_code::out_of_range);
    CHECK(code_of([] { parse_partition("A 0\nA2 1\n", 2); }) == error_code::parse_error);
    CHECK(code_of([] { parse_partition("B 0 1\n", 2); }) == error_code::parse_error);
}

TEST_CASE("files") {
    auto path = (std::filesystem::temp_directory_path() / "cai_io_test.graph").string();
    write_file(path, "graph directed\nn 2\ne 0 1\n");
    CHECK(read_file(path) == "graph directed\nn 2\ne 0 1\n");
    std::remove(path.c_str());
    CHECK(code_of([] { read_file("/nonexistent/dir/file"); }) == error_code::invalid_argument);
}
