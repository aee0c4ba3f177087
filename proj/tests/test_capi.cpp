#include <cstdlib>
#include <string>

#include "cai/cai.h"
#include "doctest.h"

namespace {

const char* q3_text =
    "graph undirected\nn 8\n"
    "e 0 1\ne 1 3\ne 3 2\ne 2 0\ne 4 5\ne 5 7\ne 7 6\ne 6 4\ne 0 4\ne 1 5\ne 2 6\ne 3 7\n";

std::string take(char* s) {
    std::string out = s ? s : "";
    cai_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status names and options") {
    CHECK(std::string(cai_status_name(CAI_OK)) == "ok");
    CHECK(std::string(cai_status_name(CAI_UNSAT)) == "unsat");
    CHECK(std::string(cai_version()).size() > 0);
    cai_solve_options o;
    cai_default_options(&o);
    CHECK(o.method == CAI_METHOD_EXACT);
    CHECK(o.node_budget == 0);
}

TEST_CASE("parse and inspect") {
    cai_graph* g = nullptr;
    REQUIRE(cai_graph_parse(q3_text, &g) == CAI_OK);
    CHECK(cai_graph_n(g) == 8);
    CHECK(cai_graph_edge_count(g) == 12);
    CHECK_FALSE(cai_graph_is_directed(g));
    CHECK_FALSE(cai_graph_has_rotation(g));
    char* text = nullptr;
    REQUIRE(cai_graph_serialize(g, &text) == CAI_OK);
    cai_graph* h = nullptr;
    CHECK(cai_graph_parse(take(text).c_str(), &h) == CAI_OK);
    CHECK(cai_graph_edge_count(h) == 12);
    cai_graph_free(h);
    cai_graph_free(g);

    cai_graph* bad = nullptr;
    CHECK(cai_graph_parse("graph directed\nn 2\ne 0 7\n", &bad) == CAI_E_OUT_OF_RANGE);
    CHECK(bad == nullptr);
    CHECK(std::string(cai_last_error()).find("line 3") != std::string::npos);
    CHECK(cai_graph_parse("graph\n", &bad) == CAI_E_PARSE);
    CHECK(cai_graph_parse(nullptr, &bad) == CAI_E_ARGUMENT);
    CHECK(cai_graph_read("/nonexistent/file", &bad) != CAI_OK);
}

TEST_CASE("exact solve of the cube is unsat") {
    cai_graph* g = nullptr;
    REQUIRE(cai_graph_parse(q3_text, &g) == CAI_OK);
    cai_solve_options o;
    cai_default_options(&o);
    cai_solution* s = nullptr;
    CHECK(cai_solve(g, &o, &s) == CAI_UNSAT);
    REQUIRE(s != nullptr);
    CHECK(cai_solution_status(s) == CAI_UNSAT);
    CHECK(std::string(cai_solution_partition(s)).empty());
    CHECK(cai_solution_in_a(s, 0) == -1);
    CHECK(std::string(cai_solution_stats(s)).find("nodes=") != std::string::npos);
    cai_solution_free(s);

    int forced[] = {0, 1};
    o.forced_a = forced;
    o.forced_a_count = 1;
    o.forced_i = forced;
    o.forced_i_count = 1;
    s = nullptr;
    CHECK(cai_solve(g, &o, &s) == CAI_E_CONTRADICTORY);
    cai_solution_free(s);
    cai_graph_free(g);
}

TEST_CASE("reduce, then verify") {
    cai_graph* g = nullptr;
    REQUIRE(cai_generate_random_f(11, 20, 40, &g) == CAI_OK);
    CHECK(cai_graph_is_directed(g));
    CHECK(cai_graph_has_rotation(g));
    cai_solve_options o;
    cai_default_options(&o);
    o.method = CAI_METHOD_REDUCE;
    o.trace = 1;
    cai_solution* s = nullptr;
    REQUIRE(cai_solve(g, &o, &s) == CAI_OK);
    std::string part = cai_solution_partition(s);
    CHECK(part.rfind("A ", 0) == 0);
    CHECK(std::string(cai_solution_trace(s)).find("[d=0]") != std::string::npos);
    CHECK(std::string(cai_solution_stats(s)).find("rule.") != std::string::npos);
    int in_a = 0;
    for (int v = 0; v < cai_graph_n(g); ++v) in_a += cai_solution_in_a(s, v) == 1;
    CHECK(in_a > 0);
    char* report = nullptr;
    CHECK(cai_verify(g, "cai", part.c_str(), &report) == CAI_OK);
    CHECK(take(report) == "valid cai\n");
    CHECK(cai_verify(g, "cai", "A\nI\n", &report) == CAI_E_PARTITION);
    cai_solution_free(s);

    std::string all = "A";
    for (int v = 0; v < cai_graph_n(g); ++v) all += " " + std::to_string(v);
    all += "\nI\n";
    report = nullptr;
    CHECK(cai_verify(g, "cai", all.c_str(), &report) == CAI_INVALID);
    CHECK(take(report).rfind("invalid cai: ", 0) == 0);
    CHECK(cai_verify(g, "triangle", all.c_str(), &report) == CAI_E_ARGUMENT);
    cai_graph_free(g);
}

TEST_CASE("reduce needs an embedding") {
    cai_graph* g = nullptr;
    REQUIRE(cai_graph_parse(q3_text, &g) == CAI_OK);
    cai_solve_options o;
    cai_default_options(&o);
    o.method = CAI_METHOD_REDUCE;
    cai_solution* s = nullptr;
    CHECK(cai_solve(g, &o, &s) == CAI_E_PRECONDITION);
    cai_solution_free(s);
    cai_graph_free(g);
}

TEST_CASE("ears method") {
    cai_graph* g = nullptr;
    REQUIRE(cai_generate_series_parallel(3, 40, 1, &g) == CAI_OK);
    cai_solve_options o;
    cai_default_options(&o);
    o.method = CAI_METHOD_EARS;
    cai_solution* s = nullptr;
    REQUIRE(cai_solve(g, &o, &s) == CAI_OK);
    char* report = nullptr;
    CHECK(cai_verify(g, "cai", cai_solution_partition(s), &report) == CAI_OK);
    cai_string_free(report);
    cai_solution_free(s);
    char* text = nullptr;
    CHECK(cai_ears(g, &text) == CAI_OK);
    CHECK(take(text).rfind("ear 0 cycle", 0) == 0);
    cai_graph_free(g);
}

TEST_CASE("gadgets and duality") {
    cai_graph* t = nullptr;
    REQUIRE(cai_gadget("thm12", 1, 0, &t) == CAI_OK);
    CHECK(cai_graph_n(t) == 138);
    CHECK(cai_graph_edge_count(t) == 408);
    cai_graph* h = nullptr;
    REQUIRE(cai_dualize(t, 0, 0, &h) == CAI_OK);
    CHECK(cai_graph_n(h) < 138);
    cai_graph* back = nullptr;
    REQUIRE(cai_dualize(h, 1, 0, &back) == CAI_OK);
    CHECK(cai_graph_n(back) == 138);
    CHECK(cai_graph_edge_count(back) == 408);
    CHECK(cai_dualize(t, 0, 5, &h) != CAI_OK);
    cai_graph_free(back);
    cai_graph_free(h);
    cai_graph_free(t);

    cai_graph* q = nullptr;
    REQUIRE(cai_gadget("fig8b", 1, 0, &q) == CAI_OK);
    CHECK(cai_graph_n(q) == 8);
    cai_graph_free(q);
    CHECK(cai_gadget("nope", 1, 0, &q) == CAI_E_ARGUMENT);

    char* report = nullptr;
    CHECK(cai_gadget_verify(&report) == CAI_OK);
    CHECK(take(report).find("item 10") != std::string::npos);
}

TEST_CASE("audit") {
    cai_graph* g = nullptr;
    const int size[] = {8};
    REQUIRE(cai_generate_family("prism", size, 1, 0, 0, &g) == CAI_OK);
    char* report = nullptr;
    REQUIRE(cai_audit(g, &report) == CAI_OK);
    auto r = take(report);
    CHECK(r.find("total_initial=-12") != std::string::npos);
    CHECK(r.find("total_final=-12") != std::string::npos);
    cai_graph_free(g);
}
