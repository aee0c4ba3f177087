#include "cai/cai.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "cai/duality.hpp"
#include "cai/ear_solver.hpp"
#include "cai/error.hpp"
#include "cai/exact_solver.hpp"
#include "cai/gadgets.hpp"
#include "cai/generators.hpp"
#include "cai/io.hpp"
#include "cai/reduction_solver.hpp"

struct cai_graph {
    cai::graph g;
    std::optional<cai::rotation_system> rot;
};

struct cai_solution {
    int status = CAI_UNSAT;
    std::optional<cai::cai_partition> partition;
    std::string partition_text;
    std::string stats;
    std::string trace;
};

namespace {

thread_local std::string last_error;

int status_of(cai::error_code c) {
    using cai::error_code;
    switch (c) {
        case error_code::out_of_range: return CAI_E_OUT_OF_RANGE;
        case error_code::mode_mismatch: return CAI_E_ARGUMENT;
        case error_code::invalid_graph: return CAI_E_INVALID_GRAPH;
        case error_code::parse_error: return CAI_E_PARSE;
        case error_code::inconsistent_rotation: return CAI_E_ROTATION;
        case error_code::planarity_violation: return CAI_E_PLANARITY;
        case error_code::malformed_partition: return CAI_E_PARTITION;
        case error_code::precondition: return CAI_E_PRECONDITION;
        case error_code::not_in_class: return CAI_E_NOT_IN_CLASS;
        case error_code::property_violation: return CAI_E_PROPERTY;
        case error_code::ear_without_interior: return CAI_E_PRECONDITION;
        case error_code::contradictory_forced: return CAI_E_CONTRADICTORY;
        case error_code::size_guard: return CAI_E_SIZE_GUARD;
        case error_code::invalid_argument: return CAI_E_ARGUMENT;
        default: return CAI_E_INTERNAL;
    }
}

int guarded(const std::function<int()>& body) {
    try {
        last_error.clear();
        return body();
    } catch (const cai::error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CAI_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CAI_E_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int need(const void* p, const char* what) {
    if (!p) cai::fail(cai::error_code::invalid_argument, std::string(what) + " is null");
    return 0;
}

cai_graph* wrap(cai::graph g, std::optional<cai::rotation_system> rot) {
    return new cai_graph{std::move(g), std::move(rot)};
}

int default_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CAI_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

const cai::rotation_system& need_rotation(const cai_graph* g, const char* who) {
    if (!g->rot) cai::fail(cai::error_code::precondition, std::string(who) + " needs a rotation system (rot lines)");
    return *g->rot;
}

std::string format_stats(const cai::reduce_stats& s) {
    std::ostringstream os;
    os << "steps=" << s.steps << '\n'
       << "base_cycle=" << s.base_cycle << '\n'
       << "base_small=" << s.base_small << '\n'
       << "skipped_matches=" << s.skipped_matches << '\n'
       << "local_search=" << s.local_search << '\n'
       << "no_configuration=" << s.no_configuration << '\n'
       << "no_case_applies=" << s.no_case_applies << '\n'
       << "lifts_verified=" << s.lifts_verified << '\n'
       << "max_depth=" << s.max_depth << '\n';
    for (const auto& [k, v] : s.rules) os << "rule." << k << '=' << v << '\n';
    for (const auto& [k, v] : s.cases) os << "case." << k << '=' << v << '\n';
    return os.str();
}

}  // namespace

extern "C" {

const char* cai_version(void) { return "1.0.0"; }

const char* cai_status_name(int status) {
    switch (status) {
        case CAI_OK: return "ok";
        case CAI_UNSAT: return "unsat";
        case CAI_BUDGET_EXCEEDED: return "budget_exceeded";
        case CAI_INVALID: return "invalid";
        case CAI_E_ARGUMENT: return "invalid_argument";
        case CAI_E_PARSE: return "parse_error";
        case CAI_E_OUT_OF_RANGE: return "out_of_range";
        case CAI_E_INVALID_GRAPH: return "invalid_graph";
        case CAI_E_ROTATION: return "inconsistent_rotation";
        case CAI_E_PLANARITY: return "planarity_violation";
        case CAI_E_PARTITION: return "malformed_partition";
        case CAI_E_NOT_IN_CLASS: return "not_in_class";
        case CAI_E_PRECONDITION: return "precondition";
        case CAI_E_PROPERTY: return "property_violation";
        case CAI_E_CONTRADICTORY: return "contradictory_forced";
        case CAI_E_SIZE_GUARD: return "size_guard";
        case CAI_E_IO: return "io_error";
        case CAI_E_INTERNAL: return "internal";
        default: return "unknown";
    }
}

const char* cai_last_error(void) { return last_error.c_str(); }

void cai_string_free(char* s) { std::free(s); }

void cai_default_options(cai_solve_options* opts) {
    if (!opts) return;
    *opts = cai_solve_options{};
    opts->method = CAI_METHOD_EXACT;
}

int cai_graph_parse(const char* text, cai_graph** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        auto f = cai::parse_graph(text);
        *out = wrap(std::move(f.g), std::move(f.rot));
        return CAI_OK;
    });
}

int cai_graph_read(const char* path, cai_graph** out) {
    int io = guarded([&] {
        need(path, "path");
        need(out, "out");
        return CAI_OK;
    });
    if (io != CAI_OK) return io;
    std::string text;
    int st = guarded([&] {
        text = cai::read_file(path);
        return CAI_OK;
    });
    if (st != CAI_OK) return CAI_E_IO;
    return cai_graph_parse(text.c_str(), out);
}

void cai_graph_free(cai_graph* g) { delete g; }

int cai_graph_n(const cai_graph* g) { return g ? g->g.n() : -1; }
int cai_graph_edge_count(const cai_graph* g) { return g ? g->g.num_edges() : -1; }
int cai_graph_is_directed(const cai_graph* g) { return g ? g->g.directed() : -1; }
int cai_graph_has_rotation(const cai_graph* g) { return g ? g->rot.has_value() : -1; }

int cai_graph_serialize(const cai_graph* g, char** text) {
    return guarded([&] {
        need(g, "graph");
        need(text, "text");
        *text = dup(cai::serialize_graph(g->g, g->rot ? &*g->rot : nullptr));
        return CAI_OK;
    });
}

int cai_solve(const cai_graph* g, const cai_solve_options* opts, cai_solution** out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        cai_solve_options o;
        cai_default_options(&o);
        if (opts) o = *opts;
        auto sol = std::make_unique<cai_solution>();
        if (o.method == CAI_METHOD_EXACT) {
            cai::solve_options so;
            for (int k = 0; k < o.forced_a_count; ++k) so.forced_a.push_back(o.forced_a[k]);
            for (int k = 0; k < o.forced_i_count; ++k) so.forced_i.push_back(o.forced_i[k]);
            so.node_budget = o.node_budget;
            so.worker_count = default_workers(o.workers);
            auto r = cai::solve_cai(g->g, so);
            sol->status = r.status == cai::solve_status::found   ? CAI_OK
                          : r.status == cai::solve_status::unsat ? CAI_UNSAT
                                                                 : CAI_BUDGET_EXCEEDED;
            sol->partition = r.partition;
            sol->stats = "nodes=" + std::to_string(r.nodes) + "\n";
        } else if (o.method == CAI_METHOD_REDUCE) {
            if (o.forced_a_count || o.forced_i_count)
                cai::fail(cai::error_code::invalid_argument, "forced vertices need the exact method");
            cai::reduce_options ro;
            ro.trace = o.trace != 0;
            if (o.base_size > 0) ro.base_size = o.base_size;
            auto r = cai::solve_subcubic(g->g, need_rotation(g, "reduce"), ro);
            sol->status = CAI_OK;
            sol->partition = r.partition;
            sol->stats = format_stats(r.stats);
            sol->trace = r.trace;
        } else if (o.method == CAI_METHOD_EARS) {
            if (o.forced_a_count || o.forced_i_count)
                cai::fail(cai::error_code::invalid_argument, "forced vertices need the exact method");
            // a forest of the underlying graph is acyclic under every orientation
            auto p = cai::solve_series_parallel(g->g.directed() ? cai::underlying(g->g) : g->g);
            if (!cai::verify_cai(g->g, p)) cai::fail(cai::error_code::internal, "ear partition fails verification");
            sol->status = CAI_OK;
            sol->partition = p;
        } else {
            cai::fail(cai::error_code::invalid_argument, "unknown method");
        }
        if (sol->partition) sol->partition_text = cai::serialize_partition(*sol->partition);
        int st = sol->status;
        *out = sol.release();
        return st;
    });
}

void cai_solution_free(cai_solution* s) { delete s; }
int cai_solution_status(const cai_solution* s) { return s ? s->status : CAI_E_ARGUMENT; }

int cai_solution_in_a(const cai_solution* s, int v) {
    if (!s || !s->partition || v < 0 || v >= s->partition->a.universe()) return -1;
    return s->partition->a.contains(v) ? 1 : 0;
}

const char* cai_solution_partition(const cai_solution* s) { return s ? s->partition_text.c_str() : ""; }
const char* cai_solution_stats(const cai_solution* s) { return s ? s->stats.c_str() : ""; }
const char* cai_solution_trace(const cai_solution* s) { return s ? s->trace.c_str() : ""; }

int cai_verify(const cai_graph* g, const char* kind, const char* partition_text, char** report) {
    return guarded([&] {
        need(g, "graph");
        need(kind, "kind");
        need(partition_text, "partition");
        auto pf = cai::parse_partition(partition_text, g->g.n());
        std::string k = kind;
        cai::verdict v;
        if (k == "cai") {
            if (pf.two_acyclic) cai::fail(cai::error_code::malformed_partition, "expected A/I lines");
            v = cai::verify_cai(g->g, pf.cai);
        } else if (k == "two-acyclic") {
            if (!pf.two_acyclic) cai::fail(cai::error_code::malformed_partition, "expected A1/A2 lines");
            v = cai::verify_two_acyclic(g->g, pf.bi);
        } else {
            cai::fail(cai::error_code::invalid_argument, "kind must be cai or two-acyclic");
        }
        std::ostringstream os;
        if (v.ok) {
            os << "valid " << k << '\n';
        } else {
            os << "invalid " << k << ": " << v.clause;
            if (!v.detail.empty()) os << " (" << v.detail << ")";
            if (!v.witness.empty()) {
                os << " witness";
                for (int w : v.witness) os << ' ' << w;
            }
            os << '\n';
        }
        if (report) *report = dup(os.str());
        return v.ok ? CAI_OK : CAI_INVALID;
    });
}

int cai_generate_family(const char* name, const int* size, int size_count, unsigned long long seed, int orient,
                        cai_graph** out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        std::vector<int> sz(size, size + (size ? size_count : 0));
        auto e = cai::family(name, sz);
        if (orient) e = cai::random_orientation(e, seed);
        *out = wrap(e.g, e.rot);
        return CAI_OK;
    });
}

int cai_generate_random_f(unsigned long long seed, int min_n, int max_n, cai_graph** out) {
    return guarded([&] {
        need(out, "out");
        auto e = cai::random_f_instance(seed, min_n, max_n);
        *out = wrap(e.g, e.rot);
        return CAI_OK;
    });
}

int cai_generate_series_parallel(unsigned long long seed, int n, int bipartite, cai_graph** out) {
    return guarded([&] {
        need(out, "out");
        *out = wrap(cai::random_series_parallel(seed, n, bipartite != 0), std::nullopt);
        return CAI_OK;
    });
}

int cai_generate_triangulation(int size_hint, unsigned long long seed, cai_graph** out) {
    return guarded([&] {
        need(out, "out");
        auto t = cai::random_eulerian_triangulation(size_hint, seed);
        *out = wrap(t.g, t.rot);
        return CAI_OK;
    });
}

int cai_gadget(const char* which, int k, unsigned orientation, cai_graph** out) {
    return guarded([&] {
        need(which, "which");
        need(out, "out");
        std::string w = which;
        if (w == "g1" || w == "g2") {
            auto gd = w == "g1" ? cai::build_g1() : cai::build_g2();
            *out = wrap(gd.g, gd.rot);
        } else if (w == "thm12" || w == "chain") {
            auto t = w == "thm12" ? cai::build_theorem12() : cai::build_corollary11(k);
            *out = wrap(t.g, t.rot);
        } else if (w.size() == 5 && w.rfind("fig8", 0) == 0) {
            *out = wrap(cai::catalog_fig8(w[4], orientation), std::nullopt);
        } else {
            cai::fail(cai::error_code::invalid_argument, "unknown gadget " + w);
        }
        return CAI_OK;
    });
}

int cai_gadget_verify(char** report) {
    return guarded([&] {
        auto r = cai::verify_gadget_lemma();
        if (report) *report = dup(cai::format_report(r));
        return r.ok() ? CAI_OK : CAI_INVALID;
    });
}

int cai_certify_theorem10(long long node_budget, int workers, char** report) {
    return guarded([&] {
        auto rs = cai::certify_theorem10(node_budget, default_workers(workers));
        std::ostringstream os;
        bool found = false;
        bool budget = false;
        for (const auto& r : rs) {
            os << "class " << r.cls << ": vertices=" << r.vertices
               << " status=" << cai::solve_status_name(r.result.status) << " nodes=" << r.result.nodes;
            if (r.result.status == cai::solve_status::found)
                os << " verified=" << (r.verified_found ? "yes" : "no");
            os << '\n';
            found = found || r.result.status == cai::solve_status::found;
            budget = budget || r.result.status == cai::solve_status::budget_exceeded;
        }
        if (report) *report = dup(os.str());
        // a found partition would refute the construction; report it as invalid
        if (found) return CAI_INVALID;
        return budget ? CAI_BUDGET_EXCEEDED : CAI_UNSAT;
    });
}

int cai_dualize(const cai_graph* g, int up, int cls, cai_graph** out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        const auto& rot = need_rotation(g, "dualize");
        if (up) {
            auto t = cai::triangulate_up(g->g, rot);
            *out = wrap(t.g, t.rot);
        } else {
            if (cls < 0 || cls > 2) cai::fail(cai::error_code::invalid_argument, "class must be 0, 1 or 2");
            auto t = cai::make_bundle(g->g, rot);
            auto d = cai::delete_class(t, cls);
            *out = wrap(d.g, d.rot);
        }
        return CAI_OK;
    });
}

int cai_ears(const cai_graph* g, char** text) {
    return guarded([&] {
        need(g, "graph");
        need(text, "text");
        auto ed = cai::short_nested_ears(g->g.directed() ? cai::underlying(g->g) : g->g);
        *text = dup(cai::format_ears(ed));
        return CAI_OK;
    });
}

int cai_audit(const cai_graph* g, char** report) {
    return guarded([&] {
        need(g, "graph");
        need(report, "report");
        auto faces = cai::trace_faces(g->g, need_rotation(g, "audit"));
        auto r = cai::discharge_audit(g->g, faces);
        std::ostringstream os;
        os << "vertices=" << g->g.n() << " faces=" << faces.size() << '\n';
        os << "total_initial=" << r.total_initial << '\n';
        os << "total_final=" << r.total_final << '\n';
        os << "bad_vertices=" << r.bad_vertices.size() << '\n';
        os << "negative_vertices";
        for (int v : r.negative_vertices) os << ' ' << v;
        os << "\nnegative_faces";
        for (int f : r.negative_faces) os << ' ' << f << ':' << faces.at(f).degree();
        os << '\n';
        *report = dup(os.str());
        return CAI_OK;
    });
}

}  // extern "C"
