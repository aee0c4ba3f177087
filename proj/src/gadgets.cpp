#include "cai/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cai/error.hpp"

namespace cai {

namespace {

using point = std::pair<double, double>;

const std::vector<point> g1_xy = {
    {0, 5},     {5, 5},      {5, 0},     {0, 0},       {2.5, 2.513}, {3.675, 1.25}, {1.2, 3.8},
    {2.5, 0.8}, {2.5, 1.7},  {3.6, 0.5}, {3.8, 2.513}, {2.5, 3.8},   {1.2, 2.513},
};

const std::vector<arc> g1_arcs = {
    {0, 3},  {0, 6},  {1, 0}, {1, 4}, {2, 1}, {3, 2},  {3, 7}, {4, 3},  {4, 5},  {4, 6},  {5, 2},
    {7, 5},  {0, 11}, {12, 0}, {11, 4}, {11, 1}, {4, 12}, {12, 3}, {8, 4},  {3, 8},  {7, 8},  {8, 5},
    {5, 9},  {9, 3},  {2, 9}, {9, 7}, {10, 4}, {1, 10}, {5, 10}, {10, 2}, {6, 12}, {6, 11},
};

const std::vector<arc> g2_arcs = {
    {0, 3},  {0, 6},  {1, 0},  {1, 4},  {2, 1},  {3, 2},  {7, 3},  {4, 3},  {4, 5},  {6, 4},  {5, 2},  {5, 7},
    {11, 0}, {0, 12}, {4, 11}, {11, 1}, {12, 4}, {3, 12}, {4, 8},  {8, 3},  {8, 7},  {5, 8},  {9, 5},  {3, 9},
    {9, 2},  {7, 9},  {10, 4}, {1, 10}, {10, 5}, {2, 10}, {12, 6}, {6, 11}, {13, 0}, {3, 13}, {2, 13}, {1, 13},
};

std::vector<std::string> numbered(int n, const std::string& prefix) {
    std::vector<std::string> out;
    for (int v = 0; v < n; ++v) out.push_back(prefix + std::to_string(v));
    return out;
}

std::vector<std::vector<int>> faces_without(const graph& g, const rotation_system& rot, std::vector<int> outer) {
    std::sort(outer.begin(), outer.end());
    std::vector<std::vector<int>> out;
    int dropped = 0;
    auto fs = trace_faces(g, rot);
    for (const face& f : fs.faces()) {
        std::vector<int> vs = f.walk;
        std::sort(vs.begin(), vs.end());
        if (vs == outer) {
            ++dropped;
            continue;
        }
        out.push_back(f.walk);
    }
    if (dropped != 1) fail(error_code::internal, "gadget outer face not found exactly once");
    return out;
}

// accumulates arcs and faces of glued pieces
struct assembly {
    int n = 0;
    std::map<std::pair<int, int>, arc> arcs;  // keyed by unordered pair
    std::vector<std::vector<int>> faces;
    std::vector<std::string> labels;

    int add_vertex(const std::string& label) {
        labels.push_back(label);
        return n++;
    }

    void add_arc(int u, int v) {
        auto key = std::minmax(u, v);
        auto it = arcs.find(key);
        if (it == arcs.end()) {
            arcs[key] = {u, v};
            return;
        }
        if (it->second.from != u)
            fail(error_code::glue_conflict, "opposite arcs glued between " + labels[u] + " and " + labels[v]);
    }

    triangulation_bundle finish() const {
        std::vector<arc> list;
        for (auto& [k, a] : arcs) list.push_back(a);
        graph g(mode::directed, n, list, labels);
        auto rot = rotation_from_faces(n, faces);
        check_rotation(g, rot);
        return make_bundle(g, rot);
    }
};

// copies a gadget into the assembly; map gives the assembly id of every gadget vertex (-1 = fresh)
void paste(assembly& as, const gadget& gd, std::vector<int> map, const std::string& prefix) {
    for (int v = 0; v < gd.g.n(); ++v)
        if (map[v] < 0) map[v] = as.add_vertex(prefix + std::to_string(v));
    for (const arc& a : gd.g.arcs()) as.add_arc(map[a.from], map[a.to]);
    std::vector<int> outer;
    for (int v : gd.interface) outer.push_back(v);
    for (auto f : faces_without(gd.g, gd.rot, outer)) {
        for (int& x : f) x = map[x];
        as.faces.push_back(f);
    }
}

bool has_face(const face_set& fs, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    for (const face& f : fs.faces()) {
        std::vector<int> w = f.walk;
        std::sort(w.begin(), w.end());
        if (w == vs) return true;
    }
    return false;
}

}  // namespace

gadget build_g1() {
    graph g(mode::directed, 13, g1_arcs);
    auto rot = rotation_from_coordinates(g, g1_xy);
    trace_faces(g, rot);
    return {g, rot, {0, 1, 2, 3}};
}

gadget build_g2() {
    graph g(mode::directed, 14, g2_arcs);
    auto xy = g1_xy;
    xy.push_back({-1.7, 2.5});
    // 13 reaches 1 and 2 by bent edges around the square
    std::map<std::pair<int, int>, double> tangent = {{{13, 1}, 70}, {{13, 2}, -70}, {{1, 13}, 110}, {{2, 13}, 250}};
    auto rot = rotation_from_coordinates(g, xy, tangent);
    trace_faces(g, rot);
    return {g, rot, {1, 2, 13}};
}

bool gadget_report::ok() const {
    return std::all_of(items.begin(), items.end(), [](const lemma_item& i) { return i.ok; });
}

gadget_report verify_gadget_lemma() {
    gadget_report r;
    auto g1 = build_g1(), g2 = build_g2();
    auto deg_item = [&](int item, const gadget& gd, const char* name, int v, int out, int in) {
        auto d = degree(gd.g, v);
        std::ostringstream st, dt;
        st << "d+_" << name << "(" << v << ")=" << out << ", d-_" << name << "(" << v << ")=" << in;
        dt << "counted d+=" << *d.out << " d-=" << *d.in;
        r.items.push_back({item, st.str(), *d.out == out && *d.in == in, dt.str()});
    };
    {
        bool ok = true;
        std::string bad;
        for (const gadget* gd : {&g1, &g2})
            for (int v = 4; v <= 12; ++v) {
                auto d = degree(gd->g, v);
                if (*d.out != *d.in) {
                    ok = false;
                    bad += " " + std::string(gd == &g1 ? "G1:" : "G2:") + std::to_string(v);
                }
            }
        r.items.push_back({1, "d+(i)=d-(i) for i in 4..12 in G1 and G2", ok, ok ? "18 vertices balanced" : "unbalanced:" + bad});
    }
    deg_item(2, g1, "G1", 0, 3, 2);
    deg_item(3, g1, "G1", 1, 3, 2);
    deg_item(4, g1, "G1", 2, 2, 3);
    deg_item(5, g1, "G1", 3, 3, 4);
    deg_item(6, g2, "G2", 1, 4, 2);
    deg_item(7, g2, "G2", 2, 3, 3);
    deg_item(8, g2, "G2", 13, 1, 3);
    auto forall_item = [&](int item, const gadget& gd, std::vector<int> inner, const std::string& st) {
        auto res = forall_two_acyclic(gd.g, [&](const bi_acyclic_partition& p) {
            if (!p.a1.contains(1) || !p.a1.contains(2)) return true;
            return !std::all_of(inner.begin(), inner.end(), [&](int v) { return p.a2.contains(v); });
        });
        std::string dt = std::to_string(res.partitions_checked) + " acyclic partitions checked";
        if (!res.holds) {
            dt += ", counterexample A1 =";
            for (int v : res.counterexample->a1.members()) dt += " " + std::to_string(v);
        }
        r.items.push_back({item, st, res.holds, dt});
    };
    forall_item(9, g1, {8, 9, 10, 11, 12}, "G1: {1,2} in A1 implies {8..12} not in A2");
    forall_item(10, g2, {8, 9, 10, 11, 12, 13}, "G2: {1,2} in A1 implies {8..13} not in A2");
    return r;
}

std::string format_report(const gadget_report& r) {
    std::ostringstream os;
    for (const auto& i : r.items)
        os << "item " << i.item << " " << (i.ok ? "ok" : "FAIL") << "  " << i.statement << "  (" << i.detail << ")\n";
    os << (r.ok() ? "all items hold" : "some items fail") << "\n";
    return os.str();
}

triangulation_bundle build_theorem12() {
    assembly as;
    for (int i = 0; i < 18; ++i) as.add_vertex("v" + std::to_string(i));
    // octahedron on the hubs v0..v5: outer triangle v0 v2 v1, inner triangle v3 v5 v4
    const std::vector<arc> octa = {{0, 2}, {2, 1}, {1, 0}, {3, 5}, {5, 4}, {4, 3},
                                   {0, 3}, {4, 0}, {1, 4}, {5, 1}, {2, 5}, {3, 2}};
    for (const arc& a : octa) as.add_arc(a.from, a.to);
    as.faces.push_back({0, 1, 2});
    as.faces.push_back({3, 4, 5});
    // G1(p,q,r,s) sits on the triangle edge qr inside the side face (w,q,r); G2(q,w,p) beside it
    struct side {
        int p, q, r, s, w;
    };
    const side sides[6] = {{6, 3, 4, 7, 0},   {8, 0, 1, 9, 4},   {10, 4, 5, 11, 1},
                           {12, 1, 2, 13, 5}, {14, 5, 3, 15, 2}, {16, 2, 0, 17, 3}};
    auto g1 = build_g1(), g2 = build_g2();
    int copy = 0;
    for (const side& sd : sides) {
        std::vector<int> m1(13, -1);
        m1[0] = sd.p, m1[1] = sd.q, m1[2] = sd.r, m1[3] = sd.s;
        paste(as, g1, m1, "g1." + std::to_string(copy) + ".");
        std::vector<int> m2(14, -1);
        m2[1] = sd.q, m2[2] = sd.w, m2[13] = sd.p;
        paste(as, g2, m2, "g2." + std::to_string(copy) + ".");
        as.add_arc(sd.s, sd.w);
        as.faces.push_back({sd.w, sd.p, sd.s});
        as.faces.push_back({sd.w, sd.s, sd.r});
        ++copy;
    }
    auto t = as.finish();
    validate_triangulation(t.g, t.faces);
    if (!has_face(t.faces, {0, 1, 2}) || !has_face(t.faces, {3, 4, 5}))
        fail(error_code::internal, "hub triangles are not faces");
    return t;
}

triangulation_bundle build_corollary11(int k) {
    if (k < 1) fail(error_code::invalid_argument, "k must be at least 1");
    auto base = build_theorem12();
    if (k == 1) return base;
    auto base_faces = base.faces.faces();
    assembly as;
    std::vector<int> prev;
    int copies = 2 * k - 1;
    for (int c = 0; c < copies; ++c) {
        std::vector<int> map(base.g.n(), -1);
        if (c > 0) {
            // inner triangle of the previous copy becomes this copy's outer triangle
            map[0] = prev[5];
            map[1] = prev[3];
            map[2] = prev[4];
        }
        for (int v = 0; v < base.g.n(); ++v)
            if (map[v] < 0) map[v] = as.add_vertex("c" + std::to_string(c) + "." + base.g.label(v));
        for (const arc& a : base.g.arcs()) as.add_arc(map[a.from], map[a.to]);
        for (const face& f : base_faces) {
            std::vector<int> vs = f.walk;
            std::sort(vs.begin(), vs.end());
            if (c > 0 && vs == std::vector<int>{0, 1, 2}) continue;
            if (c + 1 < copies && vs == std::vector<int>{3, 4, 5}) continue;
            std::vector<int> w;
            for (int x : f.walk) w.push_back(map[x]);
            as.faces.push_back(w);
        }
        prev = map;
    }
    auto t = as.finish();
    validate_triangulation(t.g, t.faces);
    return t;
}

int fig8_free_edges(char which) {
    switch (which) {
    case 'a': return 8;
    case 'e': return 6;
    case 'b':
    case 'c':
    case 'd': return 0;
    default: fail(error_code::invalid_argument, std::string("no figure '") + which + "'");
    }
}

graph catalog_fig8(char which, unsigned orientation) {
    int free = fig8_free_edges(which);
    if (orientation >= (1u << free)) fail(error_code::invalid_argument, "bold orientation index out of range");
    std::vector<arc> arcs;
    auto bold = [&](int j, int u, int v) { arcs.push_back((orientation >> j & 1) ? arc{v, u} : arc{u, v}); };
    switch (which) {
    case 'a': {
        const std::vector<arc> left = {{0, 3}, {1, 0}, {1, 4}, {2, 1}, {3, 2}, {4, 3}, {4, 5}, {5, 2}};
        for (const arc& a : left) {
            arcs.push_back(a);
            arcs.push_back({a.to + 8, a.from + 8});
        }
        bold(0, 0, 6), bold(1, 6, 4), bold(2, 3, 7), bold(3, 7, 5);
        bold(4, 8, 14), bold(5, 14, 12), bold(6, 11, 15), bold(7, 15, 13);
        arcs.push_back({10, 2});
        arcs.push_back({1, 9});
        std::vector<std::string> labels = numbered(8, "");
        for (int v = 0; v < 8; ++v) labels.push_back(std::to_string(v) + "'");
        return graph(mode::directed, 16, arcs, labels);
    }
    case 'b': {
        for (int v = 0; v < 8; ++v)
            for (int b = 0; b < 3; ++b)
                if (!(v >> b & 1)) arcs.push_back({v, v | (1 << b)});
        std::vector<std::string> labels;
        for (int v = 0; v < 8; ++v)
            labels.push_back(std::string{char('0' + (v >> 2 & 1)), char('0' + (v >> 1 & 1)), char('0' + (v & 1))});
        return graph(mode::undirected, 8, arcs, labels);
    }
    case 'c':
        // vertices 2,3,4,5 of the figure; digons on 2-5 and 3-4
        arcs = {{1, 0}, {3, 2}, {0, 3}, {2, 1}, {3, 0}, {1, 2}};
        return graph(mode::directed, 4, arcs, {"2", "3", "4", "5"});
    case 'd':
        // ids 0..7 are the figure's 0,1,2,3,4,5,8,9
        arcs = {{3, 2}, {2, 5}, {2, 0}, {4, 3}, {5, 4}, {5, 1}, {4, 7}, {3, 6}};
        return graph(mode::directed, 8, arcs, {"0", "1", "2", "3", "4", "5", "8", "9"});
    case 'e': {
        enum { A, B, C, D, E, F, H, I, J, K, L, M };
        arcs = {{A, K}, {K, B}, {B, A}, {M, D}, {D, C}, {C, M}, {J, I}, {I, H}, {H, J}, {E, L}, {L, F}, {F, E}};
        bold(0, E, D), bold(1, L, J), bold(2, I, M), bold(3, H, K), bold(4, C, B), bold(5, F, A);
        return graph(mode::directed, 12, arcs, {"A", "B", "C", "D", "E", "F", "H", "I", "J", "K", "L", "M"});
    }
    default: fail(error_code::invalid_argument, std::string("no figure '") + which + "'");
    }
}

std::vector<theorem10_class> certify_theorem10(long long node_budget, int workers) {
    auto t = build_theorem12();
    std::vector<theorem10_class> out;
    for (int cls = 0; cls < 3; ++cls) {
        auto h = delete_class(t, cls);
        solve_options opts;
        opts.node_budget = node_budget;
        opts.worker_count = workers;
        theorem10_class c;
        c.cls = cls;
        c.vertices = h.g.n();
        c.result = solve_cai(h.g, opts);
        if (c.result.status == solve_status::found) c.verified_found = verify_cai(h.g, *c.result.partition).ok;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace cai
