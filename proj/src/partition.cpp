#include "cai/partition.hpp"

#include <algorithm>

#include "cai/duality.hpp"
#include "cai/error.hpp"

namespace cai {

std::vector<int> tripartition::members(int c) const {
    std::vector<int> r;
    for (size_t v = 0; v < color.size(); ++v)
        if (color[v] == c) r.push_back(static_cast<int>(v));
    return r;
}

cai_partition partition_from_a(int n, const std::vector<int>& a) { return partition_from_a(vertex_set(n, a)); }

cai_partition partition_from_a(const vertex_set& a) { return {a, a.complement()}; }

static void check_cover(int n, const vertex_set& x, const vertex_set& y) {
    if (x.universe() != n || y.universe() != n)
        fail(error_code::malformed_partition, "partition universe differs from vertex count");
    for (int v = 0; v < n; ++v) {
        if (x.contains(v) && y.contains(v))
            fail(error_code::malformed_partition, "vertex " + std::to_string(v) + " on both sides");
        if (!x.contains(v) && !y.contains(v))
            fail(error_code::malformed_partition, "vertex " + std::to_string(v) + " on neither side");
    }
}

static verdict acyclic_verdict(const graph& g, const vertex_set& s, const std::string& side) {
    verdict r;
    if (auto cyc = find_induced_cycle(g, s)) {
        r.ok = false;
        r.clause = "acyclic";
        r.detail = side + " contains a " + std::string(g.directed() ? "directed " : "") + "cycle";
        r.witness = *cyc;
    }
    return r;
}

verdict verify_cai(const graph& g, const cai_partition& p) {
    check_cover(g.n(), p.a, p.i);
    verdict r;
    for (const auto& a : g.arcs())
        if (p.i.contains(a.from) && p.i.contains(a.to)) {
            r.ok = false;
            r.clause = "independent";
            r.detail = "edge inside I";
            r.witness = {a.from, a.to};
            return r;
        }
    if (verdict c = acyclic_verdict(g, p.a, "A"); !c) return c;
    if (g.n() > 0 && p.a.empty()) {
        r.ok = false;
        r.clause = "connected";
        r.detail = "A is empty";
        return r;
    }
    if (!induced_connected(g, p.a)) {
        auto m = p.a.members();
        vertex_set seen(g.n());
        std::vector<int> stack{m.front()};
        seen.insert(m.front());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (p.a.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        int other = -1;
        for (int v : m)
            if (!seen.contains(v)) {
                other = v;
                break;
            }
        r.ok = false;
        r.clause = "connected";
        r.detail = "A is disconnected";
        r.witness = {m.front(), other};
    }
    return r;
}

verdict verify_two_acyclic(const graph& g, const bi_acyclic_partition& p) {
    check_cover(g.n(), p.a1, p.a2);
    if (verdict c = acyclic_verdict(g, p.a1, "A1"); !c) return c;
    return acyclic_verdict(g, p.a2, "A2");
}

static int neighbours_in(const graph& g, const vertex_set& a, int v) {
    int c = 0;
    for (int w : g.neighbors(v))
        if (a.contains(w)) ++c;
    return c;
}

bool leaf_removable(const graph& g, const vertex_set& a, int v) {
    return a.contains(v) && neighbours_in(g, a, v) == 1;
}

bool leaf_addable(const graph& g, const vertex_set& a, int v) {
    return !a.contains(v) && neighbours_in(g, a, v) == 1;
}

vertex_set remove_leaf(const graph& g, vertex_set a, int v) {
    if (!leaf_removable(g, a, v)) fail(error_code::precondition, "vertex is not a leaf of A");
    a.erase(v);
    return a;
}

vertex_set add_leaf(const graph& g, vertex_set a, int v) {
    if (!leaf_addable(g, a, v)) fail(error_code::precondition, "vertex does not have exactly one A-neighbour");
    a.insert(v);
    return a;
}

bi_acyclic_partition lift_obs_main(const graph& t, const rotation_system& rot, const tripartition& tri, int cls,
                                   const cai_partition& cai_sub) {
    if (t.n() < 4) fail(error_code::precondition, "triangulation too small");
    face_set faces = trace_faces(t, rot);
    validate_triangulation(t, faces);
    if (!is_eulerian(t)) fail(error_code::precondition, "triangulation is not Eulerian");
    if (static_cast<int>(tri.color.size()) != t.n()) fail(error_code::precondition, "tripartition size mismatch");
    for (auto [u, v] : t.edges())
        if (tri.color[u] == tri.color[v]) fail(error_code::precondition, "tripartition is not proper");
    if (cls < 0 || cls > 2) fail(error_code::invalid_argument, "class index must be 0, 1 or 2");

    vertex_set keep(t.n());
    for (int v = 0; v < t.n(); ++v)
        if (tri.color[v] != cls) keep.insert(v);
    auto sub = induced_subgraph(t, keep);
    verdict pre = verify_cai(sub.g, cai_sub);
    if (!pre) fail(error_code::precondition, "given partition is not a CAI-partition of t - I: " + pre.detail);

    bi_acyclic_partition r{vertex_set(t.n()), vertex_set(t.n())};
    for (int v = 0; v < t.n(); ++v) {
        int s = sub.old_to_new[v];
        if (s >= 0 && cai_sub.a.contains(s))
            r.a1.insert(v);
        else
            r.a2.insert(v);
    }
    verdict post = verify_two_acyclic(t, r);
    if (!post) fail(error_code::lift_failure, "lifted partition fails: " + post.detail);
    if (!induced_connected(t, r.a1)) fail(error_code::lift_failure, "A1 is not connected");
    return r;
}

bool is_permeating(const graph& t, const face_set& faces, const vertex_set& a) {
    if (a.empty() || !induced_connected(t, a) || !induced_acyclic(t, a)) return false;
    for (const auto& f : faces.faces()) {
        bool hit = false;
        for (int v : f.walk)
            if (a.contains(v)) hit = true;
        if (!hit) return false;
    }
    return true;
}

}  // namespace cai
