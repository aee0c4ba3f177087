#include "cai/duality.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cai/error.hpp"

namespace cai {

bool is_eulerian_digraph(const graph& g) {
    if (!g.directed() || !is_connected(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.out(v).size() != g.in(v).size()) return false;
    return true;
}

bool is_eulerian(const graph& g) {
    if (g.directed()) return is_eulerian_digraph(g);
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).size() % 2) return false;
    return true;
}

void validate_triangulation(const graph& g, const face_set& faces) {
    if (g.n() < 4) fail(error_code::not_in_class, "triangulation needs at least four vertices");
    if (g.directed() && !is_oriented(g)) fail(error_code::not_in_class, "triangulation has a digon");
    for (const auto& f : faces.faces())
        if (f.degree() != 3) fail(error_code::not_in_class, "face of degree " + std::to_string(f.degree()));
    if (g.num_edges() != 3 * g.n() - 6) fail(error_code::not_in_class, "edge count is not 3V-6");
}

void validate_bipartite_planar(const graph& g, const rotation_system& rot) {
    trace_faces(g, rot);
    if (!is_bipartite(g)) fail(error_code::not_in_class, "not bipartite");
    if (!is_two_connected(g)) fail(error_code::not_in_class, "not 2-connected");
    if (g.directed() && !is_oriented(g)) fail(error_code::not_in_class, "not oriented");
}

tripartition tripartition_from_seed(const graph& t, const face_set& faces, int seed_face) {
    tripartition tri;
    tri.color.assign(t.n(), -1);
    std::vector<std::vector<int>> at(t.n());
    for (int f = 0; f < faces.size(); ++f)
        for (int v : faces.at(f).walk) at[v].push_back(f);
    std::queue<int> q;
    const auto& seed = faces.at(seed_face).walk;
    if (seed.size() != 3) fail(error_code::coloring_conflict, "seed face is not a triangle");
    for (int k = 0; k < 3; ++k) {
        tri.color[seed[k]] = k;
        for (int f : at[seed[k]]) q.push(f);
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& w = faces.at(f).walk;
        if (w.size() != 3) fail(error_code::coloring_conflict, "non-triangular face");
        int known = 0, missing = -1, used = 0;
        for (int v : w) {
            if (tri.color[v] >= 0) {
                ++known;
                if (used & (1 << tri.color[v]))
                    fail(error_code::coloring_conflict, "face " + std::to_string(f) + " repeats a colour");
                used |= 1 << tri.color[v];
            } else {
                missing = v;
            }
        }
        if (known == 2) {
            int c = 0;
            while (used & (1 << c)) ++c;
            tri.color[missing] = c;
            for (int h : at[missing]) q.push(h);
        }
    }
    for (int v = 0; v < t.n(); ++v)
        if (tri.color[v] < 0) fail(error_code::coloring_conflict, "vertex " + std::to_string(v) + " left uncoloured");
    for (auto [u, v] : t.edges())
        if (tri.color[u] == tri.color[v])
            fail(error_code::coloring_conflict, "edge " + std::to_string(u) + " " + std::to_string(v) + " is monochromatic");
    return tri;
}

tripartition find_tripartition(const graph& t, const rotation_system& rot) {
    face_set faces = trace_faces(t, rot);
    if (t.n() == 0 || t.neighbors(0).empty()) fail(error_code::coloring_conflict, "vertex 0 has no neighbour");
    int s = t.neighbors(0).front();
    int f = faces.face_of_dart(0, s);
    const auto& w = faces.at(f).walk;
    if (w.size() != 3) fail(error_code::coloring_conflict, "non-triangular face");
    tripartition tri = tripartition_from_seed(t, faces, f);
    // canonical names: colour of 0 is 0, colour of s is 1
    int c0 = tri.color[0], c1 = tri.color[s];
    int perm[3];
    perm[c0] = 0;
    perm[c1] = 1;
    perm[3 - c0 - c1] = 2;
    for (int& c : tri.color) c = perm[c];
    return tri;
}

bool same_classes(const tripartition& x, const tripartition& y) {
    if (x.color.size() != y.color.size()) return false;
    int map[3] = {-1, -1, -1};
    for (size_t v = 0; v < x.color.size(); ++v) {
        int a = x.color[v], b = y.color[v];
        if (map[a] < 0) map[a] = b;
        if (map[a] != b) return false;
    }
    return true;
}

triangulation_bundle make_bundle(graph g, rotation_system rot) {
    triangulation_bundle b;
    b.faces = trace_faces(g, rot);
    validate_triangulation(g, b.faces);
    b.tri = find_tripartition(g, rot);
    b.g = std::move(g);
    b.rot = std::move(rot);
    return b;
}

rotation_system restrict_rotation(const rotation_system& rot, const std::vector<int>& old_to_new, int new_n) {
    std::vector<std::vector<int>> r(new_n);
    for (int v = 0; v < rot.n(); ++v) {
        if (old_to_new[v] < 0) continue;
        for (int w : rot.at(v))
            if (old_to_new[w] >= 0) r[old_to_new[v]].push_back(old_to_new[w]);
    }
    return rotation_system(std::move(r));
}

class_deletion delete_class(const triangulation_bundle& t, int cls) {
    if (cls < 0 || cls > 2) fail(error_code::invalid_argument, "class index must be 0, 1 or 2");
    vertex_set keep(t.g.n());
    for (int v = 0; v < t.g.n(); ++v)
        if (t.tri.color[v] != cls) keep.insert(v);
    auto sub = induced_subgraph(t.g, keep);
    class_deletion r;
    r.rot = restrict_rotation(t.rot, sub.old_to_new, sub.g.n());
    r.g = std::move(sub.g);
    r.old_to_new = std::move(sub.old_to_new);
    r.new_to_old = std::move(sub.new_to_old);
    validate_bipartite_planar(r.g, r.rot);
    return r;
}

graph eulerian_orient(const graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).size() % 2)
            fail(error_code::precondition, "vertex " + std::to_string(v) + " has odd degree");
    auto edges = g.edges();
    std::vector<std::vector<std::pair<int, int>>> inc(g.n());  // (other end, edge id)
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        inc[edges[e].first].emplace_back(edges[e].second, e);
        inc[edges[e].second].emplace_back(edges[e].first, e);
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<size_t> ptr(g.n(), 0);
    std::vector<arc> arcs;
    for (int s = 0; s < g.n(); ++s) {
        for (;;) {
            while (ptr[s] < inc[s].size() && used[inc[s][ptr[s]].second]) ++ptr[s];
            if (ptr[s] == inc[s].size()) break;
            // closed trail from s; even degrees force it back to s
            int x = s;
            do {
                while (used[inc[x][ptr[x]].second]) ++ptr[x];
                auto [y, e] = inc[x][ptr[x]];
                used[e] = 1;
                arcs.push_back({x, y});
                x = y;
            } while (x != s);
        }
    }
    return graph(mode::directed, g.n(), std::move(arcs), g.labels());
}

triangulation_bundle triangulate_up(const graph& h, const rotation_system& rot) {
    validate_bipartite_planar(h, rot);
    face_set faces = trace_faces(h, rot);
    int n = h.n(), nf = faces.size();
    std::vector<std::vector<int>> r = rot.lists();
    r.resize(n + nf);
    std::vector<arc> fixed = h.arcs();
    std::vector<arc> loose;
    for (int f = 0; f < nf; ++f) {
        int apex = n + f;
        const auto& w = faces.at(f).walk;
        int k = static_cast<int>(w.size());
        for (int i = 0; i < k; ++i) {
            int prev = w[(i + k - 1) % k], v = w[i], next = w[(i + 1) % k];
            auto& rv = r[v];
            rv.insert(std::find(rv.begin(), rv.end(), prev) + 1, apex);
            if (!h.directed()) {
                loose.push_back({apex, v});
                continue;
            }
            bool out_prev = h.has_arc(v, prev), out_next = h.has_arc(v, next);
            if (out_prev && out_next)
                fixed.push_back({apex, v});
            else if (!out_prev && !out_next)
                fixed.push_back({v, apex});
            else
                loose.push_back({apex, v});
        }
        for (int i = k - 1; i >= 0; --i) r[apex].push_back(w[i]);
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(h.label(v));
    for (int f = 0; f < nf; ++f) labels.push_back("f" + std::to_string(f));
    graph t;
    if (h.directed()) {
        // the leftover edges have even degree everywhere and get a balanced orientation
        std::vector<int> bal(n + nf, 0);
        for (const auto& a : fixed) {
            ++bal[a.from];
            --bal[a.to];
        }
        for (int v = 0; v < n + nf; ++v)
            if (bal[v] != 0)
                fail(error_code::internal, "source/sink rule left vertex " + std::to_string(v) + " unbalanced");
        graph rest(mode::undirected, n + nf, loose);
        graph oriented = eulerian_orient(rest);
        for (const auto& a : oriented.arcs()) fixed.push_back(a);
        t = graph(mode::directed, n + nf, std::move(fixed), std::move(labels));
    } else {
        for (const auto& a : loose) fixed.push_back(a);
        t = graph(mode::undirected, n + nf, std::move(fixed), std::move(labels));
    }
    triangulation_bundle b = make_bundle(std::move(t), rotation_system(std::move(r)));
    if (!is_eulerian(b.g)) fail(error_code::internal, "triangulation is not Eulerian");
    return b;
}

}  // namespace cai
