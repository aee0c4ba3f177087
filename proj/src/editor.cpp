#include "cai/editor.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cai/error.hpp"

namespace cai {

embedding_editor::embedding_editor(const graph& g, const rotation_system& rot)
    : rot_(g.n()), alive_(g.n(), 1) {
    check_rotation(g, rot);
    std::map<std::pair<int, int>, int> id;
    for (const arc& a : g.arcs()) {
        auto key = std::minmax(a.from, a.to);
        if (id.count(key)) fail(error_code::class_violation, "digon in editor input");
        id[key] = static_cast<int>(edges_.size());
        edges_.push_back({a.from, a.to, true});
    }
    for (int v = 0; v < g.n(); ++v)
        for (int u : rot.at(v)) rot_[v].push_back(id.at(std::minmax(u, v)));
}

int embedding_editor::add_vertex() {
    rot_.emplace_back();
    alive_.push_back(1);
    return size() - 1;
}

std::vector<int> embedding_editor::neighbors(int v) const {
    std::vector<int> out;
    for (int e : rot_.at(v)) out.push_back(other(e, v));
    return out;
}

int embedding_editor::edge_between(int u, int v) const {
    for (int e : rot_.at(u))
        if (other(e, u) == v) return e;
    return -1;
}

bool embedding_editor::has_arc(int u, int v) const {
    for (int e : rot_.at(u))
        if (edges_[e].from == u && edges_[e].to == v) return true;
    return false;
}

void embedding_editor::erase_from_rotation(int v, int e) {
    auto& r = rot_[v];
    r.erase(std::remove(r.begin(), r.end(), e), r.end());
}

void embedding_editor::delete_edge(int e) {
    if (!edges_.at(e).alive) return;
    edges_[e].alive = false;
    erase_from_rotation(edges_[e].from, e);
    erase_from_rotation(edges_[e].to, e);
}

void embedding_editor::delete_vertex(int v) {
    auto incident = rot_.at(v);
    for (int e : incident) delete_edge(e);
    alive_[v] = 0;
}

void embedding_editor::set_arc(int e, int from, int to) {
    auto& ed = edges_.at(e);
    if (std::minmax(ed.from, ed.to) != std::minmax(from, to)) fail(error_code::internal, "set_arc endpoint mismatch");
    ed.from = from;
    ed.to = to;
}

std::vector<std::vector<std::pair<int, int>>> embedding_editor::face_darts() const {
    std::map<std::pair<int, int>, char> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int s = 0; s < size(); ++s) {
        if (!alive_[s]) continue;
        for (int e0 : rot_[s]) {
            if (seen.count({e0, s})) continue;
            out.emplace_back();
            int e = e0, t = s;
            while (!seen.count({e, t})) {
                seen[{e, t}] = 1;
                out.back().push_back({e, t});
                int h = other(e, t);
                const auto& r = rot_[h];
                int pos = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
                e = r[(pos + 1) % r.size()];
                t = h;
            }
        }
    }
    return out;
}

int embedding_editor::add_arc_in_face(int from, int to, int partner_from, int partner_to) {
    auto faces = face_darts();
    // corner at x on a face: the edge of the dart entering x
    auto corner = [&](const std::vector<std::pair<int, int>>& f, int x) {
        for (auto [de, dt] : f)
            if (other(de, dt) == x) return de;
        return -1;
    };
    int id = static_cast<int>(edges_.size());
    auto place = [&](int x, int after) {
        auto& r = rot_[x];
        if (after < 0) {
            r.push_back(id);
            return;
        }
        r.insert(std::find(r.begin(), r.end(), after) + 1, id);
    };
    for (const auto& f : faces) {
        int cu = corner(f, from), cv = corner(f, to);
        if (cu < 0 || cv < 0) continue;
        edges_.push_back({from, to, true});
        place(from, cu);
        place(to, cv);
        return id;
    }
    auto comps = components();
    auto comp_of = [&](int v) {
        for (size_t k = 0; k < comps.size(); ++k)
            if (std::binary_search(comps[k].begin(), comps[k].end(), v)) return static_cast<int>(k);
        return -1;
    };
    if (comp_of(from) == comp_of(to))
        fail(error_code::class_violation,
             "no common face for " + std::to_string(from) + " and " + std::to_string(to));
    auto pick = [&](int x, int partner) {
        if (rot_[x].empty()) return -1;
        int fallback = -1;
        for (const auto& f : faces) {
            int c = corner(f, x);
            if (c < 0) continue;
            if (fallback < 0) fallback = c;
            if (partner >= 0 && corner(f, partner) >= 0) return c;
        }
        return fallback;
    };
    int cu = pick(from, partner_from), cv = pick(to, partner_to);
    edges_.push_back({from, to, true});
    place(from, cu);
    place(to, cv);
    return id;
}

void embedding_editor::contract(int keep, int gone) {
    int e = edge_between(keep, gone);
    if (e < 0) fail(error_code::internal, "contract needs an edge");
    auto rotated_after = [&](int v) {
        const auto& r = rot_[v];
        int pos = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
        std::vector<int> out;
        for (size_t k = 1; k < r.size(); ++k) out.push_back(r[(pos + k) % r.size()]);
        return out;
    };
    auto ru = rotated_after(keep), rv = rotated_after(gone);
    edges_[e].alive = false;
    for (int f : rv) {
        if (edges_[f].from == gone) edges_[f].from = keep;
        if (edges_[f].to == gone) edges_[f].to = keep;
    }
    ru.insert(ru.end(), rv.begin(), rv.end());
    rot_[keep] = ru;
    rot_[gone].clear();
    alive_[gone] = 0;
}

void embedding_editor::contract_set(int rep, const std::vector<int>& set) {
    std::vector<char> in(size(), 0);
    for (int v : set) in[v] = 1;
    bool progress = true;
    while (progress) {
        progress = false;
        remove_loops(rep);
        for (int e : rot_[rep]) {
            int w = other(e, rep);
            if (w != rep && in[w]) {
                contract(rep, w);
                progress = true;
                break;
            }
        }
    }
    remove_loops(rep);
    for (int v : set)
        if (v != rep && alive_[v]) fail(error_code::class_violation, "contracted set is not connected");
}

void embedding_editor::remove_loops(int v) {
    std::vector<int> loops;
    for (int e : rot_[v])
        if (edges_[e].from == edges_[e].to) loops.push_back(e);
    for (int e : loops) {
        edges_[e].alive = false;
        erase_from_rotation(v, e);
    }
}

std::vector<std::vector<int>> embedding_editor::parallel_groups(int v) const {
    std::map<int, std::vector<int>> by;
    std::vector<int> order;
    for (int e : rot_.at(v)) {
        int w = other(e, v);
        if (!by.count(w)) order.push_back(w);
        by[w].push_back(e);
    }
    std::vector<std::vector<int>> out;
    for (int w : order)
        if (by[w].size() >= 2) out.push_back(by[w]);
    return out;
}

void embedding_editor::reverse_arcs_within(const std::vector<int>& vertices) {
    std::vector<char> in(size(), 0);
    for (int v : vertices) in[v] = 1;
    for (auto& ed : edges_)
        if (ed.alive && in[ed.from] && in[ed.to]) std::swap(ed.from, ed.to);
}

int embedding_editor::subdivide(int e) {
    int x = edges_.at(e).from, y = edges_.at(e).to;
    int z = add_vertex();
    int e1 = static_cast<int>(edges_.size());
    edges_.push_back({x, z, true});
    int e2 = e1 + 1;
    edges_.push_back({z, y, true});
    std::replace(rot_[x].begin(), rot_[x].end(), e, e1);
    std::replace(rot_[y].begin(), rot_[y].end(), e, e2);
    rot_[z] = {e1, e2};
    edges_[e].alive = false;
    return z;
}

std::vector<std::vector<int>> embedding_editor::components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
        if (!alive_[s] || comp[s] >= 0) continue;
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out.back().push_back(v);
            for (int e : rot_[v]) {
                int w = other(e, v);
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    q.push(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

int embedding_editor::live_vertices() const { return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1)); }

int embedding_editor::live_edges() const {
    int m = 0;
    for (const auto& ed : edges_) m += ed.alive;
    return m;
}

embedding_editor::extracted embedding_editor::extract(const std::vector<int>& keep) const {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index(size(), -1);
    for (size_t k = 0; k < sorted.size(); ++k) {
        if (!alive_.at(sorted[k])) fail(error_code::internal, "extracting a deleted vertex");
        index[sorted[k]] = static_cast<int>(k);
    }
    int n = static_cast<int>(sorted.size());
    std::vector<arc> arcs;
    std::vector<std::vector<int>> rot(n);
    for (int k = 0; k < n; ++k) {
        int v = sorted[k];
        for (int e : rot_[v]) {
            int w = other(e, v);
            if (w == v) fail(error_code::class_violation, "loop at " + std::to_string(v));
            if (index[w] < 0) fail(error_code::class_violation, "edge leaves the extracted set");
            rot[k].push_back(index[w]);
            if (edges_[e].from == v) arcs.push_back({k, index[w]});
        }
        auto r = rot[k];
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            fail(error_code::class_violation, "parallel edges at " + std::to_string(v));
    }
    graph g(mode::directed, n, arcs);
    return {g, rotation_system(rot), sorted};
}

}  // namespace cai
