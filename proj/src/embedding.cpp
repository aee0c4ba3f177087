#include "cai/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "cai/error.hpp"

namespace cai {

int rotation_system::position(int v, int u) const {
    const auto& r = rot_.at(v);
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    fail(error_code::inconsistent_rotation,
         "vertex " + std::to_string(u) + " missing from rotation of " + std::to_string(v));
}

int rotation_system::succ(int v, int u) const {
    const auto& r = rot_.at(v);
    return r[(position(v, u) + 1) % r.size()];
}

int rotation_system::pred(int v, int u) const {
    const auto& r = rot_.at(v);
    return r[(position(v, u) + r.size() - 1) % r.size()];
}

void check_rotation(const graph& g, const rotation_system& rot) {
    if (rot.n() != g.n())
        fail(error_code::inconsistent_rotation,
             "rotation covers " + std::to_string(rot.n()) + " vertices, graph has " + std::to_string(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> r = rot.at(v);
        std::sort(r.begin(), r.end());
        if (r != g.neighbors(v))
            fail(error_code::inconsistent_rotation,
                 "rotation at " + std::to_string(v) + " is not a permutation of its neighbours");
    }
}

static long long dart_key(int n, int u, int v) { return static_cast<long long>(u) * n + v; }

face_set::face_set(int n, std::vector<face> faces) : n_(n), faces_(std::move(faces)) {
    for (int f = 0; f < size(); ++f) {
        const auto& w = faces_[f].walk;
        for (size_t i = 0; i < w.size(); ++i) dart_face_[dart_key(n_, w[i], w[(i + 1) % w.size()])] = f;
    }
}

int face_set::face_of_dart(int u, int v) const {
    auto it = dart_face_.find(dart_key(n_, u, v));
    if (it == dart_face_.end())
        fail(error_code::invalid_argument, "no dart " + std::to_string(u) + "->" + std::to_string(v));
    return it->second;
}

std::vector<int> face_set::faces_at(int v) const {
    std::vector<int> r;
    for (int f = 0; f < size(); ++f)
        if (on_face(f, v)) r.push_back(f);
    return r;
}

bool face_set::on_face(int f, int v) const {
    const auto& w = faces_.at(f).walk;
    return std::find(w.begin(), w.end(), v) != w.end();
}

face_set trace_faces(const graph& g, const rotation_system& rot) {
    check_rotation(g, rot);
    int n = g.n();
    std::set<std::pair<int, int>> used;
    std::vector<face> faces;
    for (int u = 0; u < n; ++u)
        for (int v : rot.at(u)) {
            if (used.count({u, v})) continue;
            face f;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                f.walk.push_back(a);
                int c = rot.succ(b, a);
                a = b;
                b = c;
            }
            if (a != u || b != v)
                fail(error_code::inconsistent_rotation, "face walk did not close at dart " + std::to_string(u) + "->" +
                                                            std::to_string(v));
            faces.push_back(std::move(f));
        }
    // Euler check per component that has an edge
    int ncomp = 0;
    auto comp = components(g, &ncomp);
    std::vector<long long> chi(ncomp, 0);
    std::vector<char> has_edge(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        chi[comp[v]] += 1;
        if (!g.neighbors(v).empty()) has_edge[comp[v]] = 1;
    }
    for (auto [u, v] : g.edges()) chi[comp[u]] -= 1;
    for (const auto& f : faces) chi[comp[f.walk.front()]] += 1;
    for (int c = 0; c < ncomp; ++c)
        if (has_edge[c] && chi[c] != 2)
            fail(error_code::planarity_violation, "V - E + F = " + std::to_string(chi[c]) + " on a component");
    // canonical form: each walk starts at its minimal dart, faces sorted by it
    for (auto& f : faces) {
        auto& w = f.walk;
        size_t best = 0;
        for (size_t i = 1; i < w.size(); ++i) {
            std::pair<int, int> di{w[i], w[(i + 1) % w.size()]}, db{w[best], w[(best + 1) % w.size()]};
            if (di < db) best = i;
        }
        std::rotate(w.begin(), w.begin() + best, w.end());
    }
    std::sort(faces.begin(), faces.end(), [](const face& x, const face& y) {
        return std::make_pair(x.walk[0], x.walk[1 % x.walk.size()]) < std::make_pair(y.walk[0], y.walk[1 % y.walk.size()]);
    });
    return face_set(n, std::move(faces));
}

int facial_distance(const face_set& faces, const graph& g, int f, int u, int v) {
    if (!faces.on_face(f, u) || !faces.on_face(f, v))
        fail(error_code::invalid_argument, "vertex not on face " + std::to_string(f));
    vertex_set on(g.n());
    for (int x : faces.at(f).walk) on.insert(x);
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) return dist[x];
        for (int w : g.neighbors(x))
            if (on.contains(w) && dist[w] < 0) {
                dist[w] = dist[x] + 1;
                q.push(w);
            }
    }
    return -1;
}

discharge_report discharge_audit(const graph& g, const face_set& faces) {
    if (!is_connected(g)) fail(error_code::precondition, "discharge audit needs a connected graph");
    discharge_report r;
    int n = g.n();
    for (int v = 0; v < n; ++v) r.vertex_initial.push_back(2 * static_cast<int>(g.neighbors(v).size()) - 6);
    for (const auto& f : faces.faces()) r.face_initial.push_back(f.degree() - 6);
    for (int c : r.vertex_initial) r.total_initial += c;
    for (int c : r.face_initial) r.total_initial += c;

    std::vector<char> bad(n, 0);
    for (const auto& f : faces.faces())
        if (f.degree() == 6)
            for (int v : f.walk)
                if (g.neighbors(v).size() == 2) bad[v] = 1;
    for (int v = 0; v < n; ++v)
        if (bad[v]) r.bad_vertices.push_back(v);

    r.vertex_final = r.vertex_initial;
    r.face_final = r.face_initial;
    for (int fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces.at(fi);
        if (f.degree() < 8) continue;
        std::vector<int> on = f.walk;
        std::sort(on.begin(), on.end());
        on.erase(std::unique(on.begin(), on.end()), on.end());
        for (int v : on) {
            if (g.neighbors(v).size() != 2) continue;
            int give = bad[v] ? 2 : 1;
            r.face_final[fi] -= give;
            r.vertex_final[v] += give;
        }
    }
    for (int c : r.vertex_final) r.total_final += c;
    for (int c : r.face_final) r.total_final += c;
    for (int v = 0; v < n; ++v)
        if (r.vertex_final[v] < 0) r.negative_vertices.push_back(v);
    for (int f = 0; f < faces.size(); ++f)
        if (r.face_final[f] < 0) r.negative_faces.push_back(f);
    return r;
}

rotation_system rotation_from_coordinates(const graph& g, const std::vector<std::pair<double, double>>& xy,
                                          const std::map<std::pair<int, int>, double>& tangent) {
    if (static_cast<int>(xy.size()) != g.n()) fail(error_code::invalid_argument, "coordinate count mismatch");
    std::vector<std::vector<int>> rot(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::vector<std::pair<double, int>> by_angle;
        for (int w : g.neighbors(v)) {
            double a;
            auto it = tangent.find({v, w});
            if (it != tangent.end())
                a = it->second * M_PI / 180.0;
            else
                a = std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
            by_angle.emplace_back(-a, w);  // clockwise = decreasing angle
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (auto& [a, w] : by_angle) rot[v].push_back(w);
    }
    return rotation_system(std::move(rot));
}

rotation_system rotation_from_faces(int n, std::vector<std::vector<int>> faces) {
    // orient faces consistently: a shared edge is traversed in opposite directions
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& w = faces[f];
        for (size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    auto has_dart = [&](int f, int a, int b) {
        const auto& w = faces[f];
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == a && w[(i + 1) % w.size()] == b) return true;
        return false;
    };
    std::vector<int> state(faces.size(), 0);
    for (size_t s = 0; s < faces.size(); ++s) {
        if (state[s]) continue;
        state[s] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto& w = faces[f];
            for (size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                for (int h : edge_faces[{std::min(a, b), std::max(a, b)}]) {
                    if (h == f) continue;
                    if (!state[h]) {
                        if (has_dart(h, a, b)) std::reverse(faces[h].begin(), faces[h].end());
                        state[h] = 1;
                        q.push(h);
                    } else if (has_dart(h, a, b)) {
                        fail(error_code::planarity_violation, "face list is not consistently orientable");
                    }
                }
            }
        }
    }
    std::vector<std::map<int, int>> next(n);
    for (const auto& w : faces)
        for (size_t i = 0; i < w.size(); ++i) {
            int x = w[i], v = w[(i + 1) % w.size()], y = w[(i + 2) % w.size()];
            if (next[v].count(x)) fail(error_code::inconsistent_rotation, "corner repeated at " + std::to_string(v));
            next[v][x] = y;
        }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (next[v].empty()) continue;
        int start = next[v].begin()->first, x = start;
        do {
            rot[v].push_back(x);
            auto it = next[v].find(x);
            if (it == next[v].end())
                fail(error_code::inconsistent_rotation, "open fan around " + std::to_string(v));
            x = it->second;
        } while (x != start && rot[v].size() <= next[v].size());
        if (rot[v].size() != next[v].size())
            fail(error_code::inconsistent_rotation, "vertex " + std::to_string(v) + " is not a disc neighbourhood");
    }
    return rotation_system(std::move(rot));
}

}  // namespace cai
