#include "cai/ear_solver.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "cai/error.hpp"

namespace cai {

bool sp_recognize(const graph& g) {
    // eliminate vertices of degree <= 2, joining the two neighbours of a 2-vertex
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 2) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (gone[v] || adj[v].size() > 2) continue;
        gone[v] = 1;
        ++removed;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (int w : nb) adj[w].erase(v);
        if (nb.size() == 2) {
            adj[nb[0]].insert(nb[1]);
            adj[nb[1]].insert(nb[0]);
        }
        for (int w : nb)
            if (adj[w].size() <= 2) queue.push_back(w);
    }
    return removed == n;
}

namespace {

using edge_key = std::pair<int, int>;
edge_key ek(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

std::vector<int> canonical_cycle(std::vector<int> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

std::vector<int> shortest_cycle(const graph& g) {
    std::vector<int> best;
    int n = g.n();
    for (auto [u, v] : g.edges()) {
        // distances to v avoiding the edge uv
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : g.neighbors(x)) {
                if ((x == v && w == u) || dist[w] >= 0) continue;
                dist[w] = dist[x] + 1;
                q.push(w);
            }
        }
        if (dist[u] < 0) continue;
        std::vector<int> path{u};
        int x = u;
        while (x != v) {
            int next = -1;
            for (int w : g.neighbors(x)) {
                if (x == u && w == v) continue;
                if (dist[w] == dist[x] - 1) {
                    next = w;
                    break;
                }
            }
            path.push_back(next);
            x = next;
        }
        auto c = canonical_cycle(path);
        if (best.empty() || c.size() < best.size() || (c.size() == best.size() && c < best)) best = c;
    }
    return best;
}

// latest ear carrying both x and y, -1 if none
int common_ear(const ear_decomposition& ed, int x, int y) {
    for (int k = static_cast<int>(ed.ears.size()) - 1; k >= 0; --k) {
        const auto& p = ed.ears[k].path;
        if (std::find(p.begin(), p.end(), x) != p.end() && std::find(p.begin(), p.end(), y) != p.end()) return k;
    }
    return -1;
}

}  // namespace

ear_decomposition build_shortest_ears(const graph& g) {
    int n = g.n();
    ear_decomposition ed;
    auto c0 = shortest_cycle(g);
    if (c0.empty()) fail(error_code::property_violation, "property 0: graph has no cycle");
    std::vector<int> owner(n, -1);
    std::set<edge_key> covered;
    ear e0;
    e0.path = c0;
    for (size_t i = 0; i < c0.size(); ++i) {
        owner[c0[i]] = 0;
        covered.insert(ek(c0[i], c0[(i + 1) % c0.size()]));
    }
    ed.ears.push_back(e0);

    while (static_cast<int>(covered.size()) < g.num_edges()) {
        int best_len = INT_MAX, best_x = -1;
        std::vector<int> best_dist;
        for (int x = 0; x < n; ++x) {
            if (owner[x] < 0) continue;
            // distance from uncovered vertices to a covered vertex other than x
            std::vector<int> dist(n, -1);
            std::queue<int> q;
            for (int y = 0; y < n; ++y)
                if (owner[y] >= 0 && y != x) {
                    dist[y] = 0;
                    q.push(y);
                }
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                for (int w : g.neighbors(a)) {
                    if (owner[w] >= 0 || dist[w] >= 0 || covered.count(ek(a, w))) continue;
                    dist[w] = dist[a] + 1;
                    q.push(w);
                }
            }
            int len = INT_MAX;
            for (int z : g.neighbors(x)) {
                if (covered.count(ek(x, z)) || z == x) continue;
                if (owner[z] >= 0)
                    len = std::min(len, 1);
                else if (dist[z] >= 0)
                    len = std::min(len, dist[z] + 1);
            }
            if (len < best_len) {
                best_len = len;
                best_x = x;
                best_dist = dist;
            }
        }
        if (best_x < 0) fail(error_code::property_violation, "property 0: uncovered edges cannot be attached");
        std::vector<int> path{best_x};
        int cur = best_x, remaining = best_len;
        while (remaining > 0) {
            int next = -1;
            for (int z : g.neighbors(cur)) {
                if (covered.count(ek(cur, z))) continue;
                if (remaining == 1) {
                    if (owner[z] >= 0 && z != best_x) {
                        next = z;
                        break;
                    }
                } else if (owner[z] < 0 && best_dist[z] == remaining - 1) {
                    next = z;
                    break;
                }
            }
            path.push_back(next);
            cur = next;
            --remaining;
        }
        ear e;
        e.path = path;
        int idx = static_cast<int>(ed.ears.size());
        for (size_t i = 0; i + 1 < path.size(); ++i) covered.insert(ek(path[i], path[i + 1]));
        for (size_t i = 1; i + 1 < path.size(); ++i) owner[path[i]] = idx;
        int par = common_ear(ed, path.front(), path.back());
        e.parent = par;
        if (par >= 0) {
            const auto& pp = ed.ears[par].path;
            int px = static_cast<int>(std::find(pp.begin(), pp.end(), path.front()) - pp.begin());
            int py = static_cast<int>(std::find(pp.begin(), pp.end(), path.back()) - pp.begin());
            e.nest_lo = std::min(px, py);
            e.nest_hi = std::max(px, py);
        }
        ed.ears.push_back(e);
    }
    return ed;
}

ear_check validate_ears(const graph& g, const ear_decomposition& ed, bool require_nested) {
    int n = g.n();
    auto bad = [](int prop, int e, std::string why) {
        ear_check c;
        c.ok = false;
        c.property = prop;
        c.ear_index = e;
        c.detail = std::move(why);
        return c;
    };
    if (ed.ears.empty()) return bad(0, -1, "no ears");
    // property 0: ear 0 is a cycle, ears partition the edge set
    const auto& c0 = ed.ears[0].path;
    if (c0.size() < 3) return bad(0, 0, "ear 0 is not a cycle");
    {
        std::set<int> distinct(c0.begin(), c0.end());
        if (distinct.size() != c0.size()) return bad(0, 0, "ear 0 repeats a vertex");
    }
    std::map<edge_key, int> used;
    auto take = [&](int u, int v) -> bool {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.adjacent(u, v)) return false;
        return ++used[ek(u, v)] == 1;
    };
    for (size_t i = 0; i < c0.size(); ++i)
        if (!take(c0[i], c0[(i + 1) % c0.size()])) return bad(0, 0, "ear 0 uses a missing or repeated edge");
    for (size_t j = 1; j < ed.ears.size(); ++j) {
        const auto& p = ed.ears[j].path;
        if (p.size() < 2) return bad(1, static_cast<int>(j), "ear has no edge");
        std::set<int> distinct(p.begin(), p.end());
        if (distinct.size() != p.size()) return bad(1, static_cast<int>(j), "ear is not a simple open path");
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!take(p[i], p[i + 1]))
                return bad(0, static_cast<int>(j), "ear uses a missing or repeated edge");
    }
    if (static_cast<int>(used.size()) != g.num_edges()) return bad(0, -1, "ears do not cover every edge");

    // properties 2 and 3
    std::vector<int> owner(n, -1);
    for (int v : c0) owner[v] = 0;
    std::vector<int> parent(ed.ears.size(), -1);
    std::vector<std::pair<int, int>> interval(ed.ears.size(), {-1, -1});
    for (size_t j = 1; j < ed.ears.size(); ++j) {
        const auto& p = ed.ears[j].path;
        int x = p.front(), y = p.back();
        if (owner[x] < 0 || owner[y] < 0) return bad(2, static_cast<int>(j), "endpoint not on an earlier ear");
        for (size_t i = 1; i + 1 < p.size(); ++i)
            if (owner[p[i]] >= 0) return bad(2, static_cast<int>(j), "interior vertex already used");
        ear_decomposition prefix;
        prefix.ears.assign(ed.ears.begin(), ed.ears.begin() + j);
        int par = common_ear(prefix, x, y);
        if (par < 0) return bad(3, static_cast<int>(j), "endpoints do not lie on a common earlier ear");
        parent[j] = par;
        const auto& pp = ed.ears[par].path;
        int px = static_cast<int>(std::find(pp.begin(), pp.end(), x) - pp.begin());
        int py = static_cast<int>(std::find(pp.begin(), pp.end(), y) - pp.begin());
        interval[j] = {std::min(px, py), std::max(px, py)};
        if (ed.ears[j].parent >= 0 && ed.ears[j].parent != par)
            return bad(3, static_cast<int>(j), "recorded parent disagrees with endpoints");
        for (size_t i = 1; i + 1 < p.size(); ++i) owner[p[i]] = static_cast<int>(j);
    }

    // property 4: nest intervals on a common parent are nested or internally disjoint
    if (require_nested) {
        for (size_t a = 1; a < ed.ears.size(); ++a)
            for (size_t b = a + 1; b < ed.ears.size(); ++b) {
                if (parent[a] != parent[b]) continue;
                auto [l1, h1] = interval[a];
                auto [l2, h2] = interval[b];
                bool nested = (l1 <= l2 && h2 <= h1) || (l2 <= l1 && h1 <= h2);
                bool disjoint = h1 <= l2 || h2 <= l1;
                if (!nested && !disjoint)
                    return bad(4, static_cast<int>(b), "nest interval crosses that of ear " + std::to_string(a));
            }
    }

    // property 5: ears are induced and no shorter than their nest interval
    for (size_t j = 0; j < ed.ears.size(); ++j) {
        const auto& p = ed.ears[j].path;
        vertex_set s(n, p);
        int inside = 0;
        for (int v : p)
            for (int w : g.neighbors(v))
                if (w > v && s.contains(w)) ++inside;
        int own = j == 0 ? static_cast<int>(p.size()) : static_cast<int>(p.size()) - 1;
        // an edge between the two endpoints belongs to an earlier ear and is allowed
        if (j > 0 && p.size() > 2 && g.adjacent(p.front(), p.back())) ++own;
        if (inside != own) return bad(5, static_cast<int>(j), "ear is not induced");
        if (j > 0) {
            int span = interval[j].second - interval[j].first;
            if (span > own) return bad(5, static_cast<int>(j), "nest interval longer than the ear");
        }
    }
    return {};
}

ear_decomposition short_nested_ears(const graph& g) {
    if (g.directed()) fail(error_code::mode_mismatch, "ear decompositions work on undirected graphs");
    // nested decompositions exist exactly for series-parallel graphs
    if (!sp_recognize(g)) fail(error_code::property_violation, "graph contains a K4 subdivision");
    ear_decomposition ed = build_shortest_ears(g);
    ear_check c = validate_ears(g, ed, true);
    if (!c.ok)
        fail(error_code::property_violation, "property " + std::to_string(c.property) + " fails at ear " +
                                                 std::to_string(c.ear_index) + ": " + c.detail);
    return ed;
}

cai_partition cai_from_ears(const graph& g, const ear_decomposition& ed) {
    int n = g.n();
    vertex_set a(n), i(n);
    const auto& c0 = ed.ears.at(0).path;
    for (size_t k = 0; k < c0.size(); ++k) (k == 1 ? i : a).insert(c0[k]);
    for (size_t j = 1; j < ed.ears.size(); ++j) {
        const auto& p = ed.ears[j].path;
        if (p.size() < 3) fail(error_code::ear_without_interior, "ear " + std::to_string(j) + " is a single edge");
        bool end_in_i = i.contains(p.front()) || i.contains(p.back());
        for (size_t k = 1; k + 1 < p.size(); ++k) (!end_in_i && k == 1 ? i : a).insert(p[k]);
    }
    cai_partition r{a, i};
    verdict v = verify_cai(g, r);
    if (!v) fail(error_code::internal, "ear construction gave an invalid partition: " + v.detail);
    for (size_t j = 0; j < ed.ears.size(); ++j) {
        int c = 0;
        for (int x : ed.ears[j].path) c += i.contains(x);
        if (c > 1) fail(error_code::internal, "ear " + std::to_string(j) + " carries two I-vertices");
    }
    return r;
}

cai_partition solve_series_parallel(const graph& g) {
    if (g.directed()) fail(error_code::not_in_class, "graph is directed");
    if (g.n() < 3) fail(error_code::not_in_class, "fewer than three vertices");
    if (!is_two_connected(g)) fail(error_code::not_in_class, "not 2-connected");
    if (!sp_recognize(g)) fail(error_code::not_in_class, "not series-parallel");
    return cai_from_ears(g, short_nested_ears(g));
}

std::string format_ears(const ear_decomposition& ed) {
    std::ostringstream os;
    for (size_t j = 0; j < ed.ears.size(); ++j) {
        const auto& e = ed.ears[j];
        os << "ear " << j << (j == 0 ? " cycle" : " path");
        for (int v : e.path) os << ' ' << v;
        if (j > 0) os << " parent " << e.parent << " interval " << e.nest_lo << ' ' << e.nest_hi;
        os << '\n';
    }
    return os.str();
}

}  // namespace cai
