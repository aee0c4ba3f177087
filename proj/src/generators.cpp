#include "cai/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cai/error.hpp"

namespace cai {

std::uint64_t splitmix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t splitmix64::below(std::uint64_t bound) {
    if (bound == 0) fail(error_code::invalid_argument, "below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

namespace {

using point = std::pair<double, double>;

embedded_graph from_points(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<point>& xy) {
    std::vector<arc> arcs;
    for (auto [u, v] : edges) arcs.push_back({u, v});
    graph g(mode::undirected, n, arcs);
    auto rot = rotation_from_coordinates(g, xy);
    return {g, rot};
}

embedded_graph make_cycle(int m) {
    if (m < 4 || m % 2) fail(error_code::invalid_argument, "even_cycle needs an even length >= 4");
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy;
    for (int i = 0; i < m; ++i) {
        e.push_back({i, (i + 1) % m});
        double t = 2 * M_PI * i / m;
        xy.push_back({std::cos(t), std::sin(t)});
    }
    return from_points(m, e, xy);
}

embedded_graph make_prism(int m) {
    if (m < 4 || m % 2) fail(error_code::invalid_argument, "prism needs an even cycle length >= 4");
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy(2 * m);
    for (int i = 0; i < m; ++i) {
        e.push_back({i, (i + 1) % m});
        e.push_back({m + i, m + (i + 1) % m});
        e.push_back({i, m + i});
        double t = 2 * M_PI * i / m;
        xy[i] = {2 * std::cos(t), 2 * std::sin(t)};
        xy[m + i] = {std::cos(t), std::sin(t)};
    }
    return from_points(2 * m, e, xy);
}

embedded_graph make_ladder(int k) {
    if (k < 2) fail(error_code::invalid_argument, "ladder needs at least 2 rungs");
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy(2 * k);
    for (int i = 0; i < k; ++i) {
        xy[i] = {double(i), 0};
        xy[k + i] = {double(i), 1};
        e.push_back({i, k + i});
        if (i + 1 < k) {
            e.push_back({i, i + 1});
            e.push_back({k + i, k + i + 1});
        }
    }
    return from_points(2 * k, e, xy);
}

embedded_graph make_theta(std::vector<int> len) {
    if (len.size() != 3) fail(error_code::invalid_argument, "theta needs three path lengths");
    for (int l : len)
        if (l < 1) fail(error_code::invalid_argument, "theta path lengths must be positive");
    if (len[0] % 2 != len[1] % 2 || len[1] % 2 != len[2] % 2)
        fail(error_code::invalid_argument, "theta path lengths must share parity");
    if (std::count(len.begin(), len.end(), 1) > 1) fail(error_code::invalid_argument, "theta would have a double edge");
    // a length-1 path is drawn straight through the middle
    std::sort(len.begin(), len.end());
    std::swap(len[0], len[1]);
    int n = 2;
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy{{0, 0}, {1, 0}};
    const double height[3] = {1, 0, -1};
    for (int p = 0; p < 3; ++p) {
        int prev = 0;
        for (int k = 1; k < len[p]; ++k) {
            xy.push_back({double(k) / len[p], height[p] * 0.5});
            e.push_back({prev, n});
            prev = n++;
        }
        e.push_back({prev, 1});
    }
    return from_points(n, e, xy);
}

embedded_graph make_hypercube(int d) {
    if (d != 3) fail(error_code::invalid_argument, "only the 3-cube is planar");
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy(8);
    const point corner[4] = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
    for (int v = 0; v < 8; ++v) {
        double s = (v & 4) ? 2.0 : 1.0;
        xy[v] = {corner[v & 3].first * s, corner[v & 3].second * s};
        for (int b = 0; b < 3; ++b)
            if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
    }
    return from_points(8, e, xy);
}

embedded_graph make_sp_nested(int m) {
    if (m < 0) fail(error_code::invalid_argument, "sp_nested needs a non-negative ear count");
    int len = 2 * m + 2;
    std::vector<std::pair<int, int>> e;
    std::vector<point> xy;
    for (int i = 0; i <= len; ++i) {
        xy.push_back({double(i), 0});
        if (i) e.push_back({i - 1, i});
    }
    int n = len + 1;
    // closing path below the spine
    int prev = 0;
    for (int i = 1; i < len; ++i) {
        xy.push_back({double(i), -1});
        e.push_back({prev, n});
        prev = n++;
    }
    e.push_back({prev, len});
    // ear j spans spine j .. len-j, outer ears drawn higher
    for (int j = 1; j <= m; ++j) {
        double h = m - j + 1;
        prev = j;
        for (int t = j + 1; t < len - j; ++t) {
            xy.push_back({double(t), h});
            e.push_back({prev, n});
            prev = n++;
        }
        e.push_back({prev, len - j});
    }
    return from_points(n, e, xy);
}

embedded_graph make_hexgrid(int rows, int cols) {
    if (rows < 1 || cols < 1) fail(error_code::invalid_argument, "hexgrid needs positive rows and cols");
    // brick wall: vertical edges where i + j is even
    int r = rows + 1, c = 2 * cols + 2;
    auto id = [&](int i, int j) { return i * c + j; };
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c) es.insert({id(i, j), id(i, j + 1)});
            if (i + 1 < r && (i + j) % 2 == 0) es.insert({id(i, j), id(i + 1, j)});
        }
    std::vector<int> deg(r * c, 0);
    for (auto [u, v] : es) ++deg[u], ++deg[v];
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = es.begin(); it != es.end();) {
            if (deg[it->first] == 1 || deg[it->second] == 1) {
                --deg[it->first], --deg[it->second];
                it = es.erase(it);
                changed = true;
            } else
                ++it;
        }
    }
    std::vector<int> remap(r * c, -1);
    std::vector<point> xy;
    int n = 0;
    for (int v = 0; v < r * c; ++v)
        if (deg[v] > 0) {
            remap[v] = n++;
            xy.push_back({double(v % c), double(v / c)});
        }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : es) e.push_back({remap[u], remap[v]});
    auto out = from_points(n, e, xy);
    if (!is_two_connected(out.g)) fail(error_code::invalid_argument, "hexgrid patch is not 2-connected");
    return out;
}

int need(const std::vector<int>& size, size_t k, const std::string& name) {
    if (size.size() != k)
        fail(error_code::invalid_argument, name + " takes " + std::to_string(k) + " size parameter(s)");
    return size[0];
}

}  // namespace

std::vector<std::string> family_names() {
    return {"even_cycle", "prism", "ladder", "theta", "hypercube", "sp_nested", "hexgrid"};
}

embedded_graph family(const std::string& name, const std::vector<int>& size) {
    embedded_graph out;
    if (name == "even_cycle")
        out = make_cycle(need(size, 1, name));
    else if (name == "prism")
        out = make_prism(need(size, 1, name));
    else if (name == "ladder")
        out = make_ladder(need(size, 1, name));
    else if (name == "theta")
        out = make_theta(size);
    else if (name == "hypercube")
        out = make_hypercube(need(size, 1, name));
    else if (name == "sp_nested")
        out = make_sp_nested(need(size, 1, name));
    else if (name == "hexgrid") {
        need(size, 2, name);
        out = make_hexgrid(size[0], size[1]);
    } else
        fail(error_code::invalid_argument, "unknown family " + name);
    validate_bipartite_planar(out.g, out.rot);
    return out;
}

graph random_orientation(const graph& g, std::uint64_t seed) {
    splitmix64 rng(seed);
    std::vector<arc> arcs;
    for (auto [u, v] : g.edges()) {
        if (rng.coin())
            arcs.push_back({v, u});
        else
            arcs.push_back({u, v});
    }
    return graph(mode::directed, g.n(), arcs, g.labels());
}

embedded_graph random_orientation(const embedded_graph& e, std::uint64_t seed) {
    return {random_orientation(e.g, seed), e.rot};
}

static void replace_in(std::vector<int>& r, int old_v, int new_v) {
    auto it = std::find(r.begin(), r.end(), old_v);
    if (it == r.end()) fail(error_code::internal, "rotation lacks neighbour");
    *it = new_v;
}

static arc random_arc(splitmix64& rng, int u, int v) { return rng.coin() ? arc{v, u} : arc{u, v}; }

embedded_graph subdivide_even(const embedded_graph& e, int u, int v, std::uint64_t seed) {
    const graph& g = e.g;
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v))
        fail(error_code::invalid_argument, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    splitmix64 rng(seed);
    int x = g.n(), y = g.n() + 1;
    std::vector<arc> arcs;
    for (const arc& a : g.arcs()) {
        bool hit = (a.from == u && a.to == v) || (a.from == v && a.to == u);
        if (!hit) arcs.push_back(a);
    }
    if (g.directed()) {
        arcs.push_back(random_arc(rng, u, x));
        arcs.push_back(random_arc(rng, x, y));
        arcs.push_back(random_arc(rng, y, v));
    } else {
        arcs.push_back({u, x});
        arcs.push_back({x, y});
        arcs.push_back({y, v});
    }
    std::vector<std::string> labels = g.labels();
    if (!labels.empty()) {
        labels.push_back(std::to_string(x));
        labels.push_back(std::to_string(y));
    }
    graph h(g.kind(), g.n() + 2, arcs, labels);
    if (e.rot.empty()) return {h, {}};
    auto lists = e.rot.lists();
    replace_in(lists[u], v, x);
    replace_in(lists[v], u, y);
    lists.push_back({u, y});
    lists.push_back({x, v});
    return {h, rotation_system(lists)};
}

graph subdivide_even(const graph& g, int u, int v, std::uint64_t seed) {
    return subdivide_even(embedded_graph{g, {}}, u, v, seed).g;
}

embedded_graph insert_ear(const embedded_graph& e, int f, int u, int v, int length, std::uint64_t seed) {
    const graph& g = e.g;
    auto faces = trace_faces(g, e.rot);
    if (f < 0 || f >= faces.size()) fail(error_code::invalid_argument, "face out of range");
    if (u == v || !faces.on_face(f, u) || !faces.on_face(f, v))
        fail(error_code::invalid_argument, "ear endpoints must be distinct vertices of the face");
    if (length < 1 || (length == 1 && g.adjacent(u, v)))
        fail(error_code::invalid_argument, "ear would create a parallel edge");
    const auto& w = faces.at(f).walk;
    // corner at x on f: predecessor p with x's next dart leaving to succ_x(p)
    auto corner_pred = [&](int x) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == x) return w[(i + w.size() - 1) % w.size()];
        fail(error_code::internal, "vertex not on face");
    };
    int pu = corner_pred(u), pv = corner_pred(v);
    splitmix64 rng(seed);
    std::vector<int> path{u};
    int n = g.n();
    for (int k = 1; k < length; ++k) path.push_back(n++);
    path.push_back(v);
    std::vector<arc> arcs = g.arcs();
    for (size_t k = 0; k + 1 < path.size(); ++k)
        arcs.push_back(g.directed() ? random_arc(rng, path[k], path[k + 1]) : arc{path[k], path[k + 1]});
    std::vector<std::string> labels = g.labels();
    if (!labels.empty())
        for (int x = g.n(); x < n; ++x) labels.push_back(std::to_string(x));
    graph h(g.kind(), n, arcs, labels);
    auto lists = e.rot.lists();
    auto insert_after = [&](int x, int after, int nb) {
        auto& r = lists[x];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, nb);
    };
    insert_after(u, pu, path[1]);
    insert_after(v, pv, path[path.size() - 2]);
    for (size_t k = 1; k + 1 < path.size(); ++k) lists.push_back({path[k - 1], path[k + 1]});
    return {h, rotation_system(lists)};
}

namespace {

// removes one random edge joining two 3-vertices when the result stays 2-connected
embedded_graph thin_edge(const embedded_graph& e, std::uint64_t seed) {
    splitmix64 rng(seed);
    std::vector<std::pair<int, int>> cand;
    for (auto [u, v] : e.g.edges())
        if (e.g.neighbors(u).size() == 3 && e.g.neighbors(v).size() == 3) cand.push_back({u, v});
    for (size_t k = cand.size(); k > 1; --k) std::swap(cand[k - 1], cand[rng.below(k)]);
    for (auto [u, v] : cand) {
        std::vector<arc> arcs;
        for (const arc& a : e.g.arcs())
            if (std::minmax(a.from, a.to) != std::minmax(u, v)) arcs.push_back(a);
        graph h(e.g.kind(), e.g.n(), arcs);
        if (!is_two_connected(h)) continue;
        auto rot = e.rot.lists();
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
        return {h, rotation_system(rot)};
    }
    return e;
}

}  // namespace

embedded_graph random_f_instance(std::uint64_t seed, int min_n, int max_n) {
    if (min_n > max_n || max_n < 4) fail(error_code::invalid_argument, "bad size range");
    splitmix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        embedded_graph base;
        int pick = static_cast<int>(rng.below(7));
        int cap = std::max(4, max_n);
        switch (pick) {
        case 0: base = make_cycle(4 + 2 * static_cast<int>(rng.below(std::max(1, (cap - 4) / 2 + 1)))); break;
        case 1: base = make_prism(4 + 2 * static_cast<int>(rng.below(std::max(1, (cap / 2 - 4) / 2 + 1)))); break;
        case 2: base = make_ladder(2 + static_cast<int>(rng.below(std::max(1, cap / 2 - 1)))); break;
        case 3: {
            int parity = static_cast<int>(rng.below(2));
            std::vector<int> len;
            for (int k = 0; k < 3; ++k) len.push_back(2 + parity + 2 * static_cast<int>(rng.below(3)));
            if (parity && rng.coin()) len[0] = 1;
            base = make_theta(len);
            break;
        }
        case 4: base = make_hypercube(3); break;
        case 5: base = make_sp_nested(static_cast<int>(rng.below(4))); break;
        default: base = make_hexgrid(1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(4))); break;
        }
        if (base.g.n() > max_n) continue;
        // target size then grow by subdivision and ears
        int target = min_n + static_cast<int>(rng.below(max_n - min_n + 1));
        embedded_graph cur = base;
        int stuck = 0;
        while (cur.g.n() < target && stuck < 50) {
            int room = max_n - cur.g.n();
            bool grown = false;
            if (rng.below(3) == 0 && room >= 2) {
                auto es = cur.g.edges();
                auto [u, v] = es[rng.below(es.size())];
                cur = subdivide_even(cur, u, v, rng.next());
                grown = true;
            } else {
                auto faces = trace_faces(cur.g, cur.rot);
                int f = static_cast<int>(rng.below(faces.size()));
                std::vector<int> twos;
                for (int x : faces.at(f).walk)
                    if (cur.g.neighbors(x).size() == 2 && std::find(twos.begin(), twos.end(), x) == twos.end())
                        twos.push_back(x);
                if (twos.size() >= 2) {
                    int u = twos[rng.below(twos.size())], v = u;
                    while (v == u) v = twos[rng.below(twos.size())];
                    auto color = *is_bipartite(cur.g);
                    int len = color[u] == color[v] ? 2 : 1;
                    if (len == 1 && cur.g.adjacent(u, v)) len = 3;
                    len += 2 * static_cast<int>(rng.below(2));
                    if (len - 1 <= room) {
                        cur = insert_ear(cur, f, u, v, len, rng.next());
                        grown = true;
                    }
                }
            }
            stuck = grown ? 0 : stuck + 1;
        }
        if (cur.g.n() < min_n || cur.g.n() > max_n) continue;
        // thinning: drop a few edges between 3-vertices, spreading 2-vertices over larger faces
        for (int k = static_cast<int>(rng.below(4)); k > 0; --k) cur = thin_edge(cur, rng.next());
        auto out = random_orientation(cur, rng.next());
        validate_class_f(out.g, out.rot);
        return out;
    }
    fail(error_code::invalid_argument, "could not reach the requested size range");
}

graph random_series_parallel(std::uint64_t seed, int n, bool bipartite) {
    if (n < 3) fail(error_code::invalid_argument, "series-parallel instance needs n >= 3");
    splitmix64 rng(seed);
    // start from an even cycle (or a triangle), then grow by subdividing and by parallel paths
    int start = bipartite ? 4 : 3 + static_cast<int>(rng.below(2));
    start = std::min(start, n);
    if (bipartite && start % 2) start = 4;
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < start; ++i) es.insert(std::minmax(i, (i + 1) % start));
    int cur = start;
    int guard = 0;
    while (cur < n && guard++ < 100000) {
        std::vector<std::pair<int, int>> ev(es.begin(), es.end());
        auto [u, v] = ev[rng.below(ev.size())];
        int room = n - cur;
        if (rng.coin()) {
            // parallel path to an existing edge: stays series-parallel
            int len = bipartite ? 3 + 2 * static_cast<int>(rng.below(2)) : 2 + static_cast<int>(rng.below(3));
            if (len - 1 > room) continue;
            int prev = u;
            for (int k = 1; k < len; ++k) {
                es.insert(std::minmax(prev, cur));
                prev = cur++;
            }
            es.insert(std::minmax(prev, v));
        } else {
            int add = bipartite ? 2 : 1;
            if (add > room) continue;
            es.erase({u, v});
            int prev = u;
            for (int k = 0; k < add; ++k) {
                es.insert(std::minmax(prev, cur));
                prev = cur++;
            }
            es.insert(std::minmax(prev, v));
        }
    }
    std::vector<arc> arcs;
    for (auto [u, v] : es) arcs.push_back({u, v});
    return graph(mode::undirected, cur, arcs);
}

triangulation_bundle random_eulerian_triangulation(int size_hint, std::uint64_t seed) {
    int hi = std::max(4, size_hint);
    int lo = std::max(4, hi / 2);
    auto h = random_f_instance(seed, lo, hi);
    return triangulate_up(h.g, h.rot);
}

void validate_class_f(const graph& g, const rotation_system& rot) {
    if (!g.directed()) fail(error_code::not_in_class, "oriented: graph is undirected");
    if (!is_oriented(g)) fail(error_code::not_in_class, "oriented: graph has a digon");
    if (!is_subcubic(g)) fail(error_code::not_in_class, "subcubic: a vertex has degree above 3");
    if (!is_bipartite(g)) fail(error_code::not_in_class, "bipartite: odd cycle present");
    if (!is_two_connected(g)) fail(error_code::not_in_class, "2-connected: cut vertex or too small");
    try {
        check_rotation(g, rot);
        trace_faces(g, rot);
    } catch (const error& e) {
        fail(error_code::not_in_class, std::string("planar: ") + e.what());
    }
}

}  // namespace cai
