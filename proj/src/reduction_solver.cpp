#include "cai/reduction_solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "cai/editor.hpp"
#include "cai/error.hpp"
#include "cai/exact_solver.hpp"
#include "cai/generators.hpp"

namespace cai {

const char* config_kind_name(config_kind k) {
    switch (k) {
        case config_kind::adjacent_deg2: return "AdjacentDeg2";
        case config_kind::deg2_on_c4: return "Deg2OnC4";
        case config_kind::deg2_dist2: return "Deg2Dist2";
        case config_kind::triple_sharing_c4: return "TripleSharingC4";
        case config_kind::twin_c4: return "TwinC4";
        case config_kind::separating_c4: return "SeparatingC4";
        case config_kind::plain_c4: return "PlainC4";
        case config_kind::deg2_facial_dist3: return "Deg2FacialDist3";
        case config_kind::deg2_two_hex_faces: return "Deg2TwoHexFaces";
        case config_kind::bad_deg2_on_oct_face: return "BadDeg2OnOctFace";
        case config_kind::base_cycle: return "BaseCycle";
        case config_kind::base_small: return "BaseSmall";
    }
    return "?";
}

const std::vector<config_kind>& detection_order() {
    static const std::vector<config_kind> order = {
        config_kind::adjacent_deg2,     config_kind::deg2_on_c4,        config_kind::deg2_dist2,
        config_kind::triple_sharing_c4, config_kind::twin_c4,           config_kind::separating_c4,
        config_kind::plain_c4,          config_kind::deg2_facial_dist3, config_kind::deg2_two_hex_faces,
        config_kind::bad_deg2_on_oct_face,
    };
    return order;
}

int config_match::role(const std::string& name) const {
    for (const auto& [k, v] : roles)
        if (k == name) return v;
    return -1;
}

std::string config_match::describe() const {
    std::ostringstream os;
    os << "rule=" << config_kind_name(kind);
    if (!variant.empty()) os << " variant=" << variant;
    if (reversed) os << " reversed";
    if (!roles.empty()) {
        os << " roles";
        for (const auto& [k, v] : roles) os << ' ' << k << '=' << v;
    }
    return os.str();
}

namespace {

int deg(const graph& g, int v) { return static_cast<int>(g.neighbors(v).size()); }

// the unique neighbour of v outside excl, -1 if there is none or several
int other_neighbor(const graph& g, int v, std::initializer_list<int> excl) {
    int found = -1;
    for (int w : g.neighbors(v)) {
        if (std::find(excl.begin(), excl.end(), w) != excl.end()) continue;
        if (found >= 0) return -1;
        found = w;
    }
    return found;
}

int common_other(const graph& g, int x, int y, int ex) {
    int best = -1;
    for (int w : g.neighbors(x))
        if (w != ex && g.adjacent(w, y) && (best < 0 || w < best)) best = w;
    return best;
}

bool all_distinct(std::vector<int> v) {
    if (std::find(v.begin(), v.end(), -1) != v.end()) return false;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool all_degree(const graph& g, std::initializer_list<int> vs, int d) {
    for (int v : vs)
        if (deg(g, v) != d) return false;
    return true;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// underlying graph of g - removed + extra, or nullopt if an extra edge doubles an existing one
std::optional<graph> edited_underlying(const graph& g, const std::vector<int>& removed,
                                       const std::vector<std::pair<int, int>>& extra) {
    vertex_set keep = vertex_set::all(g.n());
    for (int r : removed) keep.erase(r);
    auto sub = induced_subgraph(g, keep);
    std::set<std::pair<int, int>> seen;
    std::vector<arc> arcs;
    for (const arc& a : sub.g.arcs()) {
        seen.insert(std::minmax(a.from, a.to));
        arcs.push_back(a);
    }
    for (auto [u, v] : extra) {
        int x = sub.old_to_new.at(u), y = sub.old_to_new.at(v);
        if (x < 0 || y < 0 || x == y || !seen.insert(std::minmax(x, y)).second) return std::nullopt;
        arcs.push_back({x, y});
    }
    return graph(mode::undirected, sub.g.n(), arcs);
}

bool directed_c4(const graph& g, int w, int x, int y, int z) {
    return (g.has_arc(w, x) && g.has_arc(x, y) && g.has_arc(y, z) && g.has_arc(z, w)) ||
           (g.has_arc(x, w) && g.has_arc(y, x) && g.has_arc(z, y) && g.has_arc(w, z));
}

config_match make_match(config_kind k, std::vector<std::pair<std::string, int>> roles, std::string variant = "") {
    config_match m;
    m.kind = k;
    m.roles = std::move(roles);
    m.variant = std::move(variant);
    return m;
}

using visitor = std::function<bool(const config_match&)>;

bool scan_adjacent_deg2(const graph& g, const visitor& visit) {
    for (int b1 = 0; b1 < g.n(); ++b1) {
        if (deg(g, b1) != 2) continue;
        for (int a2 : g.neighbors(b1)) {
            if (a2 < b1 || deg(g, a2) != 2) continue;
            int a0 = other_neighbor(g, b1, {a2}), b3 = other_neighbor(g, a2, {b1});
            if (a0 < 0 || b3 < 0 || a0 == b3) continue;
            auto m = make_match(config_kind::adjacent_deg2, {{"a0", a0}, {"b1", b1}, {"a2", a2}, {"b3", b3}},
                                g.adjacent(a0, b3) ? "adjacent" : "nonadjacent");
            if (visit(m)) return true;
        }
    }
    return false;
}

bool scan_deg2_on_c4(const graph& g, const visitor& visit) {
    for (int a0 = 0; a0 < g.n(); ++a0) {
        if (deg(g, a0) != 2) continue;
        int b1 = g.neighbors(a0)[0], b3 = g.neighbors(a0)[1];
        if (b1 > b3) std::swap(b1, b3);
        for (int a2 : g.neighbors(b1)) {
            if (a2 == a0 || !g.adjacent(a2, b3)) continue;
            if (visit(make_match(config_kind::deg2_on_c4, {{"a0", a0}, {"b1", b1}, {"a2", a2}, {"b3", b3}})))
                return true;
        }
    }
    return false;
}

bool scan_deg2_dist2(const graph& g, const visitor& visit) {
    for (int b1 = 0; b1 < g.n(); ++b1) {
        if (deg(g, b1) != 2) continue;
        for (int a2 : g.neighbors(b1)) {
            if (deg(g, a2) != 3) continue;
            for (int b3 : g.neighbors(a2)) {
                if (b3 <= b1 || deg(g, b3) != 2) continue;
                int a0 = other_neighbor(g, b1, {a2}), a4 = other_neighbor(g, b3, {a2});
                int x2 = other_neighbor(g, a2, {b1, b3});
                if (!all_distinct({a0, b1, a2, b3, a4, x2})) continue;
                auto m = make_match(config_kind::deg2_dist2,
                                    {{"a0", a0}, {"b1", b1}, {"a2", a2}, {"b3", b3}, {"a4", a4}, {"b'2", x2}});
                if (visit(m)) return true;
            }
        }
    }
    return false;
}

bool scan_triple(const graph& g, const rotation_system& rot, const visitor& visit) {
    for (int a0 = 0; a0 < g.n(); ++a0) {
        if (deg(g, a0) != 3) continue;
        const auto& nb = rot.at(a0);
        int b2 = nb[0], b4 = nb[1], b6 = nb[2];
        int a3 = common_other(g, b2, b4, a0), a5 = common_other(g, b4, b6, a0), a1 = common_other(g, b6, b2, a0);
        if (!all_distinct({a0, a1, b2, a3, b4, a5, b6})) continue;
        if (!all_degree(g, {a1, b2, a3, b4, a5, b6}, 3)) continue;
        int e1 = other_neighbor(g, a1, {b6, b2}), e3 = other_neighbor(g, a3, {b2, b4}),
            e5 = other_neighbor(g, a5, {b4, b6});
        std::vector<int> cfg = {a0, a1, b2, a3, b4, a5, b6};
        if (e1 < 0 || e3 < 0 || e5 < 0 || contains(cfg, e1) || contains(cfg, e3) || contains(cfg, e5)) continue;
        auto m = make_match(config_kind::triple_sharing_c4,
                            {{"a0", a0}, {"a1", a1}, {"b2", b2}, {"a3", a3}, {"b4", b4}, {"a5", a5}, {"b6", b6},
                             {"b'1", e1}, {"b'3", e3}, {"b'5", e5}},
                            (e1 == e3 && e3 == e5) ? "cube" : "contract");
        if (visit(m)) return true;
    }
    return false;
}

bool scan_twin(const graph& g, const visitor& visit) {
    for (const auto& [x, y] : g.edges()) {
        int b2 = std::min(x, y), a5 = std::max(x, y);
        if (deg(g, b2) != 3 || deg(g, a5) != 3) continue;
        std::vector<int> p, q;
        for (int w : g.neighbors(b2))
            if (w != a5) p.push_back(w);
        for (int w : g.neighbors(a5))
            if (w != b2) q.push_back(w);
        for (int flip = 0; flip < 2; ++flip) {
            int a1 = p[0], a3 = p[1], b6 = q[flip], b4 = q[1 - flip];
            if (!g.adjacent(a1, b6) || !g.adjacent(a3, b4)) continue;
            if (!all_distinct({a1, b2, a3, b4, a5, b6}) || !all_degree(g, {a1, a3, b4, b6}, 3)) continue;
            int e1 = other_neighbor(g, a1, {b2, b6}), e3 = other_neighbor(g, a3, {b2, b4});
            int e4 = other_neighbor(g, b4, {a3, a5}), e6 = other_neighbor(g, b6, {a1, a5});
            std::vector<int> cfg = {a1, b2, a3, b4, a5, b6};
            bool ok = e1 >= 0 && e3 >= 0 && e4 >= 0 && e6 >= 0;
            for (int e : {e1, e3, e4, e6}) ok = ok && !contains(cfg, e);
            if (!ok) continue;
            auto m = make_match(config_kind::twin_c4, {{"a1", a1}, {"b2", b2}, {"a3", a3}, {"b4", b4}, {"a5", a5},
                                                       {"b6", b6}, {"b'1", e1}, {"b'3", e3}, {"a'4", e4},
                                                       {"a'6", e6}});
            if (visit(m)) return true;
        }
    }
    return false;
}

struct c4 {
    std::vector<int> cyc, ext;
};

c4 relabel(const c4& c, std::initializer_list<int> perm) {
    c4 out;
    for (int k : perm) {
        out.cyc.push_back(c.cyc[k]);
        out.ext.push_back(c.ext[k]);
    }
    return out;
}

std::vector<std::pair<std::string, int>> c4_roles(const c4& c) {
    return {{"a0", c.cyc[0]},  {"b1", c.cyc[1]},  {"a2", c.cyc[2]},  {"b3", c.cyc[3]},
            {"b'0", c.ext[0]}, {"a'1", c.ext[1]}, {"b'2", c.ext[2]}, {"a'3", c.ext[3]}};
}

std::optional<c4> make_c4(const graph& g, std::vector<int> cyc) {
    c4 c;
    c.cyc = cyc;
    for (int k = 0; k < 4; ++k) {
        int v = cyc[k];
        if (deg(g, v) != 3) return std::nullopt;
        int e = other_neighbor(g, v, {cyc[(k + 1) % 4], cyc[(k + 3) % 4]});
        if (e < 0 || contains(cyc, e)) return std::nullopt;
        c.ext.push_back(e);
    }
    return c;
}

bool scan_separating(const graph& g, const visitor& visit) {
    for (int a0 = 0; a0 < g.n(); ++a0) {
        const auto& nb = g.neighbors(a0);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = 0; j < nb.size(); ++j) {
                int b1 = nb[i], b3 = nb[j];
                if (b1 >= b3 || b1 < a0) continue;
                for (int a2 : g.neighbors(b1)) {
                    if (a2 <= a0 || !g.adjacent(a2, b3)) continue;
                    auto c = make_c4(g, {a0, b1, a2, b3});
                    if (!c) continue;
                    vertex_set keep = vertex_set::all(g.n());
                    for (int v : c->cyc) keep.erase(v);
                    auto sub = induced_subgraph(g, keep);
                    int count = 0;
                    auto comp = components(sub.g, &count);
                    if (count != 2) continue;
                    auto cm = [&](int k) { return comp[sub.old_to_new[c->ext[k]]]; };
                    std::string variant;
                    c4 l = *c;
                    if (cm(0) == cm(1) && cm(2) == cm(3) && cm(0) != cm(2)) {
                        variant = "case1";
                    } else if (cm(1) == cm(2) && cm(3) == cm(0) && cm(0) != cm(1)) {
                        l = relabel(*c, {1, 2, 3, 0});
                        variant = "case1";
                    } else if (cm(0) == cm(2) && cm(1) == cm(3) && cm(0) != cm(1)) {
                        variant = "case2";
                    } else {
                        continue;
                    }
                    if (variant == "case1") {
                        if (!g.has_arc(l.cyc[0], l.cyc[1])) l = relabel(l, {1, 0, 3, 2});
                        variant = g.has_arc(l.cyc[2], l.cyc[3]) ? "case1_a2b3" : "case1_b3a2";
                    }
                    if (visit(make_match(config_kind::separating_c4, c4_roles(l), variant))) return true;
                }
            }
    }
    return false;
}

bool scan_plain(const graph& g, const face_set& faces, const visitor& visit) {
    for (int f = 0; f < faces.size(); ++f) {
        const auto& w = faces.at(f).walk;
        if (w.size() != 4 || !all_distinct(w)) continue;
        auto base = make_c4(g, w);
        if (!base) continue;
        std::vector<c4> labelings;
        for (int s = 0; s < 4; ++s)
            for (int dir : {1, 3}) {
                labelings.push_back(relabel(*base, {s, (s + dir) % 4, (s + 2 * dir) % 4, (s + 3 * dir) % 4}));
            }
        auto claim = [&](const c4& l) {
            auto h = edited_underlying(g, l.cyc, {{l.ext[0], l.ext[3]}, {l.ext[1], l.ext[2]}});
            return h && is_two_connected(*h);
        };
        std::vector<char> claims;
        for (const auto& l : labelings) claims.push_back(claim(l));

        vertex_set keep = vertex_set::all(g.n());
        for (int v : w) keep.erase(v);
        auto rest = induced_subgraph(g, keep);
        bool rest_2c = is_two_connected(rest.g);
        auto cuts = cut_vertices_and_bridges(rest.g);

        std::optional<config_match> found;
        for (size_t k = 0; k < labelings.size() && !found; ++k) {
            if (!claims[k]) continue;
            const c4& l = labelings[k];
            const auto& c = l.cyc;
            const auto& e = l.ext;
            for (bool r : {false, true}) {
                auto has = [&](int x, int y) { return r ? g.has_arc(y, x) : g.has_arc(x, y); };
                bool pattern = has(e[3], c[3]) && has(c[3], c[2]) && has(c[2], e[2]) && has(e[0], c[0]) &&
                               has(c[0], c[1]) && has(c[1], e[1]);
                if (!pattern) continue;
                if (rest_2c) {
                    found = make_match(config_kind::plain_c4, c4_roles(l), "case1");
                } else if (is_connected(rest.g)) {
                    // a bridge splitting {b'0, a'1} from {b'2, a'3}
                    for (auto [x, y] : cuts.bridges) {
                        vertex_set side = vertex_set::all(rest.g.n());
                        std::vector<arc> arcs;
                        for (const arc& a : rest.g.arcs())
                            if (std::minmax(a.from, a.to) != std::minmax(x, y)) arcs.push_back(a);
                        graph cut(mode::undirected, rest.g.n(), arcs);
                        auto comp = components(cut);
                        auto cm = [&](int v) { return comp[rest.old_to_new[v]]; };
                        if (cm(e[0]) == cm(e[1]) && cm(e[2]) == cm(e[3]) && cm(e[0]) != cm(e[2])) {
                            auto m = make_match(config_kind::plain_c4, c4_roles(l), "case2");
                            m.roles.push_back({"x", rest.new_to_old[x]});
                            m.roles.push_back({"y", rest.new_to_old[y]});
                            found = m;
                            break;
                        }
                    }
                }
                if (found) {
                    found->reversed = r;
                    break;
                }
            }
        }
        for (size_t k = 0; k < labelings.size() && !found; ++k) {
            if (!claims[k]) continue;
            const c4& l = labelings[k];
            for (bool r : {false, true}) {
                bool a2_out = r ? g.has_arc(l.ext[2], l.cyc[2]) : g.has_arc(l.cyc[2], l.ext[2]);
                if (!a2_out) continue;
                found = make_match(config_kind::plain_c4, c4_roles(l), "case3");
                found->reversed = r;
                break;
            }
        }
        if (found) {
            found->faces = {f};
            if (visit(*found)) return true;
        }
    }
    return false;
}

bool scan_facial_dist3(const graph& g, const face_set& faces, const visitor& visit) {
    for (int f = 0; f < faces.size(); ++f) {
        const auto& w = faces.at(f).walk;
        int k = static_cast<int>(w.size());
        if (k < 6) continue;
        for (int i = 0; i < k; ++i) {
            auto at = [&](int j) { return w[((i + j) % k + k) % k]; };
            int a0 = at(-1), b1 = at(0), a2 = at(1), b3 = at(2), a4 = at(3), b5 = at(4);
            if (deg(g, b1) != 2 || deg(g, a4) != 2) continue;
            if (!all_distinct({a0, b1, a2, b3, a4, b5}) || !all_degree(g, {a0, a2, b3, b5}, 3)) continue;
            int x2 = other_neighbor(g, a2, {b1, b3}), x3 = other_neighbor(g, b3, {a2, a4});
            if (x2 < 0 || x3 < 0) continue;
            auto rest = edited_underlying(g, {b1, a4}, {});
            auto m = make_match(config_kind::deg2_facial_dist3,
                                {{"a0", a0}, {"b1", b1}, {"a2", a2}, {"b3", b3}, {"a4", a4}, {"b5", b5},
                                 {"b'2", x2}, {"a'3", x3}},
                                is_two_connected(*rest) ? "direct" : "three_cut");
            m.faces = {f};
            if (visit(m)) return true;
        }
    }
    return false;
}

// walk of face f rotated to start at v
std::vector<int> walk_from(const face_set& faces, int f, int v) {
    auto w = faces.at(f).walk;
    auto it = std::find(w.begin(), w.end(), v);
    std::rotate(w.begin(), it, w.end());
    return w;
}

bool scan_two_hex(const graph& g, const face_set& faces, const visitor& visit) {
    for (int v = 0; v < g.n(); ++v) {
        if (deg(g, v) != 2) continue;
        auto fs = faces.faces_at(v);
        if (fs.size() != 2 || faces.at(fs[0]).degree() != 6 || faces.at(fs[1]).degree() != 6) continue;
        auto p = walk_from(faces, fs[0], v), q = walk_from(faces, fs[1], v);
        if (q[1] != p[5] || q[5] != p[1]) continue;
        std::vector<int> all = {v, p[1], p[2], p[3], p[4], p[5], q[2], q[3], q[4]};
        if (!all_distinct(all)) continue;
        bool ok = true;
        for (size_t k = 1; k < all.size(); ++k) ok = ok && deg(g, all[k]) == 3;
        if (!ok) continue;
        int b1 = p[1], a2 = p[2], b3 = p[3], a4 = p[4], b5 = p[5];
        int c2 = q[4], c3 = q[3], c4v = q[2];
        int x2 = other_neighbor(g, a2, {b1, b3}), x3 = other_neighbor(g, b3, {a2, a4}),
            x4 = other_neighbor(g, a4, {b3, b5});
        int y2 = other_neighbor(g, c2, {b1, c3}), y3 = other_neighbor(g, c3, {c2, c4v}),
            y4 = other_neighbor(g, c4v, {c3, b5});
        if (x2 < 0 || x3 < 0 || x4 < 0 || y2 < 0 || y3 < 0 || y4 < 0) continue;
        auto m = make_match(config_kind::deg2_two_hex_faces,
                            {{"a'1", v}, {"b1", b1}, {"a2", a2}, {"b3", b3}, {"a4", a4}, {"b5", b5}, {"a'2", c2},
                             {"b'3", c3}, {"a'4", c4v}, {"b'2", x2}, {"a'3", x3}, {"b'4", x4}, {"y2", y2},
                             {"y3", y3}, {"y4", y4}});
        m.faces = {fs[0], fs[1]};
        if (visit(m)) return true;
    }
    return false;
}

bool scan_bad_oct(const graph& g, const face_set& faces, const visitor& visit) {
    for (int v = 0; v < g.n(); ++v) {
        if (deg(g, v) != 2) continue;
        auto fs = faces.faces_at(v);
        if (fs.size() != 2) continue;
        for (int t = 0; t < 2; ++t) {
            int f8 = fs[t], f6 = fs[1 - t];
            if (faces.at(f8).degree() != 8 || faces.at(f6).degree() != 6) continue;
            auto w = walk_from(faces, f8, v);
            if (!all_distinct(w) || deg(g, w[4]) != 2) continue;
            int a2 = v, b3 = w[1], a4 = w[2], b5 = w[3], a6 = w[4], b7 = w[5], a0 = w[6], b1 = w[7];
            auto h = walk_from(faces, f6, v);
            if (!all_distinct(h)) continue;
            int x1, y2 = h[3], x3;
            if (h[1] == b1 && h[5] == b3) {
                x1 = h[2];
                x3 = h[4];
            } else if (h[1] == b3 && h[5] == b1) {
                x3 = h[2];
                x1 = h[4];
            } else {
                continue;
            }
            std::vector<int> all = {a0, b1, a2, b3, a4, b5, a6, b7, x1, y2, x3};
            if (!all_distinct(all)) continue;
            auto m = make_match(config_kind::bad_deg2_on_oct_face,
                                {{"a0", a0}, {"b1", b1}, {"a2", a2}, {"b3", b3}, {"a4", a4}, {"b5", b5},
                                 {"a6", a6}, {"b7", b7}, {"a'1", x1}, {"b2", y2}, {"a'3", x3}});
            m.faces = {f8, f6};
            if (visit(m)) return true;
        }
    }
    return false;
}

// ---- reduced instances ----

class builder {
public:
    builder(const graph& g, const rotation_system& rot, const config_match& m) : g_(g), ed_(g, rot) {
        step_.match = m;
    }
    embedding_editor& ed() { return ed_; }
    int role(const std::string& name) const {
        int v = step_.match.role(name);
        if (v < 0) fail(error_code::internal, "missing role " + name);
        return v;
    }
    void remove(std::initializer_list<const char*> names) {
        for (const char* n : names) ed_.delete_vertex(role(n));
    }
    // arcs named by the rule; flipped when the pattern was matched on the reversed graph
    void arc(int x, int y, int partner_x = -1, int partner_y = -1) {
        if (step_.match.reversed) {
            std::swap(x, y);
            std::swap(partner_x, partner_y);
        }
        ed_.add_arc_in_face(x, y, partner_x, partner_y);
        step_.added_arcs.push_back({parent(x), parent(y)});
    }
    void name(int v, const std::string& s) { syn_[v] = s; }
    reduction_step& step() { return step_; }

    reduction_step finish() {
        long long size = static_cast<long long>(g_.n()) + g_.num_edges();
        for (const auto& comp : ed_.components()) {
            auto ex = ed_.extract(comp);
            subproblem sp;
            sp.g = ex.g;
            sp.rot = ex.rot;
            for (int h = 0; h < ex.g.n(); ++h) {
                int e = ex.to_editor[h];
                auto it = syn_.find(e);
                if (it != syn_.end() || e >= g_.n()) {
                    sp.to_parent.push_back(-1);
                    sp.synthetic[h] = it != syn_.end() ? it->second : "v" + std::to_string(e);
                } else {
                    sp.to_parent.push_back(e);
                }
            }
            if (sp.g.n() < 4) fail(error_code::class_violation, "subproblem too small");
            if (static_cast<long long>(sp.g.n()) + sp.g.num_edges() >= size)
                fail(error_code::class_violation, "subproblem does not shrink");
            try {
                validate_class_f(sp.g, sp.rot);
            } catch (const error& e) {
                fail(error_code::class_violation, e.what());
            }
            step_.subs.push_back(std::move(sp));
        }
        if (step_.subs.empty()) fail(error_code::class_violation, "empty reduction");
        return step_;
    }

private:
    int parent(int x) const { return (syn_.count(x) || x >= g_.n()) ? -1 : x; }

    const graph& g_;
    embedding_editor ed_;
    reduction_step step_;
    std::map<int, std::string> syn_;
};

reduction_step reduce_three_cut(const graph& g, const rotation_system& rot, const config_match& m) {
    int u = m.role("b1"), v = m.role("a4");
    int t1 = m.role("a0"), w1 = m.role("a2"), t2 = m.role("b3"), w2 = m.role("b5");
    vertex_set keep = vertex_set::all(g.n());
    keep.erase(u);
    keep.erase(v);
    auto rest = induced_subgraph(g, keep);
    int count = 0;
    components(rest.g, &count);
    auto suppress = [&](builder& b, int t, int mid, int w, int px, int py) {
        if (g.has_arc(t, mid) && g.has_arc(mid, w))
            b.arc(t, w, px, py);
        else
            b.arc(w, t, py, px);
    };
    if (count == 2) {
        config_match mm = m;
        mm.variant = "three_cut_disconnected";
        builder b(g, rot, mm);
        b.ed().delete_vertex(u);
        b.ed().delete_vertex(v);
        auto comp = components(rest.g);
        auto cm = [&](int x) { return comp[rest.old_to_new[x]]; };
        int pt = cm(t2) == cm(t1) ? t2 : w2;
        int pw = cm(t2) == cm(w1) ? t2 : w2;
        suppress(b, t1, u, w1, pt, pw);
        suppress(b, t2, v, w2, -1, -1);
        return b.finish();
    }
    if (count != 1) fail(error_code::class_violation, "three-cut leaves more than two components");
    auto cuts = cut_vertices_and_bridges(rest.g);
    std::string last = "no bridge in G - {u, v}";
    for (auto [x, y] : cuts.bridges) {
        int px = rest.new_to_old[x], py = rest.new_to_old[y];
        if (!g.has_arc(px, py)) std::swap(px, py);
        config_match mm = m;
        mm.variant = "three_cut_bridge";
        mm.roles.push_back({"x", px});
        mm.roles.push_back({"y", py});
        try {
            builder b(g, rot, mm);
            b.ed().delete_vertex(u);
            b.ed().delete_vertex(v);
            int z = b.ed().subdivide(b.ed().edge_between(px, py));
            b.name(z, "z");
            suppress(b, t1, u, w1, -1, -1);
            suppress(b, t2, v, w2, -1, -1);
            return b.finish();
        } catch (const error& e) {
            if (e.code() != error_code::class_violation) throw;
            last = e.what();
        }
    }
    fail(error_code::class_violation, last);
}

}  // namespace

void for_each_match(const graph& g, const rotation_system& rot, config_kind k, const visitor& visit) {
    switch (k) {
        case config_kind::adjacent_deg2: scan_adjacent_deg2(g, visit); return;
        case config_kind::deg2_on_c4: scan_deg2_on_c4(g, visit); return;
        case config_kind::deg2_dist2: scan_deg2_dist2(g, visit); return;
        case config_kind::triple_sharing_c4: scan_triple(g, rot, visit); return;
        case config_kind::twin_c4: scan_twin(g, visit); return;
        case config_kind::separating_c4: scan_separating(g, visit); return;
        case config_kind::plain_c4: scan_plain(g, trace_faces(g, rot), visit); return;
        case config_kind::deg2_facial_dist3: scan_facial_dist3(g, trace_faces(g, rot), visit); return;
        case config_kind::deg2_two_hex_faces: scan_two_hex(g, trace_faces(g, rot), visit); return;
        case config_kind::bad_deg2_on_oct_face: scan_bad_oct(g, trace_faces(g, rot), visit); return;
        default: return;
    }
}

namespace {

std::optional<config_kind> base_case(const graph& g, int base_size) {
    bool cycle = true;
    for (int v = 0; v < g.n(); ++v) cycle = cycle && deg(g, v) == 2;
    if (cycle) return config_kind::base_cycle;
    if (g.n() <= base_size) return config_kind::base_small;
    return std::nullopt;
}

}  // namespace

config_match detect(const graph& g, const rotation_system& rot, int base_size) {
    if (auto b = base_case(g, base_size)) return make_match(*b, {});
    std::optional<config_match> found;
    for (config_kind k : detection_order()) {
        for_each_match(g, rot, k, [&](const config_match& m) {
            found = m;
            return true;
        });
        if (found) return *found;
    }
    fail(error_code::no_configuration, "no reducible configuration in a graph with " + std::to_string(g.n()) +
                                           " vertices");
}

reduction_step reduce(const graph& g, const rotation_system& rot, const config_match& m) {
    auto r = [&](const char* name) {
        int v = m.role(name);
        if (v < 0) fail(error_code::internal, std::string("missing role ") + name);
        return v;
    };
    switch (m.kind) {
        case config_kind::adjacent_deg2: {
            builder b(g, rot, m);
            b.remove({"b1", "a2"});
            if (m.variant == "nonadjacent") {
                if (g.has_arc(r("a0"), r("b1")))
                    b.arc(r("a0"), r("b3"));
                else
                    b.arc(r("b3"), r("a0"));
            }
            return b.finish();
        }
        case config_kind::deg2_on_c4: {
            builder b(g, rot, m);
            b.remove({"a0"});
            return b.finish();
        }
        case config_kind::deg2_dist2: {
            builder b(g, rot, m);
            b.remove({"b3"});
            b.arc(r("b1"), r("a4"));
            return b.finish();
        }
        case config_kind::triple_sharing_c4: {
            if (m.variant == "cube") {
                if (g.n() != 8) fail(error_code::class_violation, "cube configuration in a larger graph");
                reduction_step st;
                st.match = m;
                return st;
            }
            builder b(g, rot, m);
            int a0 = r("a0");
            b.ed().contract_set(a0, {a0, r("a1"), r("b2"), r("a3"), r("b4"), r("a5"), r("b6")});
            b.name(a0, "a*");
            for (const auto& grp : b.ed().parallel_groups(a0)) {
                if (grp.size() != 2) fail(error_code::class_violation, "three merged arcs at a*");
                int other = -1;
                for (int e : b.ed().rotation(a0))
                    if (e != grp[0] && e != grp[1]) other = e;
                if (other < 0) fail(error_code::class_violation, "a* has no unmerged arc");
                int w = b.ed().tail(grp[0]) == a0 ? b.ed().head(grp[0]) : b.ed().tail(grp[0]);
                if (b.ed().tail(other) == a0)
                    b.ed().set_arc(grp[0], w, a0);
                else
                    b.ed().set_arc(grp[0], a0, w);
                b.ed().delete_edge(grp[1]);
            }
            return b.finish();
        }
        case config_kind::twin_c4: {
            config_match mm = m;
            std::vector<int> six = {r("a1"), r("b2"), r("a3"), r("b4"), r("a5"), r("b6")};
            vertex_set keep = vertex_set::all(g.n());
            for (int v : six) keep.erase(v);
            auto rest = induced_subgraph(g, keep);
            auto comp = components(rest.g);
            auto cm = [&](const char* n) { return comp[rest.old_to_new[r(n)]]; };
            std::set<int> side_a = {cm("b'1"), cm("b'3")}, side_b = {cm("a'4"), cm("a'6")};
            bool bridge = true;
            for (int c : side_a) bridge = bridge && !side_b.count(c);
            int forward = g.has_arc(r("a1"), r("b6")) + g.has_arc(r("b2"), r("a5")) + g.has_arc(r("a3"), r("b4"));
            mm.variant = bridge ? "case1_bridge" : (forward >= 2 ? "case2_a*b*" : "case2_b*a*");
            builder b(g, rot, mm);
            int as = r("a1"), bs = r("b4");
            b.ed().contract_set(as, {as, r("b2"), r("a3")});
            b.ed().contract_set(bs, {bs, r("a5"), r("b6")});
            b.name(as, "a*");
            b.name(bs, "b*");
            auto groups = b.ed().parallel_groups(as);
            if (groups.size() != 1 || groups[0].size() != 3) fail(error_code::class_violation, "a*b* merge");
            const auto& grp = groups[0];
            b.ed().delete_edge(grp[1]);
            b.ed().delete_edge(grp[2]);
            if (bridge) {
                b.ed().delete_edge(grp[0]);
            } else if (forward >= 2) {
                b.ed().set_arc(grp[0], as, bs);
            } else {
                b.ed().set_arc(grp[0], bs, as);
            }
            return b.finish();
        }
        case config_kind::separating_c4: {
            builder b(g, rot, m);
            b.remove({"a0", "b1", "a2", "b3"});
            if (m.variant == "case1_a2b3") {
                b.arc(r("b'0"), r("a'3"), r("a'1"), r("b'2"));
                b.arc(r("b'2"), r("a'1"));
            } else if (m.variant == "case1_b3a2") {
                b.arc(r("b'0"), r("a'1"));
                b.arc(r("a'3"), r("b'2"));
            } else {
                b.arc(r("a'3"), r("b'0"), r("a'1"), r("b'2"));
                b.arc(r("b'2"), r("a'1"));
            }
            return b.finish();
        }
        case config_kind::plain_c4: {
            builder b(g, rot, m);
            b.remove({"a0", "b1", "a2", "b3"});
            if (m.variant == "case1") {
                b.arc(r("a'3"), r("b'2"));
                b.arc(r("b'0"), r("a'1"));
            } else if (m.variant == "case2") {
                // H1 is the side of b'0 and a'1 once the bridge is cut
                int x = r("x"), y = r("y");
                int e = b.ed().edge_between(x, y);
                int ex = b.ed().tail(e), ey = b.ed().head(e);
                b.ed().delete_edge(e);
                std::vector<int> h1;
                for (const auto& comp : b.ed().components())
                    if (std::binary_search(comp.begin(), comp.end(), r("b'0"))) h1 = comp;
                b.ed().reverse_arcs_within(h1);
                b.ed().add_arc_in_face(ex, ey, r("a'1"), r("b'2"));
                b.step().reversed_component = true;
                b.arc(r("a'3"), r("b'0"));
                b.arc(r("a'1"), r("b'2"));
            } else {
                bool in3 = m.reversed ? g.has_arc(r("b3"), r("a'3")) : g.has_arc(r("a'3"), r("b3"));
                b.arc(r("a'1"), r("b'2"));
                if (in3)
                    b.arc(r("a'3"), r("b'0"));
                else
                    b.arc(r("b'0"), r("a'3"));
            }
            return b.finish();
        }
        case config_kind::deg2_facial_dist3: {
            if (m.variant != "direct") return reduce_three_cut(g, rot, m);
            builder b(g, rot, m);
            b.remove({"b1", "a4"});
            if (!g.adjacent(r("a0"), r("b5"))) b.arc(r("a0"), r("b5"));
            return b.finish();
        }
        case config_kind::deg2_two_hex_faces: {
            builder b(g, rot, m);
            b.remove({"a'1"});
            return b.finish();
        }
        case config_kind::bad_deg2_on_oct_face: {
            builder b(g, rot, m);
            b.remove({"a2"});
            return b.finish();
        }
        default: fail(error_code::invalid_argument, "base cases have no reduction");
    }
}

namespace {

// ---- lifting ----

class lifter {
public:
    lifter(const graph& g, const reduction_step& st, const std::vector<cai_partition>& subs)
        : g_(g), st_(st), side_(g.n(), -1) {
        if (subs.size() != st.subs.size()) fail(error_code::invalid_argument, "one partition per subproblem");
        for (size_t k = 0; k < subs.size(); ++k) {
            const auto& sp = st.subs[k];
            for (int h = 0; h < sp.g.n(); ++h) {
                int s = subs[k].i.contains(h) ? 1 : 0;
                if (sp.to_parent[h] >= 0)
                    side_[sp.to_parent[h]] = s;
                else
                    syn_[sp.synthetic.at(h)] = s;
            }
        }
    }

    int id(const std::string& name) const { return st_.match.role(name); }
    int side(const std::string& name) const {
        auto it = syn_.find(name);
        if (it != syn_.end()) return it->second;
        int v = id(name);
        if (v < 0) fail(error_code::internal, "unknown role " + name);
        return side_[v];
    }
    bool in_a(const std::string& name) const { return side(name) == 0; }
    bool in_i(const std::string& name) const { return side(name) == 1; }
    bool arc(const std::string& x, const std::string& y) const { return g_.has_arc(id(x), id(y)); }
    const graph& g() const { return g_; }

    vertex_set a_set() const {
        vertex_set a(g_.n());
        for (int v = 0; v < g_.n(); ++v)
            if (side_[v] == 0) a.insert(v);
        return a;
    }
    // undirected path in G through vertices currently in A
    bool a_path(const std::string& u, const std::string& v) const {
        return a_path_exists(g_, id(u), id(v), a_set(), false);
    }

    // spec: "A x y I z" moves the named roles to the given sides
    void add(const std::string& label, const std::string& spec) { cands_.push_back({label, spec}); }

    std::optional<lift_outcome> run() const {
        for (const auto& [label, spec] : cands_) {
            auto s = side_;
            std::istringstream in(spec);
            std::string tok;
            int mode = 0;
            bool ok = true;
            while (in >> tok) {
                if (tok == "A") mode = 0;
                else if (tok == "I") mode = 1;
                else {
                    int v = id(tok);
                    if (v < 0) {
                        ok = false;
                        break;
                    }
                    s[v] = mode;
                }
            }
            if (!ok) continue;
            if (auto p = check(s)) return lift_outcome{*p, label, false};
        }
        return local_search();
    }

private:
    std::optional<cai_partition> check(const std::vector<int>& s) const {
        if (std::find(s.begin(), s.end(), -1) != s.end()) return std::nullopt;
        cai_partition p{vertex_set(g_.n()), vertex_set(g_.n())};
        for (int v = 0; v < g_.n(); ++v) (s[v] ? p.i : p.a).insert(v);
        if (!verify_cai(g_, p)) return std::nullopt;
        return p;
    }

    // exhaustive over the configuration: removed vertices and named roles, the rest as lifted
    std::optional<lift_outcome> local_search() const {
        std::vector<int> dom;
        for (int v = 0; v < g_.n(); ++v)
            if (side_[v] < 0) dom.push_back(v);
        for (const auto& [name, v] : st_.match.roles)
            if (!contains(dom, v)) dom.push_back(v);
        if (dom.size() > 20) return std::nullopt;
        auto s = side_;
        for (long long mask = 0; mask < (1LL << dom.size()); ++mask) {
            for (size_t k = 0; k < dom.size(); ++k) {
                int base = side_[dom[k]] < 0 ? 0 : side_[dom[k]];
                s[dom[k]] = ((mask >> k) & 1) ? 1 - base : base;
            }
            if (auto p = check(s)) return lift_outcome{*p, "local_search", true};
        }
        return std::nullopt;
    }

    const graph& g_;
    const reduction_step& st_;
    std::vector<int> side_;
    std::map<std::string, int> syn_;
    std::vector<std::pair<std::string, std::string>> cands_;
};

void c4_fallbacks(lifter& L, const std::string& prefix) {
    L.add(prefix + ".alt", "I a0 A b1 a2 b3");
    L.add(prefix + ".alt", "I b1 A a0 a2 b3");
    L.add(prefix + ".alt", "I a2 A a0 b1 b3");
    L.add(prefix + ".alt", "I b3 A a0 b1 a2");
    L.add(prefix + ".alt", "I a0 a2 A b1 b3");
    L.add(prefix + ".alt", "I b1 b3 A a0 a2");
    L.add(prefix + ".alt", "A a0 b1 a2 b3");
}

// the cycle vertex sent to I when the external neighbour of `ext`'s owner is in I
const char* paired_c4(const std::string& ext) {
    if (ext == "b'0") return "b3";
    if (ext == "a'1") return "a2";
    if (ext == "b'2") return "b1";
    return "a0";
}

std::string one_in_i(const std::string& out) {
    std::string spec = "I " + out + " A";
    for (const char* c : {"a0", "b1", "a2", "b3"})
        if (out != c) spec += std::string(" ") + c;
    return spec;
}

void candidates_adjacent_deg2(lifter& L, const reduction_step& st) {
    if (st.match.variant == "nonadjacent") {
        L.add("nonadjacent", "A a2 b1");
        return;
    }
    if (L.in_i("a0") || L.in_i("b3")) L.add("adjacent.one_in_I", "A b1 a2");
    L.add("adjacent.both_in_A", "A b1 I a2");
    L.add("adjacent.both_in_A", "A a2 I b1");
    L.add("adjacent.one_in_I", "A b1 a2");
}

void candidates_deg2_on_c4(lifter& L) {
    int in = L.in_a("b1") + L.in_a("b3");
    if (in == 2) L.add("both_in_A", "I a0");
    if (in == 1) L.add("one_in_A", "A a0");
    if (in == 0) L.add("both_in_I", "A b1 b3 I a0 a2");
    L.add("both_in_A", "I a0");
    L.add("one_in_A", "A a0");
}

void candidates_deg2_dist2(lifter& L) {
    bool a2 = L.in_a("a2"), a4 = L.in_a("a4");
    if (a2 && a4) {
        if (L.a_path("a2", "a4")) {
            L.add("case1.path", "I b3");
            L.add("case1.no_path", "A b3");
        } else {
            L.add("case1.no_path", "A b3");
            L.add("case1.path", "I b3");
        }
    } else if (a2) {
        L.add("case2", "A b3");
    } else if (a4) {
        if (L.a_path("a4", "b1")) L.add("case3.path_a4_b1", "A b3");
        if (L.a_path("b'2", "b1")) L.add("case3.path_b'2_b1", "A a2 b3 I b1");
        L.add("case3.no_path", "A a2 I b3");
        L.add("case3.path_a4_b1", "A b3");
        L.add("case3.path_b'2_b1", "A a2 b3 I b1");
    } else {
        L.add("case4", "A a2 b3 I b1");
    }
}

void candidates_triple(lifter& L, const reduction_step& st) {
    if (st.match.variant == "cube") {
        // a non-directed 4-cycle through a0 in A, plus two non-adjacent vertices of the opposite face
        struct opt {
            std::vector<std::string> cyc;
            const char* rest;
        };
        std::vector<opt> opts = {
            {{"a0", "b2", "a3", "b4"}, "A a1 a5 I b6 b'1"}, {{"a0", "b2", "a3", "b4"}, "A b6 b'1 I a1 a5"},
            {{"a0", "b4", "a5", "b6"}, "A a1 a3 I b2 b'1"}, {{"a0", "b4", "a5", "b6"}, "A b2 b'1 I a1 a3"},
            {{"a0", "b6", "a1", "b2"}, "A a3 a5 I b4 b'1"}, {{"a0", "b6", "a1", "b2"}, "A b4 b'1 I a3 a5"},
        };
        for (const auto& o : opts) {
            if (directed_c4(L.g(), L.id(o.cyc[0]), L.id(o.cyc[1]), L.id(o.cyc[2]), L.id(o.cyc[3]))) continue;
            L.add("cube", "A " + o.cyc[0] + " " + o.cyc[1] + " " + o.cyc[2] + " " + o.cyc[3] + " " + o.rest);
        }
        return;
    }
    const std::vector<std::string> as = {"a1", "a3", "a5"}, ext = {"b'1", "b'3", "b'5"};
    if (L.in_i("a*")) {
        // two external arcs with the same direction at their a-ends keep their a's in A
        std::vector<std::pair<int, std::string>> order;
        for (int k = 0; k < 3; ++k) {
            int i = (k + 1) % 3, j = (k + 2) % 3;
            bool same = L.arc(as[i], ext[i]) == L.arc(as[j], ext[j]);
            order.push_back({same ? 0 : 1, "A b2 b4 b6 " + as[i] + " " + as[j] + " I a0 " + as[k]});
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& o : order) L.add("a*_in_I", o.second);
        return;
    }
    struct bopt {
        std::string b;
        std::vector<std::string> cyc;
    };
    std::vector<bopt> bs = {{"b2", {"a0", "b4", "a5", "b6"}},
                            {"b4", {"a0", "b6", "a1", "b2"}},
                            {"b6", {"a0", "b2", "a3", "b4"}}};
    const std::vector<std::string> seven = {"a0", "a1", "b2", "a3", "b4", "a5", "b6"};
    auto spec_for = [&](const std::vector<std::string>& out) {
        std::string s = "A";
        for (const auto& v : seven)
            if (std::find(out.begin(), out.end(), v) == out.end()) s += " " + v;
        s += " I";
        for (const auto& v : out) s += " " + v;
        return s;
    };
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& o : bs) {
            bool directed = directed_c4(L.g(), L.id(o.cyc[0]), L.id(o.cyc[1]), L.id(o.cyc[2]), L.id(o.cyc[3]));
            if ((pass == 0) == directed) continue;
            L.add("a*_in_A", spec_for({o.b}));
        }
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j) L.add("a*_in_A.two_b", spec_for({bs[i].b, bs[j].b}));
}

void candidates_twin(lifter& L, const reduction_step& st) {
    bool as = L.in_a("a*"), bs = L.in_a("b*");
    const std::string all = "a1 b2 a3 b4 a5 b6";
    auto one_out = [&](const std::string& v) {
        std::string s = "A " + all + " I " + v;
        return s;
    };
    if (st.match.variant == "case1_bridge") {
        if (as && bs) {
            for (const char* v : {"a5", "b2", "b6", "a1", "b4", "a3"}) L.add("case1.both_in_A", one_out(v));
        } else if (as) {
            // the H2 end of the one edge not directed from H1 to H2 goes first
            std::vector<std::pair<std::string, std::string>> es = {{"a1", "b6"}, {"b2", "a5"}, {"a3", "b4"}};
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& [x, y] : es)
                    if ((pass == 0) == !L.arc(x, y)) L.add("case1.a*_in_A", one_out(y));
        } else if (bs) {
            std::vector<std::pair<std::string, std::string>> es = {{"b6", "a1"}, {"a5", "b2"}, {"b4", "a3"}};
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& [x, y] : es)
                    if ((pass == 0) == !L.arc(x, y)) L.add("case1.b*_in_A", one_out(y));
        } else {
            L.add("case1.both_in_I", "A a1 b2 b4 a5 I a3 b6");
            L.add("case1.both_in_I", "A a3 b2 b6 a5 I a1 b4");
        }
        return;
    }
    if (as && !bs) {
        L.add("case2.a*_in_A", "A a1 b2 a3 a5 I b4 b6");
        return;
    }
    if (bs && !as) {
        L.add("case2.b*_in_A", "A b4 a5 b6 b2 I a1 a3");
        return;
    }
    for (const char* v : {"a5", "b6", "b4", "b2", "a1", "a3"}) L.add("case2.both_in_A", one_out(v));
}

void candidates_separating(lifter& L, const reduction_step& st) {
    const auto& v = st.match.variant;
    if (v == "case1_b3a2") {
        L.add("case1.b3a2", "A a0 b1 a2 b3");
        c4_fallbacks(L, "case1.b3a2");
        return;
    }
    std::string tag = v == "case2" ? "case2" : "case1.a2b3";
    for (const char* e : {"b'0", "a'1", "b'2", "a'3"})
        if (L.in_i(e)) L.add(tag + ".one_in_I", one_in_i(paired_c4(e)));
    L.add(tag + ".all_in_A", "A b1 a2 b3 I a0");
    L.add(tag + ".all_in_A", "A a0 b1 b3 I a2");
    L.add(tag + ".all_in_A", "A a0 b1 a2 I b3");
    c4_fallbacks(L, tag);
}

void candidates_plain(lifter& L, const reduction_step& st) {
    const auto& v = st.match.variant;
    bool some_i = L.in_i("b'0") || L.in_i("a'1") || L.in_i("b'2") || L.in_i("a'3");
    if (v == "case1") {
        if (some_i) {
            // b'0 in I sends b1 to I; the other externals by the symmetries of the pattern
            const std::vector<std::pair<std::string, std::string>> to_i = {
                {"b'0", "b1"}, {"b'2", "b3"}, {"a'1", "a0"}, {"a'3", "a2"}};
            for (const auto& [e, out] : to_i)
                if (L.in_i(e)) L.add("case1.some_in_I", one_in_i(out));
        } else {
            L.add("case1.all_in_A", "A b1 a2 b3 I a0");
            L.add("case1.all_in_A", "A a0 b1 a2 I b3");
        }
    } else if (v == "case2") {
        if (some_i) {
            for (const char* e : {"b'0", "a'1", "b'2", "a'3"})
                if (L.in_i(e)) L.add("case2.some_in_I", one_in_i(paired_c4(e)));
        } else {
            L.add("case2.all_in_A", "A a0 b1 b3 I a2");
            L.add("case2.all_in_A", "A a0 b1 a2 I b3");
            L.add("case2.all_in_A", "A a0 b1 a2 b3");
        }
    } else {
        if (some_i) {
            for (const char* e : {"b'0", "a'1", "b'2", "a'3"})
                if (L.in_i(e)) L.add("case3.some_in_I", one_in_i(paired_c4(e)));
        } else {
            L.add("case3.all_in_A", "A a0 b1 a2 I b3");
            L.add("case3.all_in_A", "A a0 a2 I b1 b3");
            L.add("case3.all_in_A", "A a0 a2 b3 I b1");
            L.add("case3.all_in_A", "A a0 b1 b3 I a2");
        }
    }
    c4_fallbacks(L, v);
}

void candidates_facial_dist3(lifter& L, const reduction_step& st) {
    const auto& v = st.match.variant;
    if (v == "three_cut_disconnected") {
        L.add("three_cut.disconnected", "A b1 a4");
        return;
    }
    if (v == "three_cut_bridge") {
        if (L.in_a("z")) {
            L.add("three_cut.z_in_A", "A b1 a4");
        } else {
            L.add("three_cut.z_in_I", "A b1 a4");
            L.add("three_cut.z_in_I", "A a4 I b1");
            L.add("three_cut.z_in_I", "A b1 I a4");
            L.add("three_cut.z_in_I", "I b1 a4");
        }
        return;
    }
    if (L.in_i("a0") && L.in_i("a2")) {
        L.add("a0_a2_in_I", "A b1 a2 a4 I b3");
        return;
    }
    if (L.in_i("a0")) {
        L.add("a0_in_I", "A b1 a4");
        L.add("a0_in_I", "A b1 I a4");
        return;
    }
    if (L.in_i("b5")) {
        if (L.in_i("b3")) {
            L.add("b5_in_I.b3_in_I", "A b1 b3 a4 I a2");
        } else {
            L.add("b5_in_I.b3_in_A", L.in_i("a2") ? "A a4 b1" : "A a4 I b1");
        }
        return;
    }
    // both ends in A; the mirror swaps a0<->b5, b1<->a4, a2<->b3, b'2<->a'3
    bool mirror = !L.in_a("a2");
    auto m = [&](const std::string& s) -> std::string {
        if (!mirror) return s;
        static const std::map<std::string, std::string> sw = {
            {"a0", "b5"}, {"b5", "a0"}, {"b1", "a4"}, {"a4", "b1"}, {"a2", "b3"},
            {"b3", "a2"}, {"b'2", "a'3"}, {"a'3", "b'2"}, {"A", "A"}, {"I", "I"}};
        std::istringstream in(s);
        std::string tok, out;
        while (in >> tok) out += (out.empty() ? "" : " ") + sw.at(tok);
        return out;
    };
    std::string tag = mirror ? "ends_in_A.mirror" : "ends_in_A";
    bool b3 = L.in_a(m("b3"));
    if (L.a_path(m("a0"), m("b5"))) {
        L.add(tag + ".path", b3 ? m("I b1 a4") : m("A a4 I b1"));
    } else if (b3) {
        if (L.a_path(m("a0"), m("b3")))
            L.add(tag + ".no_path.b3_in_A", m("A a4 I b1"));
        else
            L.add(tag + ".no_path.b3_in_A", m("A b1 I a4"));
    } else if (L.a_path(m("a2"), m("b5"))) {
        L.add(tag + ".no_path.b3_in_I", m("A b1 a4"));
    } else if (L.a_path(m("a2"), m("a'3"))) {
        L.add(tag + ".no_path.b3_in_I", m("A b1 b3 a4 I a2"));
    } else {
        L.add(tag + ".no_path.b3_in_I", m("A b3 I b1 a4"));
    }
    L.add(tag + ".alt", "I b1 a4");
    L.add(tag + ".alt", "A a4 I b1");
    L.add(tag + ".alt", "A b1 I a4");
    L.add(tag + ".alt", "A b1 a4");
}

// hexagon b1 x2 y3 x4 b5 d with the removed 2-vertex d; externals e2 e3 e4 of x2 y3 x4
void hexagon_candidates(lifter& L, const std::string& tag, const std::string& d, const std::string& b1,
                        const std::string& b5, const std::vector<std::string>& mid) {
    int in = L.in_a(b1) + L.in_a(b5);
    if (in == 2) L.add(tag + ".ends_in_A", "I " + d);
    if (in == 1) L.add(tag + ".one_end_in_A", "A " + d);
    if (in != 0) return;
    // first middle vertex whose external edge closes a cycle with b1 joined to A
    for (const auto& x : mid) {
        L.add(tag + ".x=" + x, "A " + b1 + " " + b5 + " I " + x + " " + d);
        L.add(tag + ".x=" + x, "A " + b1 + " " + d + " I " + x);
    }
    L.add(tag + ".b3_in_I", "A " + b1 + " " + mid[1] + " " + b5 + " I " + mid[0] + " " + mid[2] + " " + d);
}

void candidates_two_hex(lifter& L) {
    hexagon_candidates(L, "hex1", "a'1", "b1", "b5", {"a2", "b3", "a4"});
    hexagon_candidates(L, "hex2", "a'1", "b1", "b5", {"a'2", "b'3", "a'4"});
    hexagon_candidates(L, "hex1.mirror", "a'1", "b5", "b1", {"a4", "b3", "a2"});
}

void candidates_bad_oct(lifter& L) {
    hexagon_candidates(L, "hex", "a2", "b1", "b3", {"a'1", "b2", "a'3"});
    hexagon_candidates(L, "hex.mirror", "a2", "b3", "b1", {"a'3", "b2", "a'1"});
    if (L.in_i("b5")) {
        L.add("b5_in_I", "A a2 b3 b5 I a4");
        L.add("b5_in_I", "A a2 b3 b5 I a4 a6");
    }
    if (L.in_i("b7")) {
        L.add("b7_in_I", "A a2 b1 b7 I a0");
        L.add("b7_in_I", "A a2 b1 b7 I a0 a6");
    }
    L.add("a6_in_I", "A b3 a2 I a'3");
    L.add("a6_in_I", "A b3 a2 a6 I a'3");
    L.add("a6_in_I", "A b1 a2 I a'1");
    L.add("a6_in_I", "A b1 a2 a6 I a'1");
}

}  // namespace

lift_outcome lift(const graph& g, const reduction_step& step, const std::vector<cai_partition>& subs) {
    lifter L(g, step, subs);
    switch (step.match.kind) {
        case config_kind::adjacent_deg2: candidates_adjacent_deg2(L, step); break;
        case config_kind::deg2_on_c4: candidates_deg2_on_c4(L); break;
        case config_kind::deg2_dist2: candidates_deg2_dist2(L); break;
        case config_kind::triple_sharing_c4: candidates_triple(L, step); break;
        case config_kind::twin_c4: candidates_twin(L, step); break;
        case config_kind::separating_c4: candidates_separating(L, step); break;
        case config_kind::plain_c4: candidates_plain(L, step); break;
        case config_kind::deg2_facial_dist3: candidates_facial_dist3(L, step); break;
        case config_kind::deg2_two_hex_faces: candidates_two_hex(L); break;
        case config_kind::bad_deg2_on_oct_face: candidates_bad_oct(L); break;
        default: fail(error_code::invalid_argument, "base cases are not lifted");
    }
    auto out = L.run();
    if (!out)
        fail(error_code::no_case_applies,
             std::string(config_kind_name(step.match.kind)) + ": " + step.match.describe());
    return *out;
}

namespace {

class recursion {
public:
    explicit recursion(const reduce_options& o) : opt_(o) {}

    cai_partition solve(const graph& g, const rotation_system& rot, int depth) {
        st_.max_depth = std::max(st_.max_depth, depth);
        auto base = base_case(g, opt_.base_size);
        if (base == config_kind::base_cycle) {
            ++st_.base_cycle;
            line(depth) << "base rule=BaseCycle n=" << g.n() << '\n';
            return partition_from_a(g.n(), remove_min(g.n()));
        }
        if (base == config_kind::base_small) {
            ++st_.base_small;
            line(depth) << "base rule=BaseSmall n=" << g.n() << " e=" << g.num_edges() << '\n';
            return exact(g);
        }
        std::optional<reduction_step> step;
        for (config_kind k : detection_order()) {
            for_each_match(g, rot, k, [&](const config_match& cand) {
                try {
                    step = reduce(g, rot, cand);
                    return true;
                } catch (const error& e) {
                    if (e.code() != error_code::class_violation) throw;
                    ++st_.skipped_matches;
                    return false;
                }
            });
            if (step) break;
        }
        if (!step) {
            ++st_.no_configuration;
            line(depth) << "fallback reason=NoConfiguration n=" << g.n() << " e=" << g.num_edges() << '\n';
            return exact(g);
        }
        ++st_.steps;
        std::string rule = config_kind_name(step->match.kind);
        ++st_.rules[rule];
        {
            auto& os = line(depth);
            os << "n=" << g.n() << " e=" << g.num_edges() << ' ' << step->match.describe() << " subs=";
            for (size_t k = 0; k < step->subs.size(); ++k)
                os << (k ? "," : "") << step->subs[k].g.n() << '/' << step->subs[k].g.num_edges();
            os << '\n';
        }
        std::vector<cai_partition> parts;
        for (const auto& sp : step->subs) parts.push_back(solve(sp.g, sp.rot, depth + 1));
        try {
            auto out = lift(g, *step, parts);
            if (out.local_search) ++st_.local_search;
            ++st_.cases[rule + "." + out.case_label];
            line(depth) << "lift rule=" << rule << " case=" << out.case_label << '\n';
            if (!verify_cai(g, out.partition)) fail(error_code::internal, "lifted partition fails verification");
            ++st_.lifts_verified;
            return out.partition;
        } catch (const error& e) {
            if (e.code() != error_code::no_case_applies) throw;
            ++st_.no_case_applies;
            line(depth) << "fallback reason=NoCaseApplies rule=" << rule << '\n';
            return exact(g);
        }
    }

    reduce_stats stats() const { return st_; }
    std::string trace() const { return tr_.str(); }

private:
    static std::vector<int> remove_min(int n) {
        std::vector<int> a;
        for (int v = 1; v < n; ++v) a.push_back(v);
        return a;
    }

    cai_partition exact(const graph& g) {
        auto r = solve_cai(g);
        if (r.status != solve_status::found) fail(error_code::internal, "exact solver found no CAI-partition");
        return *r.partition;
    }

    std::ostream& line(int depth) {
        if (!opt_.trace) {
            sink_.str("");
            return sink_;
        }
        tr_ << std::string(2 * depth, ' ') << "[d=" << depth << "] ";
        return tr_;
    }

    reduce_options opt_;
    reduce_stats st_;
    std::ostringstream tr_, sink_;
};

}  // namespace

subcubic_result solve_subcubic(const graph& g, const rotation_system& rot, const reduce_options& opts) {
    validate_class_f(g, rot);
    recursion rec(opts);
    auto p = rec.solve(g, rot, 0);
    auto v = verify_cai(g, p);
    if (!v) fail(error_code::internal, "final partition fails verification: " + v.detail);
    return {p, rec.stats(), rec.trace()};
}

}  // namespace cai
