#include "cai/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "cai/error.hpp"

namespace cai {

vertex_set::vertex_set(int n, std::initializer_list<int> vs) : bits_(n, 0) {
    for (int v : vs) insert(v);
}

vertex_set::vertex_set(int n, const std::vector<int>& vs) : bits_(n, 0) {
    for (int v : vs) insert(v);
}

vertex_set vertex_set::all(int n) {
    vertex_set s(n);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.count_ = n;
    return s;
}

void vertex_set::insert(int v) {
    if (v < 0 || v >= universe())
        fail(error_code::out_of_range, "vertex " + std::to_string(v) + " outside set universe");
    if (!bits_[v]) {
        bits_[v] = 1;
        ++count_;
    }
}

void vertex_set::erase(int v) {
    if (contains(v)) {
        bits_[v] = 0;
        --count_;
    }
}

std::vector<int> vertex_set::members() const {
    std::vector<int> r;
    r.reserve(count_);
    for (int v = 0; v < universe(); ++v)
        if (bits_[v]) r.push_back(v);
    return r;
}

vertex_set vertex_set::complement() const {
    vertex_set c(universe());
    for (int v = 0; v < universe(); ++v)
        if (!bits_[v]) c.insert(v);
    return c;
}

graph::graph(mode m, int n, std::vector<arc> arcs, std::vector<std::string> labels)
    : mode_(m), n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (n < 0) fail(error_code::invalid_graph, "negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        fail(error_code::invalid_graph, "label count differs from vertex count");
    for (auto& a : arcs_) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            fail(error_code::out_of_range,
                 "arc " + std::to_string(a.from) + " " + std::to_string(a.to) + " has endpoint outside 0.." +
                     std::to_string(n - 1));
        if (a.from == a.to) fail(error_code::invalid_graph, "self-loop at " + std::to_string(a.from));
        if (m == mode::undirected && a.from > a.to) std::swap(a.from, a.to);
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i] == arcs_[i - 1])
            fail(error_code::invalid_graph,
                 "duplicate arc " + std::to_string(arcs_[i].from) + " " + std::to_string(arcs_[i].to));
    out_.assign(n, {});
    in_.assign(n, {});
    nbrs_.assign(n, {});
    for (const auto& a : arcs_) {
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
        nbrs_[a.from].push_back(a.to);
        nbrs_[a.to].push_back(a.from);
        if (m == mode::undirected) {
            out_[a.to].push_back(a.from);
            in_[a.from].push_back(a.to);
        }
    }
    for (int v = 0; v < n; ++v) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[v].begin(), in_[v].end());
        auto& nb = nbrs_[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        num_edges_ += static_cast<int>(nb.size());
    }
    num_edges_ /= 2;
}

int graph::check(int v) const {
    if (v < 0 || v >= n_) fail(error_code::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return v;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> r;
    r.reserve(num_edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) r.emplace_back(u, v);
    return r;
}

bool graph::has_arc(int u, int v) const {
    const auto& o = out_[check(u)];
    return std::binary_search(o.begin(), o.end(), check(v));
}

bool graph::adjacent(int u, int v) const {
    const auto& o = nbrs_[check(u)];
    return std::binary_search(o.begin(), o.end(), check(v));
}

std::string graph::label(int v) const {
    check(v);
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

degree_info degree(const graph& g, int v) {
    degree_info d;
    if (g.directed()) {
        d.out = static_cast<int>(g.out(v).size());
        d.in = static_cast<int>(g.in(v).size());
        d.d = *d.out + *d.in;
    } else {
        d.d = static_cast<int>(g.neighbors(v).size());
    }
    return d;
}

bool is_oriented(const graph& g) {
    if (!g.directed()) fail(error_code::mode_mismatch, "is_oriented needs a directed graph");
    for (const auto& a : g.arcs())
        if (g.has_arc(a.to, a.from)) return false;
    return true;
}

bool is_subcubic(const graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).size() > 3) return false;
    return true;
}

std::optional<std::vector<int>> is_bipartite(const graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

cut_report cut_vertices_and_bridges(const graph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<size_t> it(n, 0);
    std::vector<char> is_cut(n, 0);
    cut_report r;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            const auto& nb = g.neighbors(u);
            if (it[u] < nb.size()) {
                int w = nb[it[u]++];
                if (disc[w] < 0) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    if (u == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[u];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) r.bridges.emplace_back(std::min(p, u), std::max(p, u));
                    if (p != root && low[u] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) r.cut_vertices.push_back(v);
    std::sort(r.bridges.begin(), r.bridges.end());
    return r;
}

std::vector<int> components(const graph& g, int* count) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const graph& g) {
    int c = 0;
    components(g, &c);
    return c <= 1;
}

bool is_two_connected(const graph& g) {
    if (g.n() < 3 || !is_connected(g)) return false;
    return cut_vertices_and_bridges(g).cut_vertices.empty();
}

bool is_two_edge_connected(const graph& g) {
    if (g.n() < 2 || !is_connected(g)) return false;
    return cut_vertices_and_bridges(g).bridges.empty();
}

std::optional<std::vector<int>> find_induced_cycle(const graph& g, const vertex_set& s) {
    int n = g.n();
    std::vector<int> state(n, 0), parent(n, -1);
    std::vector<size_t> it(n, 0);
    for (int root = 0; root < n; ++root) {
        if (!s.contains(root) || state[root]) continue;
        std::vector<int> stack{root};
        state[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            const auto& nb = g.directed() ? g.out(u) : g.neighbors(u);
            if (it[u] < nb.size()) {
                int w = nb[it[u]++];
                if (!s.contains(w)) continue;
                if (state[w] == 0) {
                    parent[w] = u;
                    state[w] = 1;
                    stack.push_back(w);
                } else if (state[w] == 1 && (g.directed() || w != parent[u])) {
                    std::vector<int> cyc;
                    for (int x = u; x != w; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(w);
                    std::reverse(cyc.begin(), cyc.end());
                    return cyc;
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

bool induced_acyclic(const graph& g, const vertex_set& s) {
    if (g.directed()) {
        std::vector<int> indeg(g.n(), 0);
        int total = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (!s.contains(v)) continue;
            ++total;
            for (int w : g.in(v))
                if (s.contains(w)) ++indeg[v];
        }
        std::vector<int> ready;
        for (int v = 0; v < g.n(); ++v)
            if (s.contains(v) && indeg[v] == 0) ready.push_back(v);
        int seen = 0;
        while (!ready.empty()) {
            int u = ready.back();
            ready.pop_back();
            ++seen;
            for (int w : g.out(u))
                if (s.contains(w) && --indeg[w] == 0) ready.push_back(w);
        }
        return seen == total;
    }
    // forest iff edges == vertices - components
    int edges = 0;
    for (int v = 0; v < g.n(); ++v)
        if (s.contains(v))
            for (int w : g.neighbors(v))
                if (w > v && s.contains(w)) ++edges;
    std::vector<int> comp(g.n(), -1);
    int comps = 0;
    for (int r = 0; r < g.n(); ++r) {
        if (!s.contains(r) || comp[r] >= 0) continue;
        ++comps;
        std::vector<int> stack{r};
        comp[r] = r;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (s.contains(w) && comp[w] < 0) {
                    comp[w] = r;
                    stack.push_back(w);
                }
        }
    }
    return edges == s.size() - comps;
}

bool induced_connected(const graph& g, const vertex_set& s) {
    if (s.empty()) return true;
    std::vector<int> m = s.members();
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{m.front()};
    seen[m.front()] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (s.contains(w) && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == s.size();
}

bool a_path_exists(const graph& g, int u, int v, const vertex_set& s, bool directed_path) {
    if (!s.contains(u) || !s.contains(v))
        fail(error_code::invalid_argument, "path endpoints must lie in the vertex set");
    bool follow_arcs = directed_path && g.directed();
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (int w : follow_arcs ? g.out(x) : g.neighbors(x))
            if (s.contains(w) && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return false;
}

subgraph induced_subgraph(const graph& g, const vertex_set& keep) {
    subgraph r;
    r.old_to_new.assign(g.n(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.n(); ++v)
        if (keep.contains(v)) {
            r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
            if (g.has_labels()) labels.push_back(g.labels()[v]);
        }
    std::vector<arc> arcs;
    for (const auto& a : g.arcs())
        if (keep.contains(a.from) && keep.contains(a.to))
            arcs.push_back({r.old_to_new[a.from], r.old_to_new[a.to]});
    r.g = graph(g.kind(), static_cast<int>(r.new_to_old.size()), std::move(arcs), std::move(labels));
    return r;
}

graph underlying(const graph& g) {
    std::vector<arc> arcs;
    for (auto [u, v] : g.edges()) arcs.push_back({u, v});
    return graph(mode::undirected, g.n(), std::move(arcs), g.labels());
}

graph reversed(const graph& g) {
    std::vector<arc> arcs;
    for (const auto& a : g.arcs()) arcs.push_back({a.to, a.from});
    return graph(g.kind(), g.n(), std::move(arcs), g.labels());
}

graph with_labels(const graph& g, std::vector<std::string> labels) {
    return graph(g.kind(), g.n(), g.arcs(), std::move(labels));
}

}  // namespace cai
