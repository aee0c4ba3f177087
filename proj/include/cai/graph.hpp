#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cai {

enum class mode { directed, undirected };

struct arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const arc&) const = default;
};

class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(int n) : bits_(n, 0) {}
    vertex_set(int n, std::initializer_list<int> vs);
    vertex_set(int n, const std::vector<int>& vs);
    static vertex_set all(int n);

    int universe() const { return static_cast<int>(bits_.size()); }
    bool contains(int v) const { return v >= 0 && v < universe() && bits_[v]; }
    void insert(int v);
    void erase(int v);
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    std::vector<int> members() const;
    vertex_set complement() const;
    bool operator==(const vertex_set& o) const { return bits_ == o.bits_; }

private:
    std::vector<char> bits_;
    int count_ = 0;
};

class graph {
public:
    graph() = default;
    graph(mode m, int n, std::vector<arc> arcs, std::vector<std::string> labels = {});

    mode kind() const { return mode_; }
    bool directed() const { return mode_ == mode::directed; }
    int n() const { return n_; }
    const std::vector<arc>& arcs() const { return arcs_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    // edges of the underlying simple undirected graph
    int num_edges() const { return num_edges_; }
    std::vector<std::pair<int, int>> edges() const;

    // undirected mode: out == in == neighbors
    const std::vector<int>& out(int v) const { return out_[check(v)]; }
    const std::vector<int>& in(int v) const { return in_[check(v)]; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[check(v)]; }

    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

    bool operator==(const graph& o) const {
        return mode_ == o.mode_ && n_ == o.n_ && arcs_ == o.arcs_;
    }

private:
    int check(int v) const;

    mode mode_ = mode::directed;
    int n_ = 0;
    std::vector<arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_, in_, nbrs_;
    int num_edges_ = 0;
};

struct degree_info {
    int d = 0;
    std::optional<int> out;
    std::optional<int> in;
};

degree_info degree(const graph& g, int v);
bool is_oriented(const graph& g);
bool is_subcubic(const graph& g);
std::optional<std::vector<int>> is_bipartite(const graph& g);

struct cut_report {
    std::vector<int> cut_vertices;
    std::vector<std::pair<int, int>> bridges;
};
cut_report cut_vertices_and_bridges(const graph& g);

// component id per vertex, ids are 0..count-1 in order of first vertex
std::vector<int> components(const graph& g, int* count = nullptr);
bool is_connected(const graph& g);
bool is_two_connected(const graph& g);
bool is_two_edge_connected(const graph& g);

bool induced_acyclic(const graph& g, const vertex_set& s);
bool induced_connected(const graph& g, const vertex_set& s);
// a cycle inside g[s] (directed cycle in directed mode), as a vertex sequence
std::optional<std::vector<int>> find_induced_cycle(const graph& g, const vertex_set& s);
bool a_path_exists(const graph& g, int u, int v, const vertex_set& s, bool directed_path);

struct subgraph {
    graph g;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};
subgraph induced_subgraph(const graph& g, const vertex_set& keep);
graph underlying(const graph& g);
graph reversed(const graph& g);
graph with_labels(const graph& g, std::vector<std::string> labels);

}  // namespace cai
