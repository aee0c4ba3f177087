#pragma once

#include <vector>

#include "cai/embedding.hpp"
#include "cai/graph.hpp"

namespace cai {

// mutable embedded multigraph used while building reduced instances; rotations hold edge ids
class embedding_editor {
public:
    embedding_editor(const graph& g, const rotation_system& rot);

    int size() const { return static_cast<int>(rot_.size()); }
    bool alive(int v) const { return alive_.at(v); }
    int add_vertex();
    int degree(int v) const { return static_cast<int>(rot_.at(v).size()); }
    // neighbours in rotation order, with multiplicity
    std::vector<int> neighbors(int v) const;
    int edge_between(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_between(u, v) >= 0; }
    bool has_arc(int u, int v) const;
    int tail(int e) const { return edges_.at(e).from; }
    int head(int e) const { return edges_.at(e).to; }
    const std::vector<int>& rotation(int v) const { return rot_.at(v); }

    void delete_vertex(int v);
    void delete_edge(int e);
    void set_arc(int e, int from, int to);
    // arc from -> to placed in a face having both endpoints on its boundary; when the endpoints lie in
    // different components, each side uses a face also touching its partner vertex (if given)
    int add_arc_in_face(int from, int to, int partner_from = -1, int partner_to = -1);
    // merges `gone` into `keep` through an edge joining them
    void contract(int keep, int gone);
    // contracts the connected vertex set onto rep, then drops loops
    void contract_set(int rep, const std::vector<int>& set);
    void remove_loops(int v);
    // edge groups joining v to a common neighbour, groups of size >= 2 only
    std::vector<std::vector<int>> parallel_groups(int v) const;
    void reverse_arcs_within(const std::vector<int>& vertices);
    // new vertex z replacing edge e = (x -> y) by x -> z -> y
    int subdivide(int e);

    std::vector<std::vector<int>> components() const;
    int live_vertices() const;
    int live_edges() const;

    struct extracted {
        graph g;
        rotation_system rot;
        std::vector<int> to_editor;
    };
    // throws class_violation on loops or parallel edges
    extracted extract(const std::vector<int>& keep) const;

private:
    struct edge {
        int from, to;
        bool alive;
    };
    std::vector<std::vector<std::pair<int, int>>> face_darts() const;
    int other(int e, int v) const { return edges_[e].from == v ? edges_[e].to : edges_[e].from; }
    void erase_from_rotation(int v, int e);

    std::vector<edge> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<char> alive_;
};

}  // namespace cai
