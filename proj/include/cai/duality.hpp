#pragma once

#include <vector>

#include "cai/embedding.hpp"
#include "cai/graph.hpp"
#include "cai/partition.hpp"

namespace cai {

struct triangulation_bundle {
    graph g;
    rotation_system rot;
    face_set faces;
    tripartition tri;
};

bool is_eulerian_digraph(const graph& g);
// mode aware: arc balance when directed, even degrees when undirected
bool is_eulerian(const graph& g);

// every face a triangle on a simple graph with at least four vertices
void validate_triangulation(const graph& g, const face_set& faces);
// bipartite, 2-connected, planar under rot, oriented when directed
void validate_bipartite_planar(const graph& g, const rotation_system& rot);

// seeded at the face of dart (0, smallest neighbour of 0): colours 0, 1, 2 in that order
tripartition find_tripartition(const graph& t, const rotation_system& rot);
tripartition tripartition_from_seed(const graph& t, const face_set& faces, int seed_face);
bool same_classes(const tripartition& x, const tripartition& y);

triangulation_bundle make_bundle(graph g, rotation_system rot);

struct class_deletion {
    graph g;
    rotation_system rot;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

class_deletion delete_class(const triangulation_bundle& t, int cls);
rotation_system restrict_rotation(const rotation_system& rot, const std::vector<int>& old_to_new, int new_n);

// apex vertices get ids h.n() .. h.n()+F-1, one per face in face_set order
triangulation_bundle triangulate_up(const graph& h, const rotation_system& rot);

graph eulerian_orient(const graph& g);

}  // namespace cai
