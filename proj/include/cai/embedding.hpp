#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cai/graph.hpp"

namespace cai {

// clockwise neighbour order around every vertex
class rotation_system {
public:
    rotation_system() = default;
    explicit rotation_system(std::vector<std::vector<int>> rot) : rot_(std::move(rot)) {}

    int n() const { return static_cast<int>(rot_.size()); }
    const std::vector<int>& at(int v) const { return rot_.at(v); }
    const std::vector<std::vector<int>>& lists() const { return rot_; }
    int position(int v, int u) const;
    int succ(int v, int u) const;
    int pred(int v, int u) const;
    bool empty() const { return rot_.empty(); }
    bool operator==(const rotation_system& o) const { return rot_ == o.rot_; }

private:
    std::vector<std::vector<int>> rot_;
};

// throws inconsistent_rotation when rot is not a permutation of each neighbourhood
void check_rotation(const graph& g, const rotation_system& rot);

struct face {
    std::vector<int> walk;  // darts walk[i] -> walk[i+1]
    int degree() const { return static_cast<int>(walk.size()); }
};

class face_set {
public:
    face_set() = default;
    face_set(int n, std::vector<face> faces);

    const std::vector<face>& faces() const { return faces_; }
    const face& at(int f) const { return faces_.at(f); }
    int size() const { return static_cast<int>(faces_.size()); }
    int face_of_dart(int u, int v) const;
    // faces incident to v, each listed once
    std::vector<int> faces_at(int v) const;
    bool on_face(int f, int v) const;

private:
    int n_ = 0;
    std::vector<face> faces_;
    std::unordered_map<long long, int> dart_face_;
};

// next(u->v) = (v -> succ_v(u)); checks V - E + F = 2 on every component with an edge
face_set trace_faces(const graph& g, const rotation_system& rot);

int facial_distance(const face_set& faces, const graph& g, int f, int u, int v);

struct discharge_report {
    std::vector<int> vertex_initial, face_initial;
    long long total_initial = 0;
    std::vector<int> vertex_final, face_final;
    long long total_final = 0;
    std::vector<int> bad_vertices;
    std::vector<int> negative_vertices, negative_faces;
};

discharge_report discharge_audit(const graph& g, const face_set& faces);

// clockwise order from straight-line coordinates; bent edges get their start tangent (degrees)
rotation_system rotation_from_coordinates(const graph& g, const std::vector<std::pair<double, double>>& xy,
                                          const std::map<std::pair<int, int>, double>& tangent = {});

// faces as vertex cycles of a sphere; orientations are made consistent before reading off rotations
rotation_system rotation_from_faces(int n, std::vector<std::vector<int>> faces);

}  // namespace cai
