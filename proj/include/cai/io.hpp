#pragma once

#include <optional>
#include <string>

#include "cai/embedding.hpp"
#include "cai/graph.hpp"
#include "cai/partition.hpp"

namespace cai {

struct graph_file {
    graph g;
    std::optional<rotation_system> rot;
};

// errors carry "line L col C: ..." in their message
graph_file parse_graph(const std::string& text);
std::string serialize_graph(const graph& g, const rotation_system* rot = nullptr);

struct partition_file {
    bool two_acyclic = false;
    cai_partition cai;
    bi_acyclic_partition bi;
};

partition_file parse_partition(const std::string& text, int n);
std::string serialize_partition(const cai_partition& p);
std::string serialize_partition(const bi_acyclic_partition& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cai
