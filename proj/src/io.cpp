#include "cai/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cai/error.hpp"

namespace cai {

namespace {

struct token {
    std::string text;
    int col = 0;
};

std::vector<token> split(const std::string& line) {
    std::vector<token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

[[noreturn]] void fail_at(error_code c, int line, int col, const std::string& msg) {
    fail(c, "line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg);
}

long parse_int(const token& t, int line) {
    if (t.text.empty()) fail_at(error_code::parse_error, line, t.col, "expected an integer");
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t.text, &used);
    } catch (const std::exception&) {
        fail_at(error_code::parse_error, line, t.col, "expected an integer, got '" + t.text + "'");
    }
    if (used != t.text.size()) fail_at(error_code::parse_error, line, t.col, "expected an integer, got '" + t.text + "'");
    return v;
}

int parse_vertex(const token& t, int line, int n) {
    long v = parse_int(t, line);
    if (v < 0 || v >= n)
        fail_at(error_code::out_of_range, line, t.col, "vertex " + t.text + " outside 0.." + std::to_string(n - 1));
    return static_cast<int>(v);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string s;
    while (std::getline(in, s)) out.push_back(s);
    return out;
}

}  // namespace

graph_file parse_graph(const std::string& text) {
    auto lines = lines_of(text);
    std::optional<mode> m;
    int n = -1;
    std::vector<arc> arcs;
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> rot;
    std::vector<int> rot_line;
    bool any_rot = false;
    for (size_t li = 0; li < lines.size(); ++li) {
        int ln = static_cast<int>(li) + 1;
        auto tk = split(lines[li]);
        if (tk.empty()) continue;
        const std::string& kw = tk[0].text;
        if (kw == "graph") {
            if (m) fail_at(error_code::parse_error, ln, tk[0].col, "repeated graph line");
            if (tk.size() != 2) fail_at(error_code::parse_error, ln, tk[0].col, "expected 'graph directed|undirected'");
            if (tk[1].text == "directed")
                m = mode::directed;
            else if (tk[1].text == "undirected")
                m = mode::undirected;
            else
                fail_at(error_code::parse_error, ln, tk[1].col, "unknown mode '" + tk[1].text + "'");
        } else if (kw == "n") {
            if (!m) fail_at(error_code::parse_error, ln, tk[0].col, "'n' before 'graph'");
            if (n >= 0) fail_at(error_code::parse_error, ln, tk[0].col, "repeated n line");
            if (tk.size() != 2) fail_at(error_code::parse_error, ln, tk[0].col, "expected 'n N'");
            long v = parse_int(tk[1], ln);
            if (v < 0) fail_at(error_code::parse_error, ln, tk[1].col, "negative vertex count");
            n = static_cast<int>(v);
            rot.assign(n, {});
            rot_line.assign(n, 0);
        } else if (kw == "e") {
            if (n < 0) fail_at(error_code::parse_error, ln, tk[0].col, "'e' before 'n'");
            if (tk.size() != 3) fail_at(error_code::parse_error, ln, tk[0].col, "expected 'e u v'");
            int u = parse_vertex(tk[1], ln, n), v = parse_vertex(tk[2], ln, n);
            if (u == v) fail_at(error_code::invalid_graph, ln, tk[2].col, "self-loop at " + std::to_string(u));
            std::pair<int, int> key{u, v};
            if (*m == mode::undirected && u > v) key = {v, u};
            if (!seen.insert(key).second) fail_at(error_code::invalid_graph, ln, tk[0].col, "duplicate edge");
            arcs.push_back({u, v});
        } else if (kw == "rot") {
            if (n < 0) fail_at(error_code::parse_error, ln, tk[0].col, "'rot' before 'n'");
            if (tk.size() < 2) fail_at(error_code::parse_error, ln, tk[0].col, "expected 'rot v n1 n2 ...'");
            int v = parse_vertex(tk[1], ln, n);
            if (rot_line[v]) fail_at(error_code::inconsistent_rotation, ln, tk[1].col, "second rotation for vertex " + tk[1].text);
            rot_line[v] = ln;
            any_rot = true;
            for (size_t k = 2; k < tk.size(); ++k) rot[v].push_back(parse_vertex(tk[k], ln, n));
        } else {
            fail_at(error_code::parse_error, ln, tk[0].col, "unknown keyword '" + kw + "'");
        }
    }
    if (!m) fail(error_code::parse_error, "missing 'graph' line");
    if (n < 0) fail(error_code::parse_error, "missing 'n' line");
    graph_file out{graph(*m, n, arcs), std::nullopt};
    if (any_rot) {
        for (int v = 0; v < n; ++v) {
            std::vector<int> r = rot[v];
            std::sort(r.begin(), r.end());
            if (r != out.g.neighbors(v)) {
                std::string msg = "rotation of vertex " + std::to_string(v) + " does not list its neighbours exactly";
                if (rot_line[v]) fail_at(error_code::inconsistent_rotation, rot_line[v], 1, msg);
                fail(error_code::inconsistent_rotation, msg);
            }
        }
        out.rot = rotation_system(rot);
    }
    return out;
}

std::string serialize_graph(const graph& g, const rotation_system* rot) {
    std::ostringstream os;
    os << "graph " << (g.directed() ? "directed" : "undirected") << "\n";
    os << "n " << g.n() << "\n";
    for (const arc& a : g.arcs()) os << "e " << a.from << " " << a.to << "\n";
    if (rot && !rot->empty())
        for (int v = 0; v < rot->n(); ++v) {
            os << "rot " << v;
            for (int u : rot->at(v)) os << " " << u;
            os << "\n";
        }
    return os.str();
}

partition_file parse_partition(const std::string& text, int n) {
    auto lines = lines_of(text);
    partition_file out;
    out.cai = {vertex_set(n), vertex_set(n)};
    out.bi = {vertex_set(n), vertex_set(n)};
    bool cai_kind = false, bi_kind = false;
    std::vector<int> owner(n, 0);
    for (size_t li = 0; li < lines.size(); ++li) {
        int ln = static_cast<int>(li) + 1;
        auto tk = split(lines[li]);
        if (tk.empty()) continue;
        const std::string& kw = tk[0].text;
        vertex_set* target = nullptr;
        if (kw == "A") target = &out.cai.a, cai_kind = true;
        else if (kw == "I") target = &out.cai.i, cai_kind = true;
        else if (kw == "A1") target = &out.bi.a1, bi_kind = true;
        else if (kw == "A2") target = &out.bi.a2, bi_kind = true;
        else fail_at(error_code::parse_error, ln, tk[0].col, "unknown keyword '" + kw + "'");
        if (cai_kind && bi_kind) fail_at(error_code::parse_error, ln, tk[0].col, "mixes A/I with A1/A2 lines");
        for (size_t k = 1; k < tk.size(); ++k) {
            int v = parse_vertex(tk[k], ln, n);
            if (owner[v]) fail_at(error_code::malformed_partition, ln, tk[k].col, "vertex " + tk[k].text + " listed twice");
            owner[v] = ln;
            target->insert(v);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!owner[v]) fail(error_code::malformed_partition, "vertex " + std::to_string(v) + " is not assigned");
    out.two_acyclic = bi_kind;
    return out;
}

static void set_line(std::ostringstream& os, const char* key, const vertex_set& s) {
    os << key;
    for (int v : s.members()) os << " " << v;
    os << "\n";
}

std::string serialize_partition(const cai_partition& p) {
    std::ostringstream os;
    set_line(os, "A", p.a);
    set_line(os, "I", p.i);
    return os.str();
}

std::string serialize_partition(const bi_acyclic_partition& p) {
    std::ostringstream os;
    set_line(os, "A1", p.a1);
    set_line(os, "A2", p.a2);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(error_code::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(error_code::invalid_argument, "cannot write " + path);
    out << text;
}

}  // namespace cai
