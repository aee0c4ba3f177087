#include "cai/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "cai/error.hpp"

namespace cai {

const char* solve_status_name(solve_status s) {
    switch (s) {
    case solve_status::found: return "Found";
    case solve_status::unsat: return "Unsat";
    case solve_status::budget_exceeded: return "BudgetExceeded";
    }
    return "?";
}

namespace {

constexpr signed char unset = -1, in_a = 0, in_i = 1;

struct shared_state {
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    long long budget = 0;
    std::mutex mu;
    std::optional<std::vector<signed char>> answer;
};

class cai_search {
public:
    cai_search(const graph& g, std::vector<int> order, shared_state& sh)
        : g_(g), order_(std::move(order)), sh_(sh), assign_(g.n(), unset), mark_(g.n(), 0) {}

    bool assign(int v, signed char val) {
        if (assign_[v] != unset) return assign_[v] == val;
        if (val == in_a) {
            if (closes_cycle(v)) return false;
            set(v, in_a);
            return true;
        }
        for (int w : g_.neighbors(v))
            if (assign_[w] == in_i) return false;
        set(v, in_i);
        for (int w : g_.neighbors(v))
            if (!assign(w, in_a)) return false;
        return true;
    }

    bool connectable() {
        int start = -1, total_a = 0;
        for (int v = 0; v < g_.n(); ++v)
            if (assign_[v] == in_a) {
                ++total_a;
                if (start < 0) start = v;
            }
        if (total_a <= 1) return true;
        ++stamp_;
        std::vector<int> stack{start};
        mark_[start] = stamp_;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (assign_[u] == in_a) ++reached;
            for (int w : g_.neighbors(u))
                if (assign_[w] != in_i && mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    stack.push_back(w);
                }
        }
        return reached == total_a;
    }

    size_t trail_size() const { return trail_.size(); }
    void undo(size_t to) {
        while (trail_.size() > to) {
            assign_[trail_.back()] = unset;
            trail_.pop_back();
        }
    }

    // returns true when the search should stop (found or budget)
    bool dfs(size_t pos) {
        if (sh_.stop.load(std::memory_order_relaxed)) return true;
        while (pos < order_.size() && assign_[order_[pos]] != unset) ++pos;
        if (pos == order_.size()) {
            if (!complete_ok()) return false;
            std::lock_guard<std::mutex> lk(sh_.mu);
            if (!sh_.answer) sh_.answer = assign_;
            sh_.stop = true;
            return true;
        }
        int v = order_[pos];
        for (signed char val : {in_i, in_a}) {
            long long k = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (sh_.budget > 0 && k > sh_.budget) {
                sh_.budget_hit = true;
                sh_.stop = true;
                return true;
            }
            size_t mark = trail_size();
            if (assign(v, val) && connectable() && dfs(pos + 1)) return true;
            undo(mark);
        }
        return false;
    }

    const std::vector<signed char>& state() const { return assign_; }
    void load(const std::vector<signed char>& s) {
        undo(0);
        for (int v = 0; v < g_.n(); ++v)
            if (s[v] != unset) set(v, s[v]);
    }

private:
    void set(int v, signed char val) {
        assign_[v] = val;
        trail_.push_back(v);
    }

    bool closes_cycle(int v) {
        ++stamp_;
        if (g_.directed()) {
            // a directed cycle through v: out-neighbour reaches an in-neighbour inside A
            std::vector<int> stack;
            for (int w : g_.out(v))
                if (assign_[w] == in_a && mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    stack.push_back(w);
                }
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (g_.has_arc(u, v)) return true;
                for (int w : g_.out(u))
                    if (assign_[w] == in_a && mark_[w] != stamp_) {
                        mark_[w] = stamp_;
                        stack.push_back(w);
                    }
            }
            return false;
        }
        // undirected: two A-neighbours already joined inside A
        for (int s : g_.neighbors(v)) {
            if (assign_[s] != in_a) continue;
            if (mark_[s] == stamp_) return true;
            std::vector<int> stack{s};
            mark_[s] = stamp_;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g_.neighbors(u))
                    if (w != v && assign_[w] == in_a && mark_[w] != stamp_) {
                        mark_[w] = stamp_;
                        stack.push_back(w);
                    }
            }
        }
        return false;
    }

    bool complete_ok() {
        bool any_a = false;
        for (int v = 0; v < g_.n(); ++v)
            if (assign_[v] == in_a) any_a = true;
        if (g_.n() > 0 && !any_a) return false;
        return connectable();
    }

    const graph& g_;
    std::vector<int> order_;
    shared_state& sh_;
    std::vector<signed char> assign_;
    std::vector<int> trail_;
    std::vector<int> mark_;
    int stamp_ = 0;
};

std::vector<int> branching_order(const graph& g, vertex_order o) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    if (o == vertex_order::degree_descending)
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
    return order;
}

// expand the top of the tree breadth-first into independent subtrees
std::vector<std::vector<signed char>> frontier(const graph& g, const std::vector<int>& order, shared_state& sh,
                                               const std::vector<signed char>& root, size_t want) {
    std::vector<std::pair<std::vector<signed char>, size_t>> level{{root, 0}};
    for (int depth = 0; depth < 20 && level.size() < want; ++depth) {
        std::vector<std::pair<std::vector<signed char>, size_t>> next;
        bool grew = false;
        for (auto& [st, pos] : level) {
            size_t p = pos;
            while (p < order.size() && st[order[p]] != unset) ++p;
            if (p == order.size()) {
                next.emplace_back(st, p);
                continue;
            }
            grew = true;
            for (signed char val : {in_i, in_a}) {
                cai_search s(g, order, sh);
                s.load(st);
                if (s.assign(order[p], val) && s.connectable()) next.emplace_back(s.state(), p + 1);
            }
        }
        level = std::move(next);
        if (!grew) break;
    }
    std::vector<std::vector<signed char>> r;
    for (auto& [st, pos] : level) r.push_back(st);
    return r;
}

}  // namespace

cai_result solve_cai(const graph& g, const solve_options& opts) {
    cai_result res;
    int n = g.n();
    for (int v : opts.forced_a)
        if (v < 0 || v >= n) fail(error_code::out_of_range, "forced vertex out of range");
    for (int v : opts.forced_i)
        if (v < 0 || v >= n) fail(error_code::out_of_range, "forced vertex out of range");
    for (int v : opts.forced_a)
        if (std::find(opts.forced_i.begin(), opts.forced_i.end(), v) != opts.forced_i.end())
            fail(error_code::contradictory_forced, "vertex " + std::to_string(v) + " forced into both A and I");
    if (n == 0) {
        res.status = solve_status::found;
        res.partition = cai_partition{vertex_set(0), vertex_set(0)};
        return res;
    }

    shared_state sh;
    sh.budget = opts.node_budget;
    auto order = branching_order(g, opts.order);
    cai_search root(g, order, sh);
    bool ok = true;
    for (int v : opts.forced_i) ok = ok && root.assign(v, in_i);
    for (int v : opts.forced_a) ok = ok && root.assign(v, in_a);
    ok = ok && root.connectable();
    if (!ok) return res;

    if (opts.worker_count <= 1) {
        root.dfs(0);
    } else {
        auto tasks = frontier(g, order, sh, root.state(), static_cast<size_t>(opts.worker_count) * 8);
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < opts.worker_count; ++w)
            pool.emplace_back([&] {
                cai_search s(g, order, sh);
                for (;;) {
                    size_t k = next.fetch_add(1);
                    if (k >= tasks.size() || sh.stop) break;
                    s.load(tasks[k]);
                    if (s.dfs(0)) break;
                }
            });
        for (auto& t : pool) t.join();
    }
    res.nodes = sh.nodes.load();
    if (sh.answer) {
        vertex_set a(n);
        for (int v = 0; v < n; ++v)
            if ((*sh.answer)[v] == in_a) a.insert(v);
        cai_partition p = partition_from_a(a);
        verdict vd = verify_cai(g, p);
        if (!vd) fail(error_code::internal, "exact solver produced an invalid partition: " + vd.detail);
        res.status = solve_status::found;
        res.partition = std::move(p);
    } else if (sh.budget_hit) {
        res.status = solve_status::budget_exceeded;
    }
    return res;
}

forall_result forall_two_acyclic(const graph& g, const std::function<bool(const bi_acyclic_partition&)>& pred) {
    int n = g.n();
    if (n > 24) fail(error_code::size_guard, "forall_two_acyclic is limited to 24 vertices");
    forall_result r;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bi_acyclic_partition p{vertex_set(n), vertex_set(n)};
        for (int v = 0; v < n; ++v) (mask >> v & 1 ? p.a1 : p.a2).insert(v);
        if (!induced_acyclic(g, p.a1) || !induced_acyclic(g, p.a2)) continue;
        ++r.partitions_checked;
        if (!pred(p)) {
            r.holds = false;
            r.counterexample = std::move(p);
            return r;
        }
    }
    return r;
}

namespace {

class forest_search {
public:
    forest_search(const graph& g, std::vector<int> order, long long budget)
        : g_(g), order_(std::move(order)), budget_(budget), side_(g.n(), -1) {}

    // 1 found, 0 exhausted, -1 budget
    int run(size_t pos) {
        if (pos == order_.size()) return 1;
        int v = order_[pos];
        for (int s : {0, 1}) {
            if (budget_ > 0 && ++nodes_ > budget_) return -1;
            if (budget_ <= 0) ++nodes_;
            if (joins_cycle(v, s)) continue;
            side_[v] = s;
            int r = run(pos + 1);
            if (r != 0) return r;
            side_[v] = -1;
        }
        return 0;
    }

    const std::vector<int>& side() const { return side_; }
    long long nodes() const { return nodes_; }

private:
    bool joins_cycle(int v, int s) {
        std::vector<char> seen(g_.n(), 0);
        if (g_.directed()) {
            std::vector<int> stack;
            for (int w : g_.out(v))
                if (side_[w] == s && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (g_.has_arc(u, v)) return true;
                for (int w : g_.out(u))
                    if (side_[w] == s && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return false;
        }
        for (int a : g_.neighbors(v)) {
            if (side_[a] != s) continue;
            if (seen[a]) return true;
            std::vector<int> stack{a};
            seen[a] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g_.neighbors(u))
                    if (w != v && side_[w] == s && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return false;
    }

    const graph& g_;
    std::vector<int> order_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<int> side_;
};

}  // namespace

two_acyclic_result solve_two_forest(const graph& g, const solve_options& opts) {
    if (g.directed()) fail(error_code::mode_mismatch, "solve_two_forest needs an undirected graph");
    forest_search s(g, branching_order(g, opts.order), opts.node_budget);
    two_acyclic_result r;
    int out = s.run(0);
    r.nodes = s.nodes();
    if (out == 1) {
        bi_acyclic_partition p{vertex_set(g.n()), vertex_set(g.n())};
        for (int v = 0; v < g.n(); ++v) (s.side()[v] == 0 ? p.a1 : p.a2).insert(v);
        verdict vd = verify_two_acyclic(g, p);
        if (!vd) fail(error_code::internal, "two-forest search produced an invalid partition");
        r.status = solve_status::found;
        r.partition = std::move(p);
    } else {
        r.status = out < 0 ? solve_status::budget_exceeded : solve_status::unsat;
    }
    return r;
}

}  // namespace cai
