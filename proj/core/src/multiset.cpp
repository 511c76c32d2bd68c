#include "gtsp/multiset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gtsp {

void EdgeMultiset::add(const EdgeInstance& e, int times) {
    assert(times > 0);
    int& m = items_[e];
    m += times;
    assert(m <= 2 && "multiplicity never exceeds 2");
}

void EdgeMultiset::remove(const EdgeInstance& e, int times) {
    auto it = items_.find(e);
    assert(it != items_.end() && it->second >= times);
    it->second -= times;
    if (it->second == 0) items_.erase(it);
}

void EdgeMultiset::erase_all(const EdgeInstance& e) { items_.erase(e); }

int EdgeMultiset::multiplicity(const EdgeInstance& e) const {
    auto it = items_.find(e);
    return it == items_.end() ? 0 : it->second;
}

bool EdgeMultiset::contains_pair(int u, int v) const {
    auto [a, b] = make_edge(u, v);
    auto it = items_.lower_bound(EdgeInstance{a, b, EdgeKind::Original, -1});
    return it != items_.end() && it->first.u == a && it->first.v == b;
}

int EdgeMultiset::total_cost() const {
    int cost = 0;
    for (const auto& [e, m] : items_) cost += e.weight() * m;
    return cost;
}

int EdgeMultiset::total_multiplicity() const {
    int c = 0;
    for (const auto& [e, m] : items_) c += m;
    return c;
}

int EdgeMultiset::degree(int v) const {
    int d = 0;
    for (const auto& [e, m] : items_)
        if (e.u == v || e.v == v) d += m;
    return d;
}

std::vector<std::vector<int>> EdgeMultiset::support_adjacency(int n) const {
    std::vector<std::vector<int>> adj(n);
    Edge prev{-1, -1};
    for (const auto& [e, m] : items_) {
        if (Edge{e.u, e.v} == prev) continue;  // parallel instance
        prev = {e.u, e.v};
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<std::vector<EdgeInstance>> EdgeMultiset::instance_adjacency(int n) const {
    std::vector<std::vector<EdgeInstance>> adj(n);
    for (const auto& [e, m] : items_)
        for (int i = 0; i < m; ++i) {
            adj[e.u].push_back(e);
            adj[e.v].push_back(e);
        }
    return adj;
}

namespace {

struct SupportScan {
    bool spanning = false;
    bool connected = false;
    bool has_articulation = true;
};

// One pass computing spanning + connectivity + articulation (Tarjan lowpoints).
SupportScan scan_support(const EdgeMultiset& sub, int n) {
    SupportScan r;
    auto adj = sub.support_adjacency(n);
    if (n == 0) return r;
    std::vector<int> num(n, -1), low(n, 0);
    int counter = 0;
    int root = 0;
    r.spanning = true;
    for (int v = 0; v < n; ++v)
        if (adj[v].empty()) {
            r.spanning = false;
            return r;
        }

    struct Frame {
        int v, parent;
        size_t next = 0;
        int children = 0;
    };
    bool articulation = false;
    std::vector<Frame> frames{{root, -1}};
    num[root] = low[root] = counter++;
    int root_children = 0;
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& nbrs = adj[f.v];
        if (f.next < nbrs.size()) {
            int w = nbrs[f.next++];
            if (w == f.parent) {
                f.parent = -2;  // a second (u,v) adjacency cannot occur in support
                continue;
            }
            if (num[w] < 0) {
                num[w] = low[w] = counter++;
                if (f.v == root) ++root_children;
                frames.push_back({w, f.v});
            } else {
                low[f.v] = std::min(low[f.v], num[w]);
            }
        } else {
            int v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                Frame& p = frames.back();
                low[p.v] = std::min(low[p.v], low[v]);
                if (p.v != root && low[v] >= num[p.v]) articulation = true;
            }
        }
    }
    if (root_children > 1) articulation = true;
    r.connected = (counter == n);
    r.has_articulation = articulation;
    return r;
}

}  // namespace

bool is_two_vertex_connected(const EdgeMultiset& sub, int n) {
    if (n < 3) return false;
    auto scan = scan_support(sub, n);
    return scan.spanning && scan.connected && !scan.has_articulation;
}

bool is_eulerian(const EdgeMultiset& sub, int n) {
    if (n == 0) return false;
    auto scan = scan_support(sub, n);
    if (!scan.spanning || !scan.connected) return false;
    std::vector<int> deg(n, 0);
    for (const auto& [e, m] : sub.items()) {
        deg[e.u] += m;
        deg[e.v] += m;
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] % 2) return false;
    return true;
}

EulerCircuit euler_circuit(const EdgeMultiset& sub, int n) {
    if (!is_eulerian(sub, n)) throw std::invalid_argument("euler_circuit: multiset is not Eulerian");
    // Remaining multiplicity per instance; adjacency sorted by instance id so
    // the traversal always consumes the smallest available edge.
    std::map<EdgeInstance, int> remaining;
    for (const auto& [e, m] : sub.items()) remaining[e] = m;
    std::vector<std::vector<EdgeInstance>> adj(n);
    for (const auto& [e, m] : sub.items()) {
        adj[e.u].push_back(e);
        adj[e.v].push_back(e);
    }
    std::vector<size_t> cursor(n, 0);

    int start = 0;
    while (start < n && adj[start].empty()) ++start;
    assert(start < n);

    // Hierholzer with explicit vertex/edge stacks.
    EulerCircuit out;
    std::vector<int> vstack = {start};
    std::vector<EdgeInstance> estack;
    while (!vstack.empty()) {
        int v = vstack.back();
        bool advanced = false;
        while (cursor[v] < adj[v].size()) {
            const EdgeInstance& e = adj[v][cursor[v]];
            if (remaining[e] == 0) {
                ++cursor[v];
                continue;
            }
            --remaining[e];
            vstack.push_back(e.other(v));
            estack.push_back(e);
            advanced = true;
            break;
        }
        if (!advanced) {
            out.vertices.push_back(v);
            vstack.pop_back();
            if (!estack.empty() && !vstack.empty()) {
                out.steps.push_back(estack.back());
                estack.pop_back();
            }
        }
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.steps.begin(), out.steps.end());
    assert(out.vertices.size() == out.steps.size() + 1);
    assert(out.vertices.front() == out.vertices.back());
    assert(static_cast<int>(out.steps.size()) == sub.total_multiplicity());
    return out;
}

std::vector<int> expand_to_walk(const EdgeMultiset& sub, int n, const Graph& g) {
    EulerCircuit circ = euler_circuit(sub, n);
    std::vector<int> walk;
    walk.push_back(circ.vertices.front());
    for (size_t i = 0; i < circ.steps.size(); ++i) {
        const EdgeInstance& e = circ.steps[i];
        int from = circ.vertices[i], to = circ.vertices[i + 1];
        if (e.kind == EdgeKind::Shortcut) {
            if (!g.has_edge(from, e.via) || !g.has_edge(e.via, to))
                throw std::logic_error("expand_to_walk: stale shortcut bypass");
            walk.push_back(e.via);
        } else {
            if (!g.has_edge(from, to)) throw std::logic_error("expand_to_walk: edge not in graph");
        }
        walk.push_back(to);
    }
    return walk;
}

}  // namespace gtsp
