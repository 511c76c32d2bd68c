#include "gtsp/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace gtsp {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        assert(u != v && u >= 0 && v < n_);
    }
    std::sort(edges_.begin(), edges_.end());
    assert(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end());
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(int u, int v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), make_edge(u, v));
    if (it == edges_.end() || *it != make_edge(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

std::vector<long long> parse_ints(std::string_view line, int lineno) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j)
            throw ParseError(lineno, "expected integer, got '" + std::string(line.substr(i, j - i)) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        if (n < 0) {
            // still looking for the header
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) {
                if (pos > text.size()) break;
                continue;
            }
            if (line[first] != 'p') throw ParseError(lineno, "expected header 'p <n> <m>'");
            auto nums = parse_ints(line.substr(first + 1), lineno);
            if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
                throw ParseError(lineno, "expected header 'p <n> <m>'");
            n = static_cast<int>(nums[0]);
            m = nums[1];
        } else {
            auto nums = parse_ints(line, lineno);
            if (nums.empty()) {
                if (pos > text.size()) break;
                continue;
            }
            if (nums.size() != 2) throw ParseError(lineno, "expected edge '<u> <v>'");
            long long u = nums[0], v = nums[1];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
            if (u == v) throw ParseError(lineno, "self-loop");
            Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
            if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
            edges.push_back(e);
        }
        if (pos > text.size()) break;
    }
    if (n < 0) throw ParseError(lineno, "missing header 'p <n> <m>'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> vis(n, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

std::vector<std::vector<int>> graphic_metric(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graphic_metric: graph is disconnected");
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<Edge> stack;
    std::vector<Block> blocks;
    int counter = 0;

    explicit BlockFinder(const Graph& graph) : g(graph) {
        num.assign(g.vertex_count(), -1);
        low.assign(g.vertex_count(), 0);
    }

    void emit_block(const Edge& top) {
        std::set<int> verts;
        Block b;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == top) break;
        }
        b.vertices.assign(verts.begin(), verts.end());
        std::sort(b.edges.begin(), b.edges.end());
        blocks.push_back(std::move(b));
    }

    // Iterative DFS to avoid recursion limits on long paths.
    void run(int root) {
        struct Frame {
            int v, parent;
            size_t next = 0;
        };
        std::vector<Frame> frames{{root, -1}};
        num[root] = low[root] = counter++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (w == f.parent) {
                    // skip one occurrence of the tree edge
                    f.parent = -2;
                    continue;
                }
                if (num[w] < 0) {
                    stack.push_back(make_edge(f.v, w));
                    num[w] = low[w] = counter++;
                    frames.push_back({w, f.v});
                } else if (num[w] < num[f.v]) {
                    stack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) emit_block(make_edge(p, v));
                }
            }
        }
    }
};

}  // namespace

std::vector<Block> biconnected_blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("biconnected_blocks: graph is disconnected");
    BlockFinder finder(g);
    finder.run(0);
    return finder.blocks;
}

SubInstance block_instance(const Block& b) {
    SubInstance sub;
    sub.to_parent = b.vertices;
    std::vector<Edge> edges;
    edges.reserve(b.edges.size());
    auto local = [&](int v) {
        auto it = std::lower_bound(b.vertices.begin(), b.vertices.end(), v);
        return static_cast<int>(it - b.vertices.begin());
    };
    for (const auto& [u, v] : b.edges) edges.push_back(make_edge(local(u), local(v)));
    sub.graph = Graph(static_cast<int>(b.vertices.size()), std::move(edges));
    return sub;
}

}  // namespace gtsp
