#ifndef GTSP_GRAPH_HPP
#define GTSP_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtsp {

/// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Simple unweighted undirected graph. Immutable after construction;
/// `edges` is kept sorted ascending and `adj` lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Index of edge (u,v) in the sorted edge list; -1 if absent.
    int edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Parses the instance format: header `p <n> <m>`, then m lines `<u> <v>`,
/// `#` starts a comment. Malformed lines, duplicate edges, self-loops and
/// out-of-range ids raise ParseError with the offending line number.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges are emitted sorted ascending, so
/// parse_graph(serialize_graph(g)) == g bit-exactly.
std::string serialize_graph(const Graph& g);

bool is_connected(const Graph& g);

/// BFS hop-distance table. Requires a connected graph.
std::vector<std::vector<int>> graphic_metric(const Graph& g);

struct Block {
    std::vector<int> vertices;  // sorted ascending
    std::vector<Edge> edges;    // sorted ascending
};

/// Standard block decomposition (maximal 2-vertex-connected subgraphs).
/// Every edge lands in exactly one block; cut vertices appear in several.
/// Requires a connected graph.
std::vector<Block> biconnected_blocks(const Graph& g);

/// Induced relabeling of a block as a standalone graph, plus the map
/// from new ids back to the original vertex ids.
struct SubInstance {
    Graph graph;
    std::vector<int> to_parent;
};
SubInstance block_instance(const Block& b);

}  // namespace gtsp

#endif
