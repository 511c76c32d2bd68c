#ifndef GTSP_MULTISET_HPP
#define GTSP_MULTISET_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "gtsp/graph.hpp"

namespace gtsp {

enum class EdgeKind : std::uint8_t { Original = 0, Shortcut = 1 };

/// One edge of the working solution. Original edges have weight 1.
/// A shortcut has weight 2 and remembers the vertex it bypassed, so the
/// bypassed 2-path (u, via, v) can always be restored in the input graph.
struct EdgeInstance {
    int u = 0, v = 0;  // u < v
    EdgeKind kind = EdgeKind::Original;
    int via = -1;

    int weight() const { return kind == EdgeKind::Original ? 1 : 2; }
    int other(int x) const { return x == u ? v : u; }
    auto operator<=>(const EdgeInstance&) const = default;
};

inline EdgeInstance original_edge(int u, int v) {
    auto [a, b] = make_edge(u, v);
    return EdgeInstance{a, b, EdgeKind::Original, -1};
}

inline EdgeInstance shortcut_edge(int u, int v, int via) {
    auto [a, b] = make_edge(u, v);
    return EdgeInstance{a, b, EdgeKind::Shortcut, via};
}

/// Edge multiset with multiplicities in {1,2}, ordered by instance id so
/// all iteration is deterministic.
class EdgeMultiset {
public:
    using Map = std::map<EdgeInstance, int>;

    void add(const EdgeInstance& e, int times = 1);
    void remove(const EdgeInstance& e, int times = 1);
    void erase_all(const EdgeInstance& e);
    int multiplicity(const EdgeInstance& e) const;
    bool contains(const EdgeInstance& e) const { return multiplicity(e) > 0; }
    /// Any instance (original or shortcut) with endpoints {u,v}?
    bool contains_pair(int u, int v) const;

    const Map& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t instance_count() const { return items_.size(); }

    /// Sum of weight * multiplicity.
    int total_cost() const;
    /// Number of edge slots counting multiplicity.
    int total_multiplicity() const;

    /// Instance-degree of v counting multiplicities.
    int degree(int v) const;

    /// Neighbor lists over distinct endpoint pairs (parallel instances merged).
    std::vector<std::vector<int>> support_adjacency(int n) const;

    /// Incident instances per vertex, each repeated per multiplicity slot.
    std::vector<std::vector<EdgeInstance>> instance_adjacency(int n) const;

    bool operator==(const EdgeMultiset&) const = default;

private:
    Map items_;
};

/// True iff the support spans all n vertices, is connected, has no
/// articulation vertex, and n >= 3. Shortcut edges count as ordinary edges.
bool is_two_vertex_connected(const EdgeMultiset& sub, int n);

/// True iff the support is connected, spans all n vertices, and every
/// vertex has even degree counting multiplicities.
bool is_eulerian(const EdgeMultiset& sub, int n);

/// A closed walk visiting every instance exactly as often as its
/// multiplicity. steps[i] goes from vertices[i] to vertices[i+1].
struct EulerCircuit {
    std::vector<int> vertices;        // size = steps.size() + 1, front == back
    std::vector<EdgeInstance> steps;
};

/// Hierholzer traversal; requires is_eulerian(sub, n).
EulerCircuit euler_circuit(const EdgeMultiset& sub, int n);

/// Expands a circuit over the multiset into a closed vertex walk of g:
/// every shortcut step (u,v) via m is replaced by u,m,v. The result uses
/// only edges of g and its hop length equals the multiset cost.
std::vector<int> expand_to_walk(const EdgeMultiset& sub, int n, const Graph& g);

}  // namespace gtsp

#endif
