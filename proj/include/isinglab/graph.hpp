#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "isinglab/rational.hpp"

namespace isinglab {

// Vertex ids and edge labels are small opaque nonnegative integers chosen at
// construction; parallel edges are told apart by label only.
struct LabeledEdge {
    int label;
    int u;
    int v;
    bool is_loop() const { return u == v; }
};

// Finite graph with labeled edges. Parallel edges and self-loops are legal at
// this level; modules that forbid loops check for themselves.
class BaseGraph {
  public:
    BaseGraph() = default;
    BaseGraph(std::vector<int> vertices, std::vector<LabeledEdge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int vertex_index(int id) const;           // throws on unknown id
    bool has_vertex(int id) const;
    int edge_index_of_label(int label) const; // throws on unknown label

    // Bitmask over dense vertex indices; flips both endpoints (a loop flips
    // nothing, its vertex degree rises by 2).
    std::uint32_t edge_parity_mask(int edge_index) const { return parity_masks_[edge_index]; }

    std::uint32_t vertex_mask(int id) const { return 1u << vertex_index(id); }
    std::uint32_t mask_of(const std::vector<int>& ids) const;
    std::set<int> unmask(std::uint32_t mask) const;

  private:
    std::vector<int> vertices_;  // sorted, unique
    std::vector<LabeledEdge> edges_;
    std::vector<std::uint32_t> parity_masks_;
};

// Per-edge nonnegative integer values, aligned with BaseGraph::edges() order.
struct Current {
    std::vector<int> values;

    int total() const {
        int s = 0;
        for (int v : values) s += v;
        return s;
    }
};

// Vertices of odd incident degree/current. A self-loop never contributes.
std::uint32_t boundary_mask(const BaseGraph& g, const Current& c);
std::set<int> boundary(const BaseGraph& g, const Current& c);

// Boundary of an edge subset given as indices into g.edges().
std::uint32_t boundary_mask_of_edges(const BaseGraph& g, const std::vector<int>& edge_indices);

// True iff u and v are joined by a path of strictly positive current values.
// connected(u, u, anything) is true.
bool connected(const BaseGraph& g, int u, int v, const Current& support);
bool connected_in_edges(const BaseGraph& g, int u, int v, const std::vector<int>& edge_indices);

// w(c) = prod_e J_e^{c_e} / c_e!  (exact; empty product = 1).
BigRational current_weight(const BaseGraph& g, const Current& c, const std::vector<BigRational>& J);

// Streams every n <= m with boundary(n) = A, paired with prod_e C(m_e, n_e).
void for_each_sub_current(const BaseGraph& g, const Current& m, std::uint32_t target_boundary,
                          const std::function<void(const Current&, long long)>& fn);

// Finite per-m switching identity:
//   sum_{n<=m, dn=A} binom(m,n) = 1[u<->v in m] * sum_{n<=m, dn=A^{u,v}} binom(m,n).
// Returns true iff the identity holds (vacuously true when boundary(m) is not
// A ^ {u,v}). A false return signals an implementation bug, not bad input.
bool switching_check(const BaseGraph& g, const Current& m, const std::set<int>& A, int u, int v);

}  // namespace isinglab
