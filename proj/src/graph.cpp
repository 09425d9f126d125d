#include "isinglab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace isinglab {

BaseGraph::BaseGraph(std::vector<int> vertices, std::vector<LabeledEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int id : vertices_)
        if (id < 0) throw std::invalid_argument("negative vertex id");
    if (vertices_.size() > 30) throw std::invalid_argument("vertex count exceeds bitmask cap (30)");

    std::vector<int> labels;
    for (const auto& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw std::invalid_argument("edge endpoint not in vertex set");
        labels.push_back(e.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("duplicate edge label");

    parity_masks_.reserve(edges_.size());
    for (const auto& e : edges_)
        parity_masks_.push_back(e.is_loop() ? 0u : (vertex_mask(e.u) ^ vertex_mask(e.v)));
}

int BaseGraph::vertex_index(int id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id)
        throw std::out_of_range("unknown vertex id " + std::to_string(id));
    return static_cast<int>(it - vertices_.begin());
}

bool BaseGraph::has_vertex(int id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

int BaseGraph::edge_index_of_label(int label) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].label == label) return i;
    throw std::out_of_range("unknown edge label " + std::to_string(label));
}

std::uint32_t BaseGraph::mask_of(const std::vector<int>& ids) const {
    std::uint32_t m = 0;
    for (int id : ids) m ^= vertex_mask(id);
    return m;
}

std::set<int> BaseGraph::unmask(std::uint32_t mask) const {
    std::set<int> out;
    for (int i = 0; i < vertex_count(); ++i)
        if (mask & (1u << i)) out.insert(vertices_[i]);
    return out;
}

std::uint32_t boundary_mask(const BaseGraph& g, const Current& c) {
    if (static_cast<int>(c.values.size()) != g.edge_count())
        throw std::invalid_argument("current size does not match edge count");
    std::uint32_t b = 0;
    for (int i = 0; i < g.edge_count(); ++i)
        if (c.values[i] % 2 == 1) b ^= g.edge_parity_mask(i);
    return b;
}

std::set<int> boundary(const BaseGraph& g, const Current& c) { return g.unmask(boundary_mask(g, c)); }

std::uint32_t boundary_mask_of_edges(const BaseGraph& g, const std::vector<int>& edge_indices) {
    std::uint32_t b = 0;
    for (int i : edge_indices) b ^= g.edge_parity_mask(i);
    return b;
}

namespace {

// Union-find over dense vertex indices.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool connected(const BaseGraph& g, int u, int v, const Current& support) {
    if (u == v) {
        g.vertex_index(u);
        return true;
    }
    Dsu dsu(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i)
        if (support.values[i] > 0)
            dsu.unite(g.vertex_index(g.edges()[i].u), g.vertex_index(g.edges()[i].v));
    return dsu.find(g.vertex_index(u)) == dsu.find(g.vertex_index(v));
}

bool connected_in_edges(const BaseGraph& g, int u, int v, const std::vector<int>& edge_indices) {
    if (u == v) return true;
    Dsu dsu(g.vertex_count());
    for (int i : edge_indices)
        dsu.unite(g.vertex_index(g.edges()[i].u), g.vertex_index(g.edges()[i].v));
    return dsu.find(g.vertex_index(u)) == dsu.find(g.vertex_index(v));
}

BigRational current_weight(const BaseGraph& g, const Current& c, const std::vector<BigRational>& J) {
    BigRational w = 1;
    for (int i = 0; i < g.edge_count(); ++i) {
        const int n = c.values[i];
        if (n == 0) continue;
        BigRational p = 1;
        for (int j = 0; j < n; ++j) p *= J[i];
        w *= p / BigRational(factorial(n));
    }
    return w;
}

void for_each_sub_current(const BaseGraph& g, const Current& m, std::uint32_t target_boundary,
                          const std::function<void(const Current&, long long)>& fn) {
    Current n;
    n.values.assign(m.values.size(), 0);
    // Depth-first over per-edge values; parity prune once an edge's vertices
    // are settled would buy little at these sizes.
    std::function<void(int, long long)> rec = [&](int edge, long long weight) {
        if (edge == g.edge_count()) {
            if (boundary_mask(g, n) == target_boundary) fn(n, weight);
            return;
        }
        for (int v = 0; v <= m.values[edge]; ++v) {
            n.values[edge] = v;
            rec(edge + 1, weight * binomial(m.values[edge], v).get_si());
        }
        n.values[edge] = 0;
    };
    rec(0, 1);
}

bool switching_check(const BaseGraph& g, const Current& m, const std::set<int>& A, int u, int v) {
    std::uint32_t a_mask = 0;
    for (int id : A) a_mask ^= g.vertex_mask(id);
    const std::uint32_t uv_mask = g.vertex_mask(u) ^ g.vertex_mask(v);  // 0 when u == v
    if (boundary_mask(g, m) != (a_mask ^ uv_mask)) return true;         // both sides empty

    long long lhs = 0, rhs = 0;
    for_each_sub_current(g, m, a_mask, [&](const Current&, long long w) { lhs += w; });
    for_each_sub_current(g, m, a_mask ^ uv_mask, [&](const Current&, long long w) { rhs += w; });
    const bool joined = connected(g, u, v, m);
    return lhs == (joined ? rhs : 0);
}

}  // namespace isinglab
