#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isinglab/graph.hpp"

namespace isinglab {

// Labeled multigraph with a marked vertex pair (u0, v0) and an even list of
// distinct source vertices. Non-admissible instances (boundary != sources ^
// {u0, v0}) are legal; every partition sum over them is empty.
class MultiGraph {
  public:
    MultiGraph(std::vector<int> vertices, std::vector<LabeledEdge> edges, int u0, int v0,
               std::vector<int> sources);

    const BaseGraph& graph() const { return graph_; }
    const std::vector<LabeledEdge>& edges() const { return graph_.edges(); }
    int u0() const { return u0_; }
    int v0() const { return v0_; }
    const std::vector<int>& sources() const { return sources_; }
    int k() const { return static_cast<int>(sources_.size()) / 2; }
    bool admissible() const { return admissible_; }

    // Boundary the instance must carry to be admissible: sources ^ {u0, v0}.
    std::uint32_t target_boundary_mask() const { return target_boundary_; }

    MultiGraph with_edge(int label, int u, int v) const;
    MultiGraph without_edge(int label) const;

    std::string to_text() const;

  private:
    BaseGraph graph_;
    int u0_;
    int v0_;
    std::vector<int> sources_;
    std::uint32_t target_boundary_;
    bool admissible_;
};

}  // namespace isinglab
