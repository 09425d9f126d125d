#include "isinglab/multigraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isinglab {

MultiGraph::MultiGraph(std::vector<int> vertices, std::vector<LabeledEdge> edges, int u0, int v0,
                       std::vector<int> sources)
    : graph_(std::move(vertices), std::move(edges)), u0_(u0), v0_(v0), sources_(std::move(sources)) {
    if (u0_ == v0_) throw std::invalid_argument("marked pair must be two distinct vertices");
    graph_.vertex_index(u0_);
    graph_.vertex_index(v0_);
    if (sources_.empty() || sources_.size() % 2 != 0)
        throw std::invalid_argument("need a nonempty even list of sources");
    std::set<int> seen;
    for (int s : sources_) {
        graph_.vertex_index(s);
        if (!seen.insert(s).second) throw std::invalid_argument("sources must be distinct");
        if (s == v0_) throw std::invalid_argument("v0 may not be a source");
    }

    std::uint32_t degree_parity = 0;
    for (int i = 0; i < graph_.edge_count(); ++i) degree_parity ^= graph_.edge_parity_mask(i);
    target_boundary_ = graph_.mask_of(sources_) ^ graph_.vertex_mask(u0_) ^ graph_.vertex_mask(v0_);
    admissible_ = (degree_parity == target_boundary_);
}

MultiGraph MultiGraph::with_edge(int label, int u, int v) const {
    auto edges = graph_.edges();
    edges.push_back({label, u, v});
    return MultiGraph(graph_.vertices(), std::move(edges), u0_, v0_, sources_);
}

MultiGraph MultiGraph::without_edge(int label) const {
    auto edges = graph_.edges();
    const int idx = graph_.edge_index_of_label(label);
    edges.erase(edges.begin() + idx);
    return MultiGraph(graph_.vertices(), std::move(edges), u0_, v0_, sources_);
}

std::string MultiGraph::to_text() const {
    std::ostringstream os;
    os << "v";
    for (int v : graph_.vertices()) os << ' ' << v;
    os << "\nsource";
    for (int s : sources_) os << ' ' << s;
    os << "\nmarked " << u0_ << ' ' << v0_ << '\n';
    for (const auto& e : graph_.edges()) os << "e " << e.label << ' ' << e.u << ' ' << e.v << '\n';
    return os.str();
}

}  // namespace isinglab
