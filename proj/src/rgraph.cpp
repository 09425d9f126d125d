#include "isinglab/rgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isinglab {

RestrictionSet::RestrictionSet(std::vector<Restriction> items) : items_(std::move(items)) {
    for (const auto& r : items_)
        if (r.label_a == r.label_b)
            throw std::invalid_argument("restriction pair must name two distinct edges (label " +
                                        std::to_string(r.label_a) + " twice)");
}

std::string GraphPartition::to_line() const {
    std::ostringstream os;
    os << "n=" << n << " blocks=";
    for (size_t b = 0; b < blocks.size(); ++b) {
        os << (b ? "|" : "") << (static_cast<int>(b) == q_index ? "Q:" : "");
        for (size_t i = 0; i < blocks[b].size(); ++i) os << (i ? "," : "") << blocks[b][i];
    }
    for (size_t s = 0; s < slot_edges.size(); ++s) {
        os << " E" << (s + 1) << "={";
        for (size_t i = 0; i < slot_edges[s].size(); ++i) os << (i ? "," : "") << slot_edges[s][i];
        os << "}";
    }
    return os.str();
}

namespace {

struct SlotPlan {
    Blocks blocks;
    int q_index;
    std::vector<std::uint32_t> targets;  // per slot, boundary the slot must reach
    int q_slot;                          // index of the Q slot (== n-1)
    int first_tail;                      // index of the first sourceless slot (== n)
};

// Partition order: non-Q blocks by least element occupy slots 0..n-2, the Q
// subgraph is slot n-1, tails fill the rest.
SlotPlan make_plan(const MultiGraph& g, const Blocks& blocks, int q_index, int slot_count) {
    SlotPlan plan;
    plan.blocks = blocks;
    plan.q_index = q_index;
    const int n = static_cast<int>(blocks.size());
    plan.q_slot = n - 1;
    plan.first_tail = n;
    plan.targets.assign(slot_count, 0);
    int s = 0;
    for (int b = 0; b < n; ++b) {
        if (b == q_index) continue;
        plan.targets[s++] = g.graph().mask_of(blocks[b]);
    }
    plan.targets[plan.q_slot] = g.graph().mask_of(blocks[q_index]) ^
                                g.graph().vertex_mask(g.u0()) ^ g.graph().vertex_mask(g.v0());
    return plan;
}

struct EngineContext {
    const MultiGraph& g;
    int slot_count;
    // last edge index touching each dense vertex; -1 when isolated
    std::vector<int> last_touch;
    // restrictions translated to edge indices, keyed by the later index
    struct Pair {
        int earlier;
        RestrictionMode mode;
    };
    std::vector<std::vector<Pair>> checks_at;
};

EngineContext make_context(const MultiGraph& g, const RestrictionSet& rs) {
    const auto& base = g.graph();
    EngineContext ctx{g, g.k() + 1, std::vector<int>(base.vertex_count(), -1),
                      std::vector<std::vector<EngineContext::Pair>>(base.edge_count())};
    for (int i = 0; i < base.edge_count(); ++i) {
        ctx.last_touch[base.vertex_index(base.edges()[i].u)] = i;
        ctx.last_touch[base.vertex_index(base.edges()[i].v)] = i;
    }
    for (const auto& r : rs.items()) {
        int a = base.edge_index_of_label(r.label_a);
        int b = base.edge_index_of_label(r.label_b);
        if (a > b) std::swap(a, b);
        ctx.checks_at[b].push_back({a, r.mode});
    }
    return ctx;
}

// Backtracking over edge -> slot assignments for one (blocks, Q) choice.
// Prunes on vertex parity as soon as a vertex has no unassigned edges left.
void assign_edges(const EngineContext& ctx, const SlotPlan& plan,
                  const std::function<void(const std::vector<int>&)>& emit) {
    const auto& base = ctx.g.graph();
    const int edge_count = base.edge_count();
    std::vector<int> slot_of(edge_count, -1);
    std::vector<std::uint32_t> parity(ctx.slot_count, 0);

    // A vertex never touched by any edge must not be demanded by any target.
    for (int vi = 0; vi < base.vertex_count(); ++vi)
        if (ctx.last_touch[vi] < 0)
            for (int s = 0; s < ctx.slot_count; ++s)
                if (plan.targets[s] & (1u << vi)) return;

    std::function<void(int)> rec = [&](int e) {
        if (e == edge_count) {
            std::vector<int> joined;
            for (int i = 0; i < edge_count; ++i)
                if (slot_of[i] == plan.q_slot || slot_of[i] == plan.first_tail) joined.push_back(i);
            if (connected_in_edges(base, ctx.g.u0(), ctx.g.v0(), joined)) return;
            emit(slot_of);
            return;
        }
        const std::uint32_t flip = base.edge_parity_mask(e);
        for (int s = 0; s < ctx.slot_count; ++s) {
            bool ok = true;
            for (const auto& chk : ctx.checks_at[e]) {
                const bool same = (slot_of[chk.earlier] == s);
                if (same != (chk.mode == RestrictionMode::Together)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            slot_of[e] = s;
            parity[s] ^= flip;
            // settle parities of vertices whose incident edges are all placed
            ok = true;
            for (int end = 0; end < 2 && ok; ++end) {
                const auto& edge = base.edges()[e];
                const int vid = end == 0 ? edge.u : edge.v;
                if (end == 1 && edge.u == edge.v) break;
                const int vi = base.vertex_index(vid);
                if (ctx.last_touch[vi] != e) continue;
                const std::uint32_t bit = 1u << vi;
                for (int t = 0; t < ctx.slot_count; ++t)
                    if ((parity[t] & bit) != (plan.targets[t] & bit)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) rec(e + 1);
            parity[s] ^= flip;
            slot_of[e] = -1;
        }
    };
    rec(0);
}

}  // namespace

void enumerate_partitions(const MultiGraph& g, const RestrictionSet& rs,
                          const std::function<void(const GraphPartition&)>& fn) {
    if (!g.admissible()) return;
    const EngineContext ctx = make_context(g, rs);
    for_each_even_partition(g.sources(), [&](const Blocks& blocks) {
        for (int q = 0; q < static_cast<int>(blocks.size()); ++q) {
            const SlotPlan plan = make_plan(g, blocks, q, ctx.slot_count);
            assign_edges(ctx, plan, [&](const std::vector<int>& slot_of) {
                GraphPartition p;
                p.blocks = blocks;
                p.q_index = q;
                p.n = static_cast<int>(blocks.size());
                p.slot_edges.assign(ctx.slot_count, {});
                for (int e = 0; e < g.graph().edge_count(); ++e)
                    p.slot_edges[slot_of[e]].push_back(g.graph().edges()[e].label);
                fn(p);
            });
        }
    });
}

RGraphResult r_graph(const MultiGraph& g, const RestrictionSet& rs) {
    RGraphResult res;
    enumerate_partitions(g, rs, [&](const GraphPartition& p) {
        res.r += p.sign_weight();
        ++res.partitions;
    });
    return res;
}

long long r_current(const BaseGraph& base, const Current& m, const std::vector<int>& sources,
                    int u0, int v0) {
    if (u0 == v0) throw std::invalid_argument("marked pair must be distinct");
    {
        std::set<int> seen;
        for (int s : sources) {
            base.vertex_index(s);
            if (s == v0) throw std::invalid_argument("v0 may not be a source");
            if (!seen.insert(s).second) throw std::invalid_argument("sources must be distinct");
        }
        if (sources.empty() || sources.size() % 2 != 0)
            throw std::invalid_argument("need a nonempty even list of sources");
    }
    const int k = static_cast<int>(sources.size()) / 2;
    const int slot_count = k + 1;
    const std::uint32_t target_total =
        base.mask_of(sources) ^ base.vertex_mask(u0) ^ base.vertex_mask(v0);
    if (boundary_mask(base, m) != target_total) return 0;  // empty sum

    const int edge_count = base.edge_count();
    std::vector<int> last_touch(base.vertex_count(), -1);
    for (int i = 0; i < edge_count; ++i) {
        last_touch[base.vertex_index(base.edges()[i].u)] = i;
        last_touch[base.vertex_index(base.edges()[i].v)] = i;
    }

    long long total = 0;
    for_each_even_partition(sources, [&](const Blocks& blocks) {
        const int n = static_cast<int>(blocks.size());
        for (int q = 0; q < n; ++q) {
            // Fixed bijection: non-Q blocks in canonical order fill the first
            // n-1 slots, slot n-1 carries Q ^ {u0,v0}, the rest are sourceless.
            std::vector<std::uint32_t> targets(slot_count, 0);
            int s = 0;
            for (int b = 0; b < n; ++b)
                if (b != q) targets[s++] = base.mask_of(blocks[b]);
            targets[n - 1] =
                base.mask_of(blocks[q]) ^ base.vertex_mask(u0) ^ base.vertex_mask(v0);

            bool feasible = true;
            for (int vi = 0; vi < base.vertex_count() && feasible; ++vi)
                if (last_touch[vi] < 0)
                    for (int t = 0; t < slot_count; ++t)
                        if (targets[t] & (1u << vi)) {
                            feasible = false;
                            break;
                        }
            if (!feasible) continue;

            std::vector<std::vector<int>> counts(slot_count, std::vector<int>(edge_count, 0));
            std::vector<std::uint32_t> parity(slot_count, 0);
            long long sub_total = 0;

            // Distribute each edge's m_e units over the slots; the running
            // weight accumulates prod_e m_e! / prod_s counts[s][e]!.
            std::function<void(int, long long)> per_edge = [&](int e, long long weight) {
                if (e == edge_count) {
                    std::vector<int> joined;
                    for (int i = 0; i < edge_count; ++i)
                        if (counts[n - 1][i] + counts[n][i] > 0) joined.push_back(i);
                    if (!connected_in_edges(base, u0, v0, joined)) sub_total += weight;
                    return;
                }
                const std::uint32_t flip = base.edge_parity_mask(e);
                std::function<void(int, int, long long)> per_slot = [&](int slot, int left,
                                                                        long long w) {
                    if (slot == slot_count - 1) {
                        counts[slot][e] = left;
                        if (left % 2 == 1) parity[slot] ^= flip;
                        bool ok = true;
                        const auto& edge = base.edges()[e];
                        for (int end = 0; end < 2 && ok; ++end) {
                            const int vid = end == 0 ? edge.u : edge.v;
                            if (end == 1 && edge.u == edge.v) break;
                            const int vi = base.vertex_index(vid);
                            if (last_touch[vi] != e) continue;
                            const std::uint32_t bit = 1u << vi;
                            for (int t = 0; t < slot_count; ++t)
                                if ((parity[t] & bit) != (targets[t] & bit)) {
                                    ok = false;
                                    break;
                                }
                        }
                        if (ok) per_edge(e + 1, w);
                        if (left % 2 == 1) parity[slot] ^= flip;
                        counts[slot][e] = 0;
                        return;
                    }
                    for (int c = 0; c <= left; ++c) {
                        counts[slot][e] = c;
                        if (c % 2 == 1) parity[slot] ^= flip;
                        per_slot(slot + 1, left - c, w * binomial(left, c).get_si());
                        if (c % 2 == 1) parity[slot] ^= flip;
                        counts[slot][e] = 0;
                    }
                };
                per_slot(0, m.values[e], weight);
            };
            per_edge(0, 1);
            total += partition_sign_weight(n) * sub_total;
        }
    });
    return total;
}

long long i_p(int p) {
    if (p < 1) throw std::invalid_argument("i_p requires p >= 1");
    std::vector<int> items(2 * p);
    for (int i = 0; i < 2 * p; ++i) items[i] = i;
    long long total = 0;
    for_each_even_partition(items, [&](const Blocks& blocks) {
        for (int q = 0; q < p; ++q) {
            for (const auto& b : blocks) {
                const bool has_first = std::find(b.begin(), b.end(), 2 * q) != b.end();
                if (!has_first) continue;
                if (std::find(b.begin(), b.end(), 2 * q + 1) == b.end()) return;
                break;
            }
        }
        total += partition_sign_weight(static_cast<int>(blocks.size()));
    });
    return total;
}

long long n_l(int L, int boxes) {
    if (L < 0 || boxes < 0) throw std::invalid_argument("n_l requires nonnegative arguments");
    if (L == 0) return 1;
    if (boxes == 0) return 0;
    const int objects = 2 * L;
    std::vector<int> occupancy(boxes, 0);
    long long count = 0;
    std::function<void(int)> rec = [&](int obj) {
        if (obj == objects) {
            for (int o : occupancy)
                if (o % 2 != 0) return;
            ++count;
            return;
        }
        for (int b = 0; b < boxes; ++b) {
            ++occupancy[b];
            rec(obj + 1);
            --occupancy[b];
        }
    };
    rec(0);
    return count;
}

MultiGraph make_special(const SpecialGraphSpec& spec) {
    const int k = spec.k;
    const int L = spec.L;
    if (L < 0) throw std::invalid_argument("L must be nonnegative");
    if (spec.family == SpecialFamily::H && k < 2)
        throw std::invalid_argument("family H requires k >= 2");
    if (spec.family != SpecialFamily::H && k < 1)
        throw std::invalid_argument("families KI/KII require k >= 1");

    std::vector<int> sources(2 * k);
    for (int i = 0; i < 2 * k; ++i) sources[i] = i + 1;
    std::vector<int> vertices = sources;
    std::vector<LabeledEdge> edges;
    int u0 = 0, v0 = 0, label = 0;
    switch (spec.family) {
        case SpecialFamily::H:
            u0 = 1;
            v0 = 2 * k + 1;
            vertices.push_back(v0);
            edges.push_back({label++, 1, 2});
            edges.push_back({label++, 1, 3});
            edges.push_back({label++, 4, v0});
            for (int q = 3; q <= k; ++q) edges.push_back({label++, 2 * q - 1, 2 * q});
            break;
        case SpecialFamily::KI:
            u0 = 1;
            v0 = 2 * k + 1;
            vertices.push_back(v0);
            edges.push_back({label++, 2, v0});
            for (int q = 2; q <= k; ++q) edges.push_back({label++, 2 * q - 1, 2 * q});
            break;
        case SpecialFamily::KII:
            u0 = 2 * k + 1;
            v0 = 2 * k + 2;
            vertices.push_back(u0);
            vertices.push_back(v0);
            edges.push_back({label++, 1, u0});
            edges.push_back({label++, 2, v0});
            for (int q = 2; q <= k; ++q) edges.push_back({label++, 2 * q - 1, 2 * q});
            break;
    }
    for (int i = 0; i < 2 * L; ++i) edges.push_back({label++, u0, v0});
    return MultiGraph(std::move(vertices), std::move(edges), u0, v0, std::move(sources));
}

MultiGraph reduce_self_loop(const MultiGraph& g, int loop_label) {
    const int idx = g.graph().edge_index_of_label(loop_label);
    if (!g.graph().edges()[idx].is_loop())
        throw std::invalid_argument("label " + std::to_string(loop_label) + " is not a self-loop");
    return g.without_edge(loop_label);
}

MultiGraph contract_pair(const MultiGraph& g, int label_a, int label_b, int at_vertex) {
    if (label_a == label_b) throw std::invalid_argument("contract_pair needs two distinct edges");
    const auto& base = g.graph();
    const LabeledEdge ea = base.edges()[base.edge_index_of_label(label_a)];
    const LabeledEdge eb = base.edges()[base.edge_index_of_label(label_b)];

    std::vector<int> shared;
    for (int cand : {ea.u, ea.v}) {
        if (cand != eb.u && cand != eb.v) continue;
        if (std::find(shared.begin(), shared.end(), cand) == shared.end()) shared.push_back(cand);
    }
    std::sort(shared.begin(), shared.end());
    shared.erase(std::remove_if(shared.begin(), shared.end(),
                                [&](int v) { return v == g.u0() || v == g.v0(); }),
                 shared.end());
    int v = -1;
    if (at_vertex >= 0) {
        if (std::find(shared.begin(), shared.end(), at_vertex) == shared.end())
            throw std::invalid_argument("edges do not share the requested unmarked vertex");
        v = at_vertex;
    } else {
        if (shared.empty())
            throw std::invalid_argument(
                "edges share no common vertex outside the marked pair");
        v = shared.front();
    }

    const int v1 = (ea.u == v) ? ea.v : ea.u;
    const int v2 = (eb.u == v) ? eb.v : eb.u;
    int fresh = 0;
    for (const auto& e : base.edges()) fresh = std::max(fresh, e.label + 1);

    auto edges = base.edges();
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const LabeledEdge& e) {
                                   return e.label == label_a || e.label == label_b;
                               }),
                edges.end());
    edges.push_back({fresh, v1, v2});
    return MultiGraph(base.vertices(), std::move(edges), g.u0(), g.v0(), g.sources());
}

namespace {

ScanReport scan_impl(const std::vector<std::pair<MultiGraph, RestrictionSet>>& gs) {
    ScanReport rep;
    for (const auto& [g, rs] : gs) {
        ++rep.instances;
        const long long r = r_graph(g, rs).r;
        const long long signed_r = (g.k() % 2 == 1) ? r : -r;
        if (signed_r < 0) {
            ++rep.violations;
            rep.failures.push_back("sign violation: R=" + std::to_string(r) +
                                   " k=" + std::to_string(g.k()) + "\n" + g.to_text());
        }
    }
    return rep;
}

}  // namespace

ScanReport sign_scan(const std::vector<MultiGraph>& gs) {
    std::vector<std::pair<MultiGraph, RestrictionSet>> tagged;
    tagged.reserve(gs.size());
    for (const auto& g : gs) tagged.emplace_back(g, RestrictionSet());
    return scan_impl(tagged);
}

ScanReport sign_scan_restricted(const std::vector<std::pair<MultiGraph, RestrictionSet>>& gs) {
    for (const auto& [g, rs] : gs)
        for (const auto& item : rs.items())
            for (int label : {item.label_a, item.label_b}) {
                const auto& e = g.graph().edges()[g.graph().edge_index_of_label(label)];
                if (e.is_loop()) throw std::invalid_argument("restricted scan pair names a self-loop");
                const bool marked_edge = (e.u == g.u0() && e.v == g.v0()) ||
                                         (e.u == g.v0() && e.v == g.u0());
                if (marked_edge)
                    throw std::invalid_argument("restricted scan pair names a u0-v0 edge");
            }
    return scan_impl(gs);
}

}  // namespace isinglab
