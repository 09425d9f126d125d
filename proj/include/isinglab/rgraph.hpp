#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isinglab/multigraph.hpp"
#include "isinglab/partitions.hpp"

namespace isinglab {

enum class RestrictionMode { Separate, Together };

// A pair of edge labels constrained to lie in different slots (Separate) or
// the same slot (Together).
struct Restriction {
    int label_a;
    int label_b;
    RestrictionMode mode;
};

class RestrictionSet {
  public:
    RestrictionSet() = default;
    explicit RestrictionSet(std::vector<Restriction> items);

    const std::vector<Restriction>& items() const { return items_; }
    bool empty() const { return items_.empty(); }

  private:
    std::vector<Restriction> items_;
};

// One distinct partition of a multigraph into k+1 subgraphs. slot_edges lists
// edge labels per subgraph in partition order: the non-Q blocks (by least
// element), then the Q subgraph, then the ordered sourceless tail.
struct GraphPartition {
    Blocks blocks;   // even partition of the sources, blocks by least element
    int q_index;     // index into blocks of the distinguished block Q
    int n;           // = blocks.size()
    std::vector<std::vector<int>> slot_edges;

    long long sign_weight() const { return partition_sign_weight(n); }
    std::string to_line() const;
};

// Streams every distinct partition compatible with the restrictions, in a
// stable order. Non-admissible inputs yield nothing.
void enumerate_partitions(const MultiGraph& g, const RestrictionSet& rs,
                          const std::function<void(const GraphPartition&)>& fn);

struct RGraphResult {
    long long r = 0;
    long long partitions = 0;
};

// R(G; restrictions) = sum over distinct partitions of (-1)^{n-1} (n-1)!.
RGraphResult r_graph(const MultiGraph& g, const RestrictionSet& rs = RestrictionSet());

// Same quantity evaluated from a current on a base graph by enumerating
// multinomial-weighted current tuples; (u0, v0) given as vertices.
long long r_current(const BaseGraph& base, const Current& m, const std::vector<int>& sources,
                    int u0, int v0);

// Signed sum over even partitions of {1..2p} in which 2q-1 and 2q share a
// block. Throws for p < 1.
long long i_p(int p);

// Number of ways to place 2L labeled objects into `boxes` labeled boxes with
// every box receiving an even count; n_l(0, b) = 1.
long long n_l(int L, int boxes);

enum class SpecialFamily { H, KI, KII };

struct SpecialGraphSpec {
    SpecialFamily family;
    int k;
    int L = 0;
};

// Degree-reduced host families. Sources are 1..2k; the H and KI families mark
// u0 = j1; KII adds u0, v0 as fresh non-source vertices. 2L parallel u0-v0
// edges are appended after the base edges.
MultiGraph make_special(const SpecialGraphSpec& spec);

// Deletes a self-loop; R(g) = (k+1) * R(result).
MultiGraph reduce_self_loop(const MultiGraph& g, int loop_label);

// Replaces e1 = v v1, e2 = v v2 (common vertex v not marked) by e12 = v1 v2
// with a fresh label; R(g) = R(result) + R(g; {e1,e2} Separate).
// `at_vertex` picks the shared vertex when the pair has two; -1 = choose the
// smallest eligible one.
MultiGraph contract_pair(const MultiGraph& g, int label_a, int label_b, int at_vertex = -1);

struct ScanReport {
    long instances = 0;
    long violations = 0;
    std::vector<std::string> failures;
};

// Asserts (-1)^{k-1} R >= 0 over the stream; restricted form requires each
// pair to avoid u0-v0 edges and self-loops.
ScanReport sign_scan(const std::vector<MultiGraph>& gs);
ScanReport sign_scan_restricted(const std::vector<std::pair<MultiGraph, RestrictionSet>>& gs);

}  // namespace isinglab
