#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "isinglab/graph.hpp"
#include "isinglab/partitions.hpp"
#include "isinglab/rational.hpp"

namespace isinglab {

// Enumeration guards; correlations are exact only at desk scale.
inline constexpr int kMaxCorrelationEdges = 14;
inline constexpr int kMaxSpinEnumVertices = 16;

// All even-subgraph sums of one (graph, t) pair, keyed by boundary mask:
//   sums[A] = sum over S subseteq E with boundary(S) = A of prod_{e in S} t_e.
// Every correlation is then a ratio of two table entries. T is an exact
// rational for zero-tolerance work or double for float-facing checks.
template <class T>
class CorrelationTable {
  public:
    CorrelationTable(BaseGraph g, std::vector<T> t) : g_(std::move(g)), t_(std::move(t)) {
        if (static_cast<int>(t_.size()) != g_.edge_count())
            throw std::invalid_argument("one t value per edge required");
        if (g_.edge_count() > kMaxCorrelationEdges)
            throw std::invalid_argument("edge count exceeds enumeration cap");
        if (g_.vertex_count() > kMaxSpinEnumVertices)
            throw std::invalid_argument("vertex count exceeds enumeration cap");
        sums_.assign(std::size_t(1) << g_.vertex_count(), T(0));
        T one(1);
        accumulate(0, 0u, one);
    }

    const BaseGraph& graph() const { return g_; }
    const std::vector<T>& couplings() const { return t_; }

    T correlation_mask(std::uint32_t A) const { return sums_[A] / sums_[0]; }

    // sigma products square away: a vertex multiset reduces to its odd-count
    // members before lookup.
    T correlation(const std::vector<int>& vertex_ids) const {
        return correlation_mask(g_.mask_of(vertex_ids));
    }

  private:
    void accumulate(int edge, std::uint32_t bnd, T& prod) {
        if (edge == g_.edge_count()) {
            sums_[bnd] += prod;
            return;
        }
        accumulate(edge + 1, bnd, prod);
        T with = prod * t_[edge];
        accumulate(edge + 1, bnd ^ g_.edge_parity_mask(edge), with);
    }

    BaseGraph g_;
    std::vector<T> t_;
    std::vector<T> sums_;
};

// <sigma_A> by the even-subgraph expansion in t = tanh J.
BigRational correlation(const BaseGraph& g, const std::vector<BigRational>& t,
                        const std::vector<int>& A);

// Independent oracle: 2^{|V|} spin enumeration with weights prod (1 + t s s).
BigRational correlation_oracle(const BaseGraph& g, const std::vector<BigRational>& t,
                               const std::vector<int>& A);

template <class T>
struct UrsellValue {
    T value;
    int order;
};

// u_r over index positions: repeated vertices are legal and cancel pairwise
// inside blocks.
template <class T>
UrsellValue<T> ursell(const CorrelationTable<T>& table, const std::vector<int>& spins);

// d u_{2k} / d J_{u0 v0} through the covariance expansion; (u0, v0) must be an
// edge of the table's graph. Exact in t, no chain rule through tanh.
template <class T>
T ursell_derivative(const CorrelationTable<T>& table, const std::vector<int>& spins, int u0, int v0);

// r-th cumulant of X = sum_u lambda_u sigma_u from exact moments.
BigRational cumulant(const BaseGraph& g, const std::vector<BigRational>& t,
                     const std::map<int, BigRational>& lambda, int r);

// u_{2k} = -sum_{A: 1 in A, 2 notin A} u_{|A|} u_{2k-|A|} when the first two
// arguments coincide and k >= 2. Returns whether the identity holds.
template <class T>
bool reduction_check(const CorrelationTable<T>& table, const std::vector<int>& spins);

struct GadgetResult {
    BaseGraph graph;  // e0 replaced by u0-w and w-v0
    int w_vertex;
    int label_u0w;
    int label_wv0;
    double beta_hat;  // cosh(2 beta_hat) = exp(2 beta)
};

GadgetResult gadget_split(const BaseGraph& g, int e0_label, double beta);

// <sigma_A> with Boltzmann weights exp(sum J s s), double precision.
double correlation_boltzmann(const BaseGraph& g, const std::vector<double>& J,
                             const std::vector<int>& A);

// ---- template bodies ----

template <class T>
UrsellValue<T> ursell(const CorrelationTable<T>& table, const std::vector<int>& spins) {
    const int r = static_cast<int>(spins.size());
    if (r < 1) throw std::invalid_argument("need at least one spin");
    std::vector<std::uint32_t> pos_mask(r);
    for (int i = 0; i < r; ++i) pos_mask[i] = table.graph().vertex_mask(spins[i]);

    T total(0);
    for_each_partition(r, [&](const Blocks& blocks) {
        T term(static_cast<long>(partition_sign_weight(static_cast<int>(blocks.size()))));
        for (const auto& b : blocks) {
            std::uint32_t m = 0;
            for (int pos : b) m ^= pos_mask[pos];
            term *= table.correlation_mask(m);
            if (term == T(0)) break;
        }
        total += term;
    });
    return {total, r};
}

template <class T>
T ursell_derivative(const CorrelationTable<T>& table, const std::vector<int>& spins, int u0,
                    int v0) {
    const int r = static_cast<int>(spins.size());
    if (r < 1 || r % 2 != 0) throw std::invalid_argument("need an even, nonempty spin list");
    bool have_edge = false;
    for (const auto& e : table.graph().edges())
        if ((e.u == u0 && e.v == v0) || (e.u == v0 && e.v == u0)) have_edge = true;
    if (!have_edge) throw std::invalid_argument("u0 v0 is not an edge of the graph");

    std::vector<std::uint32_t> pos_mask(r);
    for (int i = 0; i < r; ++i) pos_mask[i] = table.graph().vertex_mask(spins[i]);
    const std::uint32_t uv = table.graph().vertex_mask(u0) ^ table.graph().vertex_mask(v0);
    const T corr_uv = table.correlation_mask(uv);

    T total(0);
    for_each_partition(r, [&](const Blocks& blocks) {
        const int nb = static_cast<int>(blocks.size());
        std::vector<T> plain(nb), twisted(nb);
        for (int b = 0; b < nb; ++b) {
            std::uint32_t m = 0;
            for (int pos : blocks[b]) m ^= pos_mask[pos];
            plain[b] = table.correlation_mask(m);
            twisted[b] = table.correlation_mask(m ^ uv);
        }
        T sum_q(0);
        for (int q = 0; q < nb; ++q) {
            T term = twisted[q] - plain[q] * corr_uv;
            if (term == T(0)) continue;
            for (int b = 0; b < nb && term != T(0); ++b)
                if (b != q) term *= plain[b];
            sum_q += term;
        }
        total += T(static_cast<long>(partition_sign_weight(nb))) * sum_q;
    });
    return total;
}

template <class T>
bool reduction_check(const CorrelationTable<T>& table, const std::vector<int>& spins) {
    const int r = static_cast<int>(spins.size());
    if (r < 4 || r % 2 != 0)
        throw std::invalid_argument("reduction identity needs 2k spins with k >= 2");
    if (spins[0] != spins[1])
        throw std::invalid_argument("reduction identity needs spins[0] == spins[1]");

    const T lhs = ursell(table, spins).value;
    T rhs(0);
    // A runs over position subsets with 0 in A, 1 not in A.
    const int free = r - 2;
    for (std::uint32_t pick = 0; pick < (1u << free); ++pick) {
        std::vector<int> in = {spins[0]}, out = {spins[1]};
        for (int i = 0; i < free; ++i)
            ((pick >> i) & 1u ? in : out).push_back(spins[i + 2]);
        if (in.size() % 2 != 0) continue;  // odd-order Ursell functions vanish
        rhs -= ursell(table, in).value * ursell(table, out).value;
    }
    return lhs == rhs;
}

}  // namespace isinglab
