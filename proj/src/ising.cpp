#include "isinglab/ising.hpp"

#include <cmath>

namespace isinglab {

BigRational correlation(const BaseGraph& g, const std::vector<BigRational>& t,
                        const std::vector<int>& A) {
    CorrelationTable<BigRational> table(g, t);
    return table.correlation(A);
}

BigRational correlation_oracle(const BaseGraph& g, const std::vector<BigRational>& t,
                               const std::vector<int>& A) {
    if (g.vertex_count() > kMaxSpinEnumVertices)
        throw std::invalid_argument("vertex count exceeds enumeration cap");
    if (static_cast<int>(t.size()) != g.edge_count())
        throw std::invalid_argument("one t value per edge required");
    const std::uint32_t a_mask = g.mask_of(A);
    const int n = g.vertex_count();
    BigRational num = 0, den = 0;
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        BigRational w = 1;
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            const int su = (cfg >> g.vertex_index(e.u)) & 1u ? -1 : 1;
            const int sv = (cfg >> g.vertex_index(e.v)) & 1u ? -1 : 1;
            w *= (su * sv == 1) ? BigRational(1) + t[i] : BigRational(1) - t[i];
        }
        den += w;
        const int sa = __builtin_popcount(cfg & a_mask) % 2 == 1 ? -1 : 1;
        num += sa == 1 ? w : -w;
    }
    return num / den;
}

BigRational cumulant(const BaseGraph& g, const std::vector<BigRational>& t,
                     const std::map<int, BigRational>& lambda, int r) {
    if (r < 1) throw std::invalid_argument("cumulant order must be >= 1");
    if (g.vertex_count() > kMaxSpinEnumVertices)
        throw std::invalid_argument("vertex count exceeds enumeration cap");
    const int n = g.vertex_count();
    std::vector<BigRational> lam(n, BigRational(0));
    for (const auto& [vid, value] : lambda) lam[g.vertex_index(vid)] = value;

    // Raw moments <X^j> for j = 0..r over the pair-interaction measure.
    std::vector<BigRational> weighted(r + 1, BigRational(0));
    BigRational total_weight = 0;
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        BigRational w = 1;
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            const int su = (cfg >> g.vertex_index(e.u)) & 1u ? -1 : 1;
            const int sv = (cfg >> g.vertex_index(e.v)) & 1u ? -1 : 1;
            w *= (su * sv == 1) ? BigRational(1) + t[i] : BigRational(1) - t[i];
        }
        BigRational x = 0;
        for (int vi = 0; vi < n; ++vi) x += ((cfg >> vi) & 1u) ? -lam[vi] : lam[vi];
        BigRational pw = w;
        weighted[0] += w;
        for (int j = 1; j <= r; ++j) {
            pw *= x;
            weighted[j] += pw;
        }
        total_weight += w;
    }
    std::vector<BigRational> moment(r + 1);
    for (int j = 0; j <= r; ++j) moment[j] = weighted[j] / total_weight;

    // kappa_j = m_j - sum_{i<j} C(j-1, i-1) kappa_i m_{j-i}
    std::vector<BigRational> kappa(r + 1, BigRational(0));
    for (int j = 1; j <= r; ++j) {
        kappa[j] = moment[j];
        for (int i = 1; i < j; ++i)
            kappa[j] -= BigRational(binomial(j - 1, i - 1)) * kappa[i] * moment[j - i];
    }
    return kappa[r];
}

GadgetResult gadget_split(const BaseGraph& g, int e0_label, double beta) {
    if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
    const int idx = g.edge_index_of_label(e0_label);
    const LabeledEdge e0 = g.edges()[idx];
    if (e0.is_loop()) throw std::invalid_argument("cannot split a self-loop");

    int w_id = 0;
    for (int v : g.vertices()) w_id = std::max(w_id, v + 1);
    int fresh = 0;
    for (const auto& e : g.edges()) fresh = std::max(fresh, e.label + 1);

    auto vertices = g.vertices();
    vertices.push_back(w_id);
    auto edges = g.edges();
    edges.erase(edges.begin() + idx);
    edges.push_back({fresh, e0.u, w_id});
    edges.push_back({fresh + 1, w_id, e0.v});

    // cosh(2 b) = exp(2 beta)  =>  b = acosh(exp(2 beta)) / 2
    const double e2b = std::exp(2.0 * beta);
    const double beta_hat = 0.5 * std::log(e2b + std::sqrt(e2b * e2b - 1.0));
    return {BaseGraph(std::move(vertices), std::move(edges)), w_id, fresh, fresh + 1, beta_hat};
}

double correlation_boltzmann(const BaseGraph& g, const std::vector<double>& J,
                             const std::vector<int>& A) {
    if (g.vertex_count() > kMaxSpinEnumVertices)
        throw std::invalid_argument("vertex count exceeds enumeration cap");
    const std::uint32_t a_mask = g.mask_of(A);
    const int n = g.vertex_count();
    double num = 0, den = 0;
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        double energy = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            const int su = (cfg >> g.vertex_index(e.u)) & 1u ? -1 : 1;
            const int sv = (cfg >> g.vertex_index(e.v)) & 1u ? -1 : 1;
            energy += J[i] * su * sv;
        }
        const double w = std::exp(energy);
        den += w;
        num += (__builtin_popcount(cfg & a_mask) % 2 == 1) ? -w : w;
    }
    return num / den;
}

}  // namespace isinglab
