#pragma once

#include <functional>
#include <vector>

#include "isinglab/graph.hpp"
#include "isinglab/rational.hpp"

namespace isinglab {

// Multivariate power series in the per-edge coupling variables, truncated to a
// per-variable exponent cap. Coefficients live in a dense mixed-radix table;
// every ring operation is exact within the cap (the discarded monomials form
// an ideal).
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<int> caps);
    static TruncatedSeries constant(const std::vector<int>& caps, const BigRational& value);

    const std::vector<int>& caps() const { return caps_; }
    int variable_count() const { return static_cast<int>(caps_.size()); }

    const BigRational& coefficient(const std::vector<int>& expo) const;
    void set_coefficient(const std::vector<int>& expo, const BigRational& value);

    void for_each_term(const std::function<void(const std::vector<int>&, const BigRational&)>& fn) const;

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    // Requires rhs constant term != 0.
    TruncatedSeries operator/(const TruncatedSeries& rhs) const;
    TruncatedSeries pow(int exponent) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const BigRational& scalar);

    // Formal d/dJ_var; the result's cap in `var` drops by one (to zero cap if
    // it already was zero).
    TruncatedSeries derivative(int var) const;

    // Drops coefficients above the (componentwise smaller or equal) new caps.
    TruncatedSeries truncated_to(const std::vector<int>& caps) const;

    bool operator==(const TruncatedSeries& rhs) const;

  private:
    std::size_t flat(const std::vector<int>& expo) const;
    std::vector<int> unflat(std::size_t index) const;

    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<BigRational> coef_;
};

// sum over currents n <= caps with boundary(n) = A of prod_e J_e^{n_e} / n_e!.
// A = {} gives the normalized partition function Z_G / 2^{|V|}.
TruncatedSeries source_series(const BaseGraph& g, const std::vector<int>& A,
                              const std::vector<int>& caps);

// Coefficient test tying the partition engine to the Ursell machinery: the
// J-Taylor coefficient at multi-index m of (Z_G/2^{|V|})^{k+1} d u_{2k}/dJ_{u0v0}
// must equal r_current(m) / prod_e m_e!.
bool lemma_u2krcr_check(const BaseGraph& g, const std::vector<int>& sources, int u0, int v0,
                        const Current& m);

}  // namespace isinglab
