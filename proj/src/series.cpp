#include "isinglab/series.hpp"

#include <stdexcept>

#include "isinglab/partitions.hpp"
#include "isinglab/rgraph.hpp"

namespace isinglab {

TruncatedSeries::TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    std::size_t size = 1;
    strides_.resize(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (caps_[i] < 0) throw std::invalid_argument("negative cap");
        strides_[i] = size;
        size *= static_cast<std::size_t>(caps_[i] + 1);
    }
    if (size > (1u << 22)) throw std::invalid_argument("series cap too large");
    coef_.assign(size, BigRational(0));
}

TruncatedSeries TruncatedSeries::constant(const std::vector<int>& caps, const BigRational& value) {
    TruncatedSeries s(caps);
    s.coef_[0] = value;
    return s;
}

std::size_t TruncatedSeries::flat(const std::vector<int>& expo) const {
    if (expo.size() != caps_.size()) throw std::invalid_argument("exponent arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] < 0 || expo[i] > caps_[i]) throw std::out_of_range("exponent outside cap");
        idx += strides_[i] * static_cast<std::size_t>(expo[i]);
    }
    return idx;
}

std::vector<int> TruncatedSeries::unflat(std::size_t index) const {
    std::vector<int> expo(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        expo[i] = static_cast<int>(index % static_cast<std::size_t>(caps_[i] + 1));
        index /= static_cast<std::size_t>(caps_[i] + 1);
    }
    return expo;
}

const BigRational& TruncatedSeries::coefficient(const std::vector<int>& expo) const {
    return coef_[flat(expo)];
}

void TruncatedSeries::set_coefficient(const std::vector<int>& expo, const BigRational& value) {
    coef_[flat(expo)] = value;
}

void TruncatedSeries::for_each_term(
    const std::function<void(const std::vector<int>&, const BigRational&)>& fn) const {
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0) fn(unflat(i), coef_[i]);
}

namespace {
void require_same_caps(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.caps() != b.caps()) throw std::invalid_argument("series cap mismatch");
}
}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    TruncatedSeries out = *this;
    out += rhs;
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    TruncatedSeries out = *this;
    out -= rhs;
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_caps(*this, rhs);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += rhs.coef_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_caps(*this, rhs);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& scalar) {
    for (auto& c : coef_) c *= scalar;
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    require_same_caps(*this, rhs);
    TruncatedSeries out(caps_);
    for (std::size_t ia = 0; ia < coef_.size(); ++ia) {
        if (coef_[ia] == 0) continue;
        const std::vector<int> ea = unflat(ia);
        for (std::size_t ib = 0; ib < rhs.coef_.size(); ++ib) {
            if (rhs.coef_[ib] == 0) continue;
            const std::vector<int> eb = rhs.unflat(ib);
            bool fits = true;
            for (std::size_t v = 0; v < caps_.size(); ++v)
                if (ea[v] + eb[v] > caps_[v]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            out.coef_[ia + ib] += coef_[ia] * rhs.coef_[ib];  // flat() is linear
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& rhs) const {
    require_same_caps(*this, rhs);
    if (rhs.coef_[0] == 0)
        throw std::invalid_argument("series division needs a nonzero constant term");
    TruncatedSeries out(caps_);
    // q[a] = (s[a] - sum_{0 < b <= a} d[b] q[a-b]) / d[0]; flat order respects
    // the componentwise order because strides are positive.
    for (std::size_t ia = 0; ia < coef_.size(); ++ia) {
        const std::vector<int> ea = unflat(ia);
        BigRational acc = coef_[ia];
        for (std::size_t ib = 1; ib <= ia; ++ib) {
            if (rhs.coef_[ib] == 0) continue;
            const std::vector<int> eb = rhs.unflat(ib);
            bool inside = true;
            for (std::size_t v = 0; v < caps_.size(); ++v)
                if (eb[v] > ea[v]) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            acc -= rhs.coef_[ib] * out.coef_[ia - ib];
        }
        out.coef_[ia] = acc / rhs.coef_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power");
    TruncatedSeries out = constant(caps_, 1);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
    if (var < 0 || var >= variable_count()) throw std::invalid_argument("bad variable index");
    std::vector<int> new_caps = caps_;
    new_caps[var] = std::max(0, new_caps[var] - 1);
    TruncatedSeries out(new_caps);
    for (std::size_t i = 0; i < out.coef_.size(); ++i) {
        std::vector<int> expo = out.unflat(i);
        ++expo[var];
        if (expo[var] > caps_[var]) continue;
        out.coef_[i] = coefficient(expo) * BigRational(expo[var]);
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated_to(const std::vector<int>& caps) const {
    for (std::size_t v = 0; v < caps_.size(); ++v)
        if (caps[v] > caps_[v]) throw std::invalid_argument("cannot extend caps");
    TruncatedSeries out(caps);
    for (std::size_t i = 0; i < out.coef_.size(); ++i) out.coef_[i] = coefficient(out.unflat(i));
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    return caps_ == rhs.caps_ && coef_ == rhs.coef_;
}

TruncatedSeries source_series(const BaseGraph& g, const std::vector<int>& A,
                              const std::vector<int>& caps) {
    if (static_cast<int>(caps.size()) != g.edge_count())
        throw std::invalid_argument("one cap per edge required");
    TruncatedSeries out(caps);
    const std::uint32_t target = g.mask_of(A);
    Current n;
    n.values.assign(caps.size(), 0);
    std::function<void(int, BigRational)> rec = [&](int e, BigRational inv_fact) {
        if (e == g.edge_count()) {
            if (boundary_mask(g, n) == target) out.set_coefficient(n.values, inv_fact);
            return;
        }
        BigRational f = inv_fact;
        for (int v = 0; v <= caps[e]; ++v) {
            n.values[e] = v;
            if (v > 0) f /= v;
            rec(e + 1, f);
        }
        n.values[e] = 0;
    };
    rec(0, BigRational(1));
    return out;
}

bool lemma_u2krcr_check(const BaseGraph& g, const std::vector<int>& sources, int u0, int v0,
                        const Current& m) {
    const int k = static_cast<int>(sources.size()) / 2;
    if (sources.empty() || sources.size() % 2 != 0)
        throw std::invalid_argument("need a nonempty even list of sources");
    for (int s : sources)
        if (s == v0) throw std::invalid_argument("v0 may not be a source");
    if (m.total() > 8) throw std::invalid_argument("total current too large for the series oracle");
    int e0 = -1;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        if ((e.u == u0 && e.v == v0) || (e.u == v0 && e.v == u0)) e0 = i;
    }
    if (e0 < 0) throw std::invalid_argument("u0 v0 must be an edge of the base graph");

    std::vector<int> caps = m.values;
    caps[e0] += 1;

    const TruncatedSeries z_norm = source_series(g, {}, caps);
    const TruncatedSeries z_inv = TruncatedSeries::constant(caps, 1) / z_norm;

    TruncatedSeries u(caps);
    for_each_even_partition(sources, [&](const Blocks& blocks) {
        TruncatedSeries term =
            TruncatedSeries::constant(caps, BigRational(static_cast<long>(
                                                partition_sign_weight(static_cast<int>(blocks.size())))));
        for (const auto& b : blocks) term = term * source_series(g, b, caps) * z_inv;
        u += term;
    });

    const TruncatedSeries du = u.derivative(e0);
    const TruncatedSeries z_pow = z_norm.pow(k + 1).truncated_to(du.caps());
    const TruncatedSeries lhs = z_pow * du;

    BigRational expected(static_cast<long>(r_current(g, m, sources, u0, v0)));
    for (int v : m.values) expected /= BigRational(factorial(v));
    return lhs.coefficient(m.values) == expected;
}

}  // namespace isinglab
