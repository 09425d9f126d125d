#include "isinglab/leeyang.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "isinglab/ising.hpp"

namespace isinglab {

double ZeroSpectrum::alpha1() const {
    if (alphas.empty()) throw std::logic_error("empty spectrum");
    return alphas.front();
}

long field_denominator(const WeightedField& lambda) {
    long q = 1;
    for (const auto& [v, lam] : lambda) {
        (void)v;
        if (lam < 0) throw std::invalid_argument("field weights must be nonnegative");
        q = std::lcm(q, lam.get_den().get_si());
    }
    return q;
}

namespace {

// Integer field levels q*Lambda(sigma) and Boltzmann weights for all 2^|V|
// configurations (level recorded for the +1-at-pivot half; the mirror config
// carries the negated level).
struct LevelTable {
    std::vector<long> level;   // per configuration
    std::vector<double> weight;
    long level_max = 0;  // q * Lambda_max = sum of integer weights
};

LevelTable build_levels(const BaseGraph& g, const std::vector<double>& J,
                        const WeightedField& lambda, long q) {
    if (static_cast<int>(J.size()) != g.edge_count())
        throw std::invalid_argument("one J value per edge required");
    for (double j : J) {
        if (j < 0) throw std::invalid_argument("couplings must be nonnegative");
        if (j > kMaxCoupling) throw std::invalid_argument("coupling exceeds cap 3");
    }
    if (g.vertex_count() > kMaxSpinEnumVertices)
        throw std::invalid_argument("vertex count exceeds enumeration cap");

    const int n = g.vertex_count();
    std::vector<long> qlam(n, 0);
    for (const auto& [vid, lam] : lambda) {
        const BigRational scaled = lam * BigRational(q);
        qlam[g.vertex_index(vid)] = scaled.get_num().get_si();
    }

    LevelTable table;
    table.level_max = std::accumulate(qlam.begin(), qlam.end(), 0L);
    table.level.resize(std::size_t(1) << n);
    table.weight.resize(std::size_t(1) << n);
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        double energy = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            const int su = (cfg >> g.vertex_index(e.u)) & 1u ? -1 : 1;
            const int sv = (cfg >> g.vertex_index(e.v)) & 1u ? -1 : 1;
            energy += J[i] * su * sv;
        }
        long level = 0;
        for (int vi = 0; vi < n; ++vi) level += ((cfg >> vi) & 1u) ? -qlam[vi] : qlam[vi];
        table.level[cfg] = level;
        table.weight[cfg] = std::exp(energy);
    }
    return table;
}

}  // namespace

FieldPolynomial partition_polynomial(const BaseGraph& g, const std::vector<double>& J,
                                     const WeightedField& lambda) {
    const long q = field_denominator(lambda);
    const LevelTable table = build_levels(g, J, lambda, q);
    const long D = table.level_max;

    FieldPolynomial p;
    p.q = q;
    p.coef.assign(static_cast<std::size_t>(D) + 1, 0.0);
    const int n = g.vertex_count();
    if (n == 0) {
        p.coef[0] = 1.0;
        return p;
    }
    // Spin-flip pairs sigma, -sigma land in mirrored buckets with the same
    // weight, so the coefficient list is palindromic bit for bit.
    const std::uint32_t flip_all = (1u << n) - 1;
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        if (cfg & 1u) continue;  // pivot spin fixed to +1; mirror handled below
        const std::uint32_t mirror = cfg ^ flip_all;
        const long j = (D - table.level[cfg]) / 2;
        p.coef[static_cast<std::size_t>(j)] += table.weight[cfg];
        p.coef[static_cast<std::size_t>(D - j)] += table.weight[mirror];
    }
    return p;
}

namespace {

using Cplx = std::complex<long double>;

Cplx horner(const std::vector<long double>& c, Cplx z) {
    Cplx acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Cplx horner_derivative(const std::vector<long double>& c, Cplx z) {
    Cplx acc(0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
        acc = acc * z + c[static_cast<std::size_t>(i)] * static_cast<long double>(i);
    return acc;
}

bool aberth_pass(const std::vector<long double>& c, std::vector<Cplx>& z, int max_iter) {
    const int d = static_cast<int>(z.size());
    for (int iter = 0; iter < max_iter; ++iter) {
        long double worst = 0;
        for (int i = 0; i < d; ++i) {
            const Cplx pv = horner(c, z[i]);
            const Cplx dv = horner_derivative(c, z[i]);
            if (dv == Cplx(0)) continue;
            const Cplx w = pv / dv;
            Cplx rep(0);
            for (int j = 0; j < d; ++j)
                if (j != i) rep += Cplx(1) / (z[i] - z[j]);
            const Cplx denom = Cplx(1) - w * rep;
            const Cplx step = (denom == Cplx(0)) ? w : w / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (worst < 1e-15L) return true;
    }
    return false;
}

}  // namespace

ZeroSpectrum polynomial_roots(const FieldPolynomial& p, double circle_tol) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("need degree >= 1");
    long double scale = 0;
    for (double c : p.coef) scale = std::max<long double>(scale, std::fabs(c));
    if (scale == 0) throw std::invalid_argument("zero polynomial");
    std::vector<long double> c(p.coef.begin(), p.coef.end());
    for (auto& v : c) v /= scale;

    ZeroSpectrum spec;
    bool converged = false;
    std::vector<Cplx> z(static_cast<std::size_t>(d));
    for (int attempt = 0; attempt < 3 && !converged; ++attempt) {
        for (int i = 0; i < d; ++i) {
            const long double theta =
                2.0L * M_PIl * (i + 0.5L) / d + 0.31L + 0.17L * attempt;
            const long double radius = 1.0L + 1e-3L * std::cos(3.7L * i + attempt);
            z[static_cast<std::size_t>(i)] = Cplx(radius * std::cos(theta), radius * std::sin(theta));
        }
        converged = aberth_pass(c, z, 400);
    }
    if (!converged) {
        long double residual = 0;
        for (const auto& zi : z) residual = std::max(residual, std::abs(horner(c, zi)));
        std::ostringstream os;
        os << "root iteration did not converge; worst residual " << static_cast<double>(residual);
        throw std::runtime_error(os.str());
    }

    // Newton polish, then the unit-circle gate.
    for (auto& zi : z) {
        for (int it = 0; it < 8; ++it) {
            const Cplx dv = horner_derivative(c, zi);
            if (dv == Cplx(0)) break;
            const Cplx step = horner(c, zi) / dv;
            zi -= step;
            if (std::abs(step) < 1e-18L * (1 + std::abs(zi))) break;
        }
    }

    for (const auto& zi : z) {
        const double dev = std::fabs(static_cast<double>(std::abs(zi)) - 1.0);
        spec.max_circle_deviation = std::max(spec.max_circle_deviation, dev);
        spec.roots.emplace_back(static_cast<double>(zi.real()), static_cast<double>(zi.imag()));
    }
    if (spec.max_circle_deviation > circle_tol) {
        std::ostringstream os;
        os << "root off the unit circle by " << spec.max_circle_deviation;
        throw std::runtime_error(os.str());
    }

    std::sort(spec.roots.begin(), spec.roots.end(), [](const auto& a, const auto& b) {
        return std::abs(std::arg(a)) < std::abs(std::arg(b));
    });
    for (const auto& r : spec.roots)
        spec.alphas.push_back(0.5 * static_cast<double>(p.q) * std::fabs(std::arg(r)));
    std::sort(spec.alphas.begin(), spec.alphas.end());
    return spec;
}

double alpha1_scan(const BaseGraph& g, const std::vector<double>& J, const WeightedField& lambda) {
    const long q = field_denominator(lambda);
    const LevelTable table = build_levels(g, J, lambda, q);
    if (table.level_max <= 0)
        throw std::invalid_argument("field weights must not all vanish");
    const double lambda_max = static_cast<double>(table.level_max) / static_cast<double>(q);

    // Collapse configurations into cosine terms per |level|.
    std::vector<double> weight_of_level(static_cast<std::size_t>(table.level_max) + 1, 0.0);
    for (std::size_t cfg = 0; cfg < table.level.size(); ++cfg)
        weight_of_level[static_cast<std::size_t>(std::labs(table.level[cfg]))] += table.weight[cfg];

    auto eval = [&](double t) {
        double acc = 0;
        for (std::size_t l = 0; l < weight_of_level.size(); ++l)
            if (weight_of_level[l] != 0)
                acc += weight_of_level[l] *
                       std::cos(t * static_cast<double>(l) / static_cast<double>(q));
        return acc;
    };

    const double step = M_PI / (64.0 * lambda_max);
    const double safety = 4.0 * M_PI * static_cast<double>(q);
    double prev_t = 0.0, prev_g = eval(0.0);
    if (prev_g <= 0) throw std::runtime_error("cosine sum not positive at t = 0");
    for (double t = step; t <= safety; t += step) {
        const double gt = eval(t);
        if (gt <= 0) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                const double mid = 0.5 * (lo + hi);
                (eval(mid) > 0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_t = t;
        prev_g = gt;
    }
    throw std::runtime_error("no sign change up to the safety bound; this signals a bug");
}

RadiusDiagnostic cumulant_radius_diagnostic(const BaseGraph& g, const std::vector<BigRational>& t,
                                            const WeightedField& lambda, int K) {
    if (K < 2 || K % 2 != 0 || K > 12)
        throw std::invalid_argument("K must be even and at most 12");
    RadiusDiagnostic diag;
    std::map<int, BigRational> lam(lambda.begin(), lambda.end());
    for (int k = 2; k <= K; k += 2) {
        const BigRational u = cumulant(g, t, lam, k);
        const double magnitude = std::fabs(to_double(u)) / to_double(BigRational(factorial(k)));
        diag.ratios.emplace_back(k, std::pow(magnitude, 1.0 / k));
    }
    std::vector<double> J(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) J[i] = std::atanh(to_double(t[i]));
    diag.inv_alpha1 = 1.0 / alpha1_scan(g, J, lambda);
    return diag;
}

}  // namespace isinglab
