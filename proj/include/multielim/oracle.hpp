#ifndef MULTIELIM_ORACLE_HPP
#define MULTIELIM_ORACLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "multielim/elim.hpp"
#include "multielim/linalg.hpp"
#include "multielim/mpoly.hpp"
#include "multielim/regions.hpp"
#include "multielim/rng.hpp"

namespace multielim {

// Graded piece of the saturated ideal computed by brute-force linear
// algebra, independent of the Sylvester-form machinery it is used to
// verify.
template <class K>
struct SaturationComponent {
    MultiDegree mu;
    std::vector<std::vector<K>> basis; // coefficient vectors over basis(mu)
    int exponent_used = 0;

    int dim() const { return static_cast<int>(basis.size()); }
};

// {p in R_mu : sigma^N p in I at degree mu + N(1,...,1)} where sigma is
// the product of the first (or last) variable of every block. Justified
// as a stand-in for saturation by the localization argument; the
// stability wrapper below guards the exponent choice.
template <class K>
SaturationComponent<K> saturation_component(const GradedStructure& s,
                                            const std::vector<const MultiPoly<K>*>& gens,
                                            const MultiDegree& mu, int N, const K& zero,
                                            bool use_last_vars = false) {
    if (N < 1) throw std::invalid_argument("saturation exponent must be >= 1");
    if (!mu.is_nonnegative()) throw std::invalid_argument("mu must be componentwise nonnegative");
    SaturationComponent<K> out;
    out.mu = mu;
    out.exponent_used = N;

    const std::vector<ExpVec> source = monomial_basis(s, mu);
    const int m = static_cast<int>(source.size());
    if (m == 0) return out;

    ExpVec sigma(static_cast<std::size_t>(s.var_count()), 0);
    for (int j = 0; j < s.r(); ++j)
        sigma[static_cast<std::size_t>(s.var_index(j, use_last_vars ? s.dim(j) : 0))] = N;

    const MultiDegree tau = mu + MultiDegree(std::vector<int>(static_cast<std::size_t>(s.r()), N));
    const BasisIndex rows(s, tau);
    const std::vector<KoszulColumn> kcols = koszul_columns(s, gens, tau);

    Matrix<K> aug(rows.size(), m + static_cast<int>(kcols.size()), zero);
    for (int c = 0; c < m; ++c)
        aug(rows.position(exp_mul(source[static_cast<std::size_t>(c)], sigma)), c) = one_like(zero);
    for (std::size_t c = 0; c < kcols.size(); ++c) {
        const MultiPoly<K> prod =
            gens[static_cast<std::size_t>(kcols[c].poly)]->mul_monomial(kcols[c].monomial);
        for (const auto& [e, v] : prod.terms())
            aug(rows.position(e), m + static_cast<int>(c)) = v;
    }

    SpanChecker<K> span(m, zero);
    for (const auto& k : kernel_basis(aug)) {
        std::vector<K> head(k.begin(), k.begin() + m);
        span.add(std::move(head));
    }
    out.basis = span.reduced_rows();
    return out;
}

template <class K>
SaturationComponent<K> saturation_component(const PolySystem<K>& f, const MultiDegree& mu, int N,
                                            bool use_last_vars = false) {
    return saturation_component(*f.structure(), generator_view(f), mu, N, f.zero_element(),
                                use_last_vars);
}

struct SaturationOptions {
    int start_exponent = -1; // -1: 1 + max_j delta_j
    int max_rounds = 4;      // doublings allowed before giving up
};

// Requires the component at N to agree with N+1 (same dimension, same
// span) and with the opposite corner monomial at N; doubles N on
// disagreement.
template <class K>
SaturationComponent<K> stable_saturation_component(const GradedStructure& s,
                                                   const std::vector<const MultiPoly<K>*>& gens,
                                                   const MultiDegree& mu,
                                                   const SaturationOptions& opts, const K& zero) {
    int N = opts.start_exponent;
    if (N < 1) {
        const MultiDegree delta = critical_degree(s);
        N = 1;
        for (int j = 0; j < s.r(); ++j)
            if (delta[j] + 1 > N) N = delta[j] + 1;
    }
    for (int round = 0; round <= opts.max_rounds; ++round, N *= 2) {
        SaturationComponent<K> at_n = saturation_component(s, gens, mu, N, zero);
        SaturationComponent<K> at_next = saturation_component(s, gens, mu, N + 1, zero);
        if (!same_span(at_n, at_next, zero)) continue;
        SaturationComponent<K> corner = saturation_component(s, gens, mu, N, zero, true);
        if (!same_span(at_n, corner, zero)) continue;
        return at_n;
    }
    throw std::runtime_error("saturation component did not stabilize at degree " + mu.str());
}

template <class K>
SaturationComponent<K> stable_saturation_component(const PolySystem<K>& f, const MultiDegree& mu,
                                                   const SaturationOptions& opts = {}) {
    return stable_saturation_component(*f.structure(), generator_view(f), mu, opts,
                                       f.zero_element());
}

template <class K>
bool same_span(const SaturationComponent<K>& a, const SaturationComponent<K>& b, const K& zero) {
    if (a.dim() != b.dim()) return false;
    if (a.basis.empty()) return true;
    const int len = static_cast<int>(a.basis.front().size());
    SpanChecker<K> sa(len, zero);
    for (const auto& v : a.basis) sa.add(v);
    for (const auto& v : b.basis)
        if (!sa.contains(v)) return false;
    SpanChecker<K> sb(len, zero);
    for (const auto& v : b.basis) sb.add(v);
    for (const auto& v : a.basis)
        if (!sb.contains(v)) return false;
    return true;
}

template <class K>
int ideal_component_dim(const GradedStructure& s, const std::vector<const MultiPoly<K>*>& gens,
                        const MultiDegree& mu, const K& zero) {
    return rank(ideal_map_matrix(s, gens, mu, zero));
}

// dim (I^sat / I)_mu via the stable saturation oracle.
template <class K>
int saturation_quotient_dim(const PolySystem<K>& f, const MultiDegree& mu,
                            const SaturationOptions& opts = {}) {
    const auto sat = stable_saturation_component(f, mu, opts);
    return sat.dim() - ideal_component_dim(*f.structure(), generator_view(f), mu,
                                           f.zero_element());
}

// Hilbert function of the coordinate ring at mu: dim R_mu - rank M_mu.
template <class K>
long long hilbert_function(const PolySystem<K>& f, const MultiDegree& mu) {
    const GradedStructure& s = *f.structure();
    return monomial_count(s, mu) -
           rank(ideal_map_matrix(s, generator_view(f), mu, f.zero_element()));
}

// Hilbert function of the saturated quotient at mu.
template <class K>
long long hilbert_function_saturated(const PolySystem<K>& f, const MultiDegree& mu,
                                     const SaturationOptions& opts = {}) {
    const GradedStructure& s = *f.structure();
    return monomial_count(s, mu) - stable_saturation_component(f, mu, opts).dim();
}

// One point of P^{n_1} x ... x P^{n_r}: homogeneous coordinates per
// factor, not all zero within a factor.
template <class K>
struct MultiPoint {
    std::vector<std::vector<K>> coords;
};

template <class K>
K evaluate_monomial(const GradedStructure& s, const ExpVec& e, const MultiPoint<K>& pt,
                    const K& zero) {
    K val = one_like(zero);
    for (int j = 0; j < s.r(); ++j) {
        for (int k = 0; k <= s.dim(j); ++k) {
            int ex = e[static_cast<std::size_t>(s.var_index(j, k))];
            const K& c = pt.coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            for (int t = 0; t < ex; ++t) val *= c;
        }
    }
    return val;
}

// System of n+1 forms of the prescribed degrees, each a seeded random
// element of the subspace vanishing at all the given points. The caller
// is responsible for re-validating zero-dimensionality (count_roots
// corank stability) before relying on the instance.
template <class K>
PolySystem<K> system_through_points(const StructurePtr& s, const std::vector<MultiPoint<K>>& points,
                                    const K& zero, std::uint64_t seed) {
    for (const auto& pt : points) {
        if (static_cast<int>(pt.coords.size()) != s->r())
            throw std::invalid_argument("point arity mismatch");
        for (int j = 0; j < s->r(); ++j) {
            if (static_cast<int>(pt.coords[static_cast<std::size_t>(j)].size()) != s->dim(j) + 1)
                throw std::invalid_argument("point coordinate arity mismatch");
            bool nonzero = false;
            for (const K& c : pt.coords[static_cast<std::size_t>(j)])
                if (!c.is_zero()) nonzero = true;
            if (!nonzero)
                throw std::invalid_argument("point has a zero coordinate tuple in factor " +
                                            std::to_string(j));
        }
    }

    Rng rng(seed);
    std::vector<MultiPoly<K>> polys;
    for (int i = 0; i < s->poly_count(); ++i) {
        const std::vector<ExpVec> basis = monomial_basis(*s, s->degree(i));
        const int m = static_cast<int>(basis.size());
        Matrix<K> eval(static_cast<int>(points.size()), m, zero);
        for (std::size_t t = 0; t < points.size(); ++t)
            for (int c = 0; c < m; ++c)
                eval(static_cast<int>(t), c) =
                    evaluate_monomial(*s, basis[static_cast<std::size_t>(c)], points[t], zero);
        const auto null_space = kernel_basis(eval);
        if (null_space.empty())
            throw std::runtime_error("vanishing conditions leave no nonzero form of degree " +
                                     s->degree(i).str());

        MultiPoly<K> f(s, s->degree(i), zero);
        for (int attempt = 0; attempt < 64 && f.is_zero(); ++attempt) {
            std::vector<K> combo(static_cast<std::size_t>(m), zero);
            for (const auto& vec : null_space) {
                const K c = random_coefficient(rng, zero);
                for (int t = 0; t < m; ++t) combo[static_cast<std::size_t>(t)] += c * vec[static_cast<std::size_t>(t)];
            }
            f = MultiPoly<K>(s, s->degree(i), zero);
            for (int t = 0; t < m; ++t)
                f.add_term(basis[static_cast<std::size_t>(t)], combo[static_cast<std::size_t>(t)]);
        }
        if (f.is_zero())
            throw std::runtime_error("could not draw a nonzero vanishing form of degree " +
                                     s->degree(i).str());
        polys.push_back(std::move(f));
    }
    return PolySystem<K>(s, std::move(polys));
}

inline Fp random_coefficient(Rng& rng, const Fp& zero) {
    return Fp(rng.below(zero.modulus()), zero.modulus());
}
inline Rational random_coefficient(Rng& rng, const Rational&) {
    return Rational(static_cast<long>(rng.range(-10, 10)));
}

// Syzygies of degree mu versus the span of the monomial multiples of
// the Koszul relations f_j e_i - f_i e_j.
struct KoszulReport {
    long long kernel_dim = 0;
    long long koszul_dim = 0;
    bool dims_equal = false;
    bool kernel_inside_koszul_span = false;
};

template <class K>
KoszulReport koszul_compare(const PolySystem<K>& f, const MultiDegree& mu) {
    const GradedStructure& s = *f.structure();
    const K zero = f.zero_element();

    std::vector<KoszulColumn> cols;
    const Matrix<K> m = ideal_map_matrix(s, generator_view(f), mu, zero, &cols);
    const auto kernel = kernel_basis(m);

    // source coordinates: (poly, monomial) -> column position
    std::map<std::pair<int, ExpVec>, int> pos;
    for (std::size_t c = 0; c < cols.size(); ++c)
        pos.emplace(std::make_pair(cols[c].poly, cols[c].monomial), static_cast<int>(c));

    SpanChecker<K> koszul_span(static_cast<int>(cols.size()), zero);
    for (int i = 0; i < f.size(); ++i) {
        for (int j = i + 1; j < f.size(); ++j) {
            const MultiDegree rest = mu - s.degree(i) - s.degree(j);
            for (const ExpVec& mono : monomial_basis(s, rest)) {
                std::vector<K> v(cols.size(), zero);
                const MultiPoly<K> a = f[j].mul_monomial(mono); // goes into slot i
                for (const auto& [e, c] : a.terms())
                    v[static_cast<std::size_t>(pos.at({i, e}))] += c;
                const MultiPoly<K> b = f[i].mul_monomial(mono); // slot j, negated
                for (const auto& [e, c] : b.terms())
                    v[static_cast<std::size_t>(pos.at({j, e}))] -= c;
                koszul_span.add(std::move(v));
            }
        }
    }

    KoszulReport rep;
    rep.kernel_dim = static_cast<long long>(kernel.size());
    rep.koszul_dim = koszul_span.dim();
    rep.dims_equal = rep.kernel_dim == rep.koszul_dim;
    rep.kernel_inside_koszul_span = true;
    for (const auto& v : kernel)
        if (!koszul_span.contains(v)) rep.kernel_inside_koszul_span = false;
    return rep;
}

} // namespace multielim

#endif
