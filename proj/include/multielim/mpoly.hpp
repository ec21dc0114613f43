#ifndef MULTIELIM_MPOLY_HPP
#define MULTIELIM_MPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multielim/field.hpp"
#include "multielim/monomial.hpp"
#include "multielim/rng.hpp"
#include "multielim/structure.hpp"

namespace multielim {

// Sparse multihomogeneous polynomial of a declared multidegree. Every
// stored coefficient is nonzero and every term has the declared block
// degrees; the zero polynomial keeps its declared degree.
template <class K>
class MultiPoly {
public:
    MultiPoly(StructurePtr s, MultiDegree degree, K zero)
        : s_(std::move(s)), deg_(std::move(degree)), zero_(std::move(zero)) {
        if (deg_.size() != s_->r()) throw std::invalid_argument("degree arity mismatch");
    }

    const StructurePtr& structure() const { return s_; }
    const MultiDegree& multidegree() const { return deg_; }
    const std::map<ExpVec, K>& terms() const { return terms_; }
    const K& zero_element() const { return zero_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const K& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(e.size()) != s_->var_count())
            throw std::invalid_argument("exponent arity mismatch");
        if (multidegree_of(*s_, e) != deg_)
            throw std::invalid_argument("term degree violates declared multidegree " + deg_.str());
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_ : it->second;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        if (!is_zero() && !o.is_zero() && deg_ != o.deg_)
            throw std::invalid_argument("adding polynomials of different multidegrees");
        MultiPoly r(s_, is_zero() ? o.deg_ : deg_, zero_);
        r.terms_ = is_zero() ? o.terms_ : terms_;
        const MultiPoly& other = is_zero() ? *this : o;
        for (const auto& [e, c] : other.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + o.scalar_mul(-one_like(zero_)); }

    MultiPoly scalar_mul(const K& c) const {
        MultiPoly r(s_, deg_, zero_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(s_, deg_ + o.deg_, zero_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                ExpVec e = exp_mul(e1, e2);
                K c = c1 * c2;
                if (c.is_zero()) continue;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    MultiPoly mul_monomial(const ExpVec& m) const {
        MultiPoly r(s_, deg_ + multidegree_of(*s_, m), zero_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(exp_mul(e, m), c);
        return r;
    }

    // d/dx_{block,k}
    MultiPoly derivative(int block, int k) const {
        MultiDegree d = deg_;
        d[block] -= 1;
        MultiPoly r(s_, d, zero_);
        const int vi = s_->var_index(block, k);
        for (const auto& [e, c] : terms_) {
            const int ex = e[static_cast<std::size_t>(vi)];
            if (ex == 0) continue;
            K nc = times_int(c, ex);
            if (nc.is_zero()) continue;
            ExpVec ne = e;
            ne[static_cast<std::size_t>(vi)] -= 1;
            r.terms_.emplace(std::move(ne), std::move(nc));
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return *s_ == *o.s_ && terms_ == o.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            for (int j = 0; j < s_->r(); ++j) {
                for (int k = 0; k <= s_->dim(j); ++k) {
                    const int ex = e[static_cast<std::size_t>(s_->var_index(j, k))];
                    if (ex == 0) continue;
                    out += "*x" + std::to_string(j) + "_" + std::to_string(k);
                    if (ex > 1) out += "^" + std::to_string(ex);
                }
            }
        }
        return out;
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (!(*s_ == *o.s_)) throw std::invalid_argument("graded structure mismatch");
    }

    StructurePtr s_;
    MultiDegree deg_;
    std::map<ExpVec, K> terms_;
    K zero_;
};

// n+1 polynomials conforming to the structure's degree list.
template <class K>
class PolySystem {
public:
    PolySystem(StructurePtr s, std::vector<MultiPoly<K>> polys)
        : s_(std::move(s)), polys_(std::move(polys)) {
        if (static_cast<int>(polys_.size()) != s_->poly_count())
            throw std::invalid_argument("expected " + std::to_string(s_->poly_count()) +
                                        " polynomials");
        for (int i = 0; i < s_->poly_count(); ++i) {
            const auto& p = polys_[static_cast<std::size_t>(i)];
            if (!(*p.structure() == *s_)) throw std::invalid_argument("graded structure mismatch");
            if (p.multidegree() != s_->degree(i))
                throw std::invalid_argument("polynomial " + std::to_string(i) +
                                            " does not have degree " + s_->degree(i).str());
        }
    }

    const StructurePtr& structure() const { return s_; }
    int size() const { return static_cast<int>(polys_.size()); }
    const MultiPoly<K>& operator[](int i) const { return polys_[static_cast<std::size_t>(i)]; }
    const std::vector<MultiPoly<K>>& polys() const { return polys_; }
    const K& zero_element() const { return polys_.front().zero_element(); }

private:
    StructurePtr s_;
    std::vector<MultiPoly<K>> polys_;
};

// Dense random system: every coefficient an independent uniform nonzero
// field element (Fp) or a uniform nonzero integer in [-10,10] (Q).
// Deterministic under the seed.
inline PolySystem<Fp> random_system_fp(const StructurePtr& s, std::uint64_t p, std::uint64_t seed) {
    Rng rng(seed);
    const Fp zero(0, p);
    std::vector<MultiPoly<Fp>> polys;
    for (int i = 0; i < s->poly_count(); ++i) {
        MultiPoly<Fp> f(s, s->degree(i), zero);
        for (const ExpVec& e : monomial_basis(*s, s->degree(i)))
            f.add_term(e, Fp(1 + rng.below(p - 1), p));
        polys.push_back(std::move(f));
    }
    return PolySystem<Fp>(s, std::move(polys));
}

inline PolySystem<Rational> random_system_q(const StructurePtr& s, std::uint64_t seed,
                                            int lo = -10, int hi = 10) {
    Rng rng(seed);
    std::vector<MultiPoly<Rational>> polys;
    for (int i = 0; i < s->poly_count(); ++i) {
        MultiPoly<Rational> f(s, s->degree(i), Rational());
        for (const ExpVec& e : monomial_basis(*s, s->degree(i))) {
            long long c = 0;
            while (c == 0) c = rng.range(lo, hi);
            f.add_term(e, Rational(static_cast<long>(c)));
        }
        polys.push_back(std::move(f));
    }
    return PolySystem<Rational>(s, std::move(polys));
}

// Reduce a rational system modulo p. Fails if some denominator is
// divisible by p.
inline PolySystem<Fp> reduce_mod_p(const PolySystem<Rational>& f, std::uint64_t p) {
    const StructurePtr& s = f.structure();
    std::vector<MultiPoly<Fp>> polys;
    for (int i = 0; i < f.size(); ++i) {
        MultiPoly<Fp> g(s, s->degree(i), Fp(0, p));
        for (const auto& [e, c] : f[i].terms()) {
            const Fp num = Fp::from_int(mpz_class(c.numerator() % p).get_si(), p);
            const Fp den = Fp::from_int(mpz_class(c.denominator() % p).get_si(), p);
            g.add_term(e, num / den);
        }
        polys.push_back(std::move(g));
    }
    return PolySystem<Fp>(s, std::move(polys));
}

} // namespace multielim

#endif
