#ifndef MULTIELIM_FORMS_HPP
#define MULTIELIM_FORMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multielim/mpoly.hpp"
#include "multielim/regions.hpp"

namespace multielim {

// One multi-index per block; alphas[j] has n_j + 1 entries and the
// admissible range is |alphas[j]| < min_i d_{i,j}.
struct SylvesterIndex {
    std::vector<std::vector<int>> alphas;

    static SylvesterIndex zeros(const GradedStructure& s) {
        SylvesterIndex idx;
        for (int j = 0; j < s.r(); ++j)
            idx.alphas.emplace_back(static_cast<std::size_t>(s.dim(j) + 1), 0);
        return idx;
    }

    // Reads the index off an exponent vector of the structure.
    static SylvesterIndex from_exponents(const GradedStructure& s, const ExpVec& e) {
        SylvesterIndex idx = zeros(s);
        for (int j = 0; j < s.r(); ++j)
            for (int k = 0; k <= s.dim(j); ++k)
                idx.alphas[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    e[static_cast<std::size_t>(s.var_index(j, k))];
        return idx;
    }

    ExpVec to_exponents(const GradedStructure& s) const {
        ExpVec e(static_cast<std::size_t>(s.var_count()), 0);
        for (int j = 0; j < s.r(); ++j)
            for (int k = 0; k <= s.dim(j); ++k)
                e[static_cast<std::size_t>(s.var_index(j, k))] =
                    alphas[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        return e;
    }

    MultiDegree block_norms() const {
        MultiDegree m = MultiDegree::zero(static_cast<int>(alphas.size()));
        for (std::size_t j = 0; j < alphas.size(); ++j)
            for (int a : alphas[j]) m[static_cast<int>(j)] += a;
        return m;
    }

    bool operator==(const SylvesterIndex& o) const { return alphas == o.alphas; }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            if (j) s += ";";
            for (std::size_t k = 0; k < alphas[j].size(); ++k) {
                if (k) s += ",";
                s += std::to_string(alphas[j][k]);
            }
        }
        return s;
    }
};

inline void check_index_admissible(const GradedStructure& s, const SylvesterIndex& idx) {
    if (static_cast<int>(idx.alphas.size()) != s.r())
        throw std::invalid_argument("index has wrong number of blocks");
    const MultiDegree mins = s.min_degrees();
    for (int j = 0; j < s.r(); ++j) {
        const auto& a = idx.alphas[static_cast<std::size_t>(j)];
        if (static_cast<int>(a.size()) != s.dim(j) + 1)
            throw std::invalid_argument("index block " + std::to_string(j) + " has wrong arity");
        int norm = 0;
        for (int x : a) {
            if (x < 0) throw std::invalid_argument("negative index entry in block " + std::to_string(j));
            norm += x;
        }
        if (norm >= mins[j])
            throw std::invalid_argument("index norm " + std::to_string(norm) + " in block " +
                                        std::to_string(j) + " must be < min_i d_{i," +
                                        std::to_string(j) + "} = " + std::to_string(mins[j]));
    }
}

// All admissible indices with the given block norms, in the monomial
// order of their exponent vectors. These index the Sylvester columns.
inline std::vector<SylvesterIndex> sylvester_indices(const GradedStructure& s,
                                                     const MultiDegree& norms) {
    std::vector<SylvesterIndex> out;
    for (const ExpVec& e : monomial_basis(s, norms))
        out.push_back(SylvesterIndex::from_exponents(s, e));
    return out;
}

// Nested decomposition of every F_i with respect to an index: each
// monomial is routed through the blocks to the unique bucket given by
// the smallest variable index whose exponent clears the threshold
// alpha + 1, descending to the next block when only the last variable
// clears it. The bucket layout (the determinant's columns) is
// block 0: 0..n_0-1, ..., block r-2: 0..n_{r-2}-1, block r-1: 0..n_{r-1}.
template <class K>
struct DecompositionTable {
    StructurePtr s;
    SylvesterIndex idx;
    std::vector<std::vector<int>> var_order; // per block: position -> variable
    std::vector<int> poly_order;             // row -> polynomial
    std::vector<std::pair<int, int>> columns; // (block, position)
    std::vector<ExpVec> divisors;             // monomial divided out per column
    std::vector<std::vector<MultiPoly<K>>> entries; // [row][column]

    // The nested sum for row t; equals the decomposed polynomial.
    MultiPoly<K> reconstruct_row(int t) const {
        const auto& row = entries[static_cast<std::size_t>(t)];
        MultiPoly<K> acc = row[0].mul_monomial(divisors[0]);
        for (std::size_t c = 1; c < row.size(); ++c)
            acc = acc + row[c].mul_monomial(divisors[c]);
        return acc;
    }
};

namespace detail {

inline std::vector<std::vector<int>> identity_orders(const GradedStructure& s) {
    std::vector<std::vector<int>> orders;
    for (int j = 0; j < s.r(); ++j) {
        std::vector<int> o(static_cast<std::size_t>(s.dim(j) + 1));
        for (int k = 0; k <= s.dim(j); ++k) o[static_cast<std::size_t>(k)] = k;
        orders.push_back(std::move(o));
    }
    return orders;
}

inline std::vector<int> identity_poly_order(const GradedStructure& s) {
    std::vector<int> o(static_cast<std::size_t>(s.poly_count()));
    for (int i = 0; i < s.poly_count(); ++i) o[static_cast<std::size_t>(i)] = i;
    return o;
}

template <class K>
DecompositionTable<K> decompose_impl(const PolySystem<K>& f, const SylvesterIndex& idx,
                                     std::vector<std::vector<int>> var_order,
                                     std::vector<int> poly_order) {
    const GradedStructure& s = *f.structure();
    DecompositionTable<K> table;
    table.s = f.structure();
    table.idx = idx;
    table.var_order = std::move(var_order);
    table.poly_order = std::move(poly_order);

    // column layout and the monomial divided out of each bucket
    std::vector<std::vector<int>> col_id(static_cast<std::size_t>(s.r()));
    ExpVec descent(static_cast<std::size_t>(s.var_count()), 0); // accumulated prefix divisor
    for (int l = 0; l < s.r(); ++l) {
        const int last = s.dim(l);
        const int top = (l == s.r() - 1) ? last : last - 1;
        col_id[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(last + 1), -1);
        for (int pos = 0; pos <= top; ++pos) {
            const int var = s.var_index(l, table.var_order[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)]);
            ExpVec div = descent;
            div[static_cast<std::size_t>(var)] +=
                idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)] + 1;
            col_id[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)] =
                static_cast<int>(table.columns.size());
            table.columns.emplace_back(l, pos);
            table.divisors.push_back(std::move(div));
        }
        if (l < s.r() - 1) {
            const int var = s.var_index(l, table.var_order[static_cast<std::size_t>(l)][static_cast<std::size_t>(last)]);
            descent[static_cast<std::size_t>(var)] +=
                idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(last)] + 1;
        }
    }

    const int ncols = static_cast<int>(table.columns.size());
    for (int t = 0; t < s.poly_count(); ++t) {
        const int i = table.poly_order[static_cast<std::size_t>(t)];
        const MultiPoly<K>& fi = f[i];
        std::vector<MultiPoly<K>> row;
        row.reserve(static_cast<std::size_t>(ncols));
        for (int c = 0; c < ncols; ++c) {
            const MultiDegree bucket_deg =
                fi.multidegree() - multidegree_of(s, table.divisors[static_cast<std::size_t>(c)]);
            row.emplace_back(f.structure(), bucket_deg, f.zero_element());
        }
        for (const auto& [e, coeff] : fi.terms()) {
            ExpVec rem = e;
            int bucket = -1;
            for (int l = 0; l < s.r() && bucket < 0; ++l) {
                const int last = s.dim(l);
                int hit = -1;
                for (int pos = 0; pos <= last; ++pos) {
                    const int var = s.var_index(
                        l, table.var_order[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)]);
                    const int threshold =
                        idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)] + 1;
                    if (rem[static_cast<std::size_t>(var)] >= threshold) {
                        hit = pos;
                        break;
                    }
                }
                if (hit < 0)
                    throw std::logic_error("decomposition routing failed; inadmissible index?");
                const int var = s.var_index(
                    l, table.var_order[static_cast<std::size_t>(l)][static_cast<std::size_t>(hit)]);
                const int threshold =
                    idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(hit)] + 1;
                rem[static_cast<std::size_t>(var)] -= threshold;
                if (l == s.r() - 1 || hit < last) {
                    bucket = col_id[static_cast<std::size_t>(l)][static_cast<std::size_t>(hit)];
                }
                // otherwise the last position cleared: descend into block l+1
            }
            row[static_cast<std::size_t>(bucket)].add_term(rem, coeff);
        }
        table.entries.push_back(std::move(row));
    }
    return table;
}

// Determinant of a square polynomial matrix by cofactor expansion with
// minors memoized on column subsets. row_degrees/col_deficits pin the
// declared multidegree of every minor so that zero minors stay typed.
template <class K>
MultiPoly<K> det_poly_matrix(const StructurePtr& s,
                             const std::vector<std::vector<MultiPoly<K>>>& entries,
                             const std::vector<MultiDegree>& row_degrees,
                             const std::vector<MultiDegree>& col_deficits, const K& zero) {
    const int n = static_cast<int>(entries.size());
    if (n == 0) {
        MultiPoly<K> one(s, MultiDegree::zero(s->r()), zero);
        one.add_term(ExpVec(static_cast<std::size_t>(s->var_count()), 0), one_like(zero));
        return one;
    }
    if (n > 30) throw std::invalid_argument("polynomial determinant too large");

    std::vector<int> bit_count(1u << n, 0);
    for (unsigned m = 1; m < (1u << n); ++m) bit_count[m] = bit_count[m >> 1] + (m & 1);

    std::unordered_map<unsigned, MultiPoly<K>> memo;
    auto expected_degree = [&](unsigned mask) {
        const int k = bit_count[mask];
        MultiDegree d = MultiDegree::zero(s->r());
        for (int t = 0; t < k; ++t) d = d + row_degrees[static_cast<std::size_t>(t)];
        for (int c = 0; c < n; ++c)
            if (mask & (1u << c)) d = d - col_deficits[static_cast<std::size_t>(c)];
        return d;
    };

    // minors by increasing popcount; minor(mask) uses rows 0..k-1
    std::vector<std::vector<unsigned>> by_count(static_cast<std::size_t>(n + 1));
    for (unsigned m = 0; m < (1u << n); ++m)
        by_count[static_cast<std::size_t>(bit_count[m])].push_back(m);

    {
        MultiPoly<K> one(s, MultiDegree::zero(s->r()), zero);
        one.add_term(ExpVec(static_cast<std::size_t>(s->var_count()), 0), one_like(zero));
        memo.emplace(0u, std::move(one));
    }
    for (int k = 1; k <= n; ++k) {
        for (unsigned mask : by_count[static_cast<std::size_t>(k)]) {
            MultiPoly<K> acc(s, expected_degree(mask), zero);
            const int row = k - 1;
            int t = 0;
            for (int c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                const MultiPoly<K>& entry = entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
                if (!entry.is_zero()) {
                    const MultiPoly<K>& minor = memo.at(mask & ~(1u << c));
                    if (!minor.is_zero()) {
                        MultiPoly<K> term = entry * minor;
                        acc = ((row + t) % 2 == 0) ? acc + term : acc - term;
                    }
                }
                ++t;
            }
            memo.emplace(mask, std::move(acc));
        }
        // minors of lower popcount are dead once this level is done
        if (k >= 2)
            for (unsigned m : by_count[static_cast<std::size_t>(k - 2)]) memo.erase(m);
    }
    return memo.at((1u << n) - 1);
}

template <class K>
MultiPoly<K> det_of_table(const DecompositionTable<K>& table, const K& zero) {
    const GradedStructure& s = *table.s;
    std::vector<MultiDegree> row_degrees;
    for (int t = 0; t < static_cast<int>(table.entries.size()); ++t)
        row_degrees.push_back(
            s.degree(table.poly_order[static_cast<std::size_t>(t)]));
    std::vector<MultiDegree> col_deficits;
    for (const ExpVec& d : table.divisors) col_deficits.push_back(multidegree_of(s, d));
    return det_poly_matrix(table.s, table.entries, row_degrees, col_deficits, zero);
}

// v_l = n_{l+1} + ... + n_{r-1} (0-based blocks).
inline int twist_exponent_base(const GradedStructure& s, int l) {
    int v = 0;
    for (int j = l + 1; j < s.r(); ++j) v += s.dim(j);
    return v;
}

} // namespace detail

template <class K>
DecompositionTable<K> canonical_decompose(const PolySystem<K>& f, const SylvesterIndex& idx) {
    check_index_admissible(*f.structure(), idx);
    return detail::decompose_impl(f, idx, detail::identity_orders(*f.structure()),
                                  detail::identity_poly_order(*f.structure()));
}

// The determinant of the canonical decomposition table, before the
// monomial twist.
template <class K>
MultiPoly<K> decomposition_determinant(const PolySystem<K>& f, const SylvesterIndex& idx) {
    return detail::det_of_table(canonical_decompose(f, idx), f.zero_element());
}

// Sylv_alpha: the determinant of the canonical decomposition times the
// twist monomial prod_{l<r-1} x_{l,n_l}^{(alpha_l[n_l]+1) v_l}. Its
// multidegree is delta - (|alpha_1|, ..., |alpha_r|).
template <class K>
MultiPoly<K> sylvester_form(const PolySystem<K>& f, const SylvesterIndex& idx) {
    const GradedStructure& s = *f.structure();
    DecompositionTable<K> table = canonical_decompose(f, idx);
    MultiPoly<K> d = detail::det_of_table(table, f.zero_element());
    ExpVec twist(static_cast<std::size_t>(s.var_count()), 0);
    for (int l = 0; l + 1 < s.r(); ++l) {
        const int v = detail::twist_exponent_base(s, l);
        const int a_last = idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(s.dim(l))];
        twist[static_cast<std::size_t>(s.var_index(l, s.dim(l)))] = (a_last + 1) * v;
    }
    return d.mul_monomial(twist);
}

template <class K>
MultiPoly<K> twisted_jacobian(const PolySystem<K>& f) {
    return sylvester_form(f, SylvesterIndex::zeros(*f.structure()));
}

// Twisted Jacobian built under permuted variable and polynomial orders;
// its class agrees with the canonical one up to sign.
template <class K>
MultiPoly<K> order_variant_jacobian(const PolySystem<K>& f,
                                    const std::vector<std::vector<int>>& var_perms,
                                    const std::vector<int>& poly_perm) {
    const GradedStructure& s = *f.structure();
    if (static_cast<int>(var_perms.size()) != s.r())
        throw std::invalid_argument("need one variable permutation per block");
    for (int j = 0; j < s.r(); ++j) {
        std::vector<bool> seen(static_cast<std::size_t>(s.dim(j) + 1), false);
        if (static_cast<int>(var_perms[static_cast<std::size_t>(j)].size()) != s.dim(j) + 1)
            throw std::invalid_argument("variable permutation arity mismatch");
        for (int k : var_perms[static_cast<std::size_t>(j)]) {
            if (k < 0 || k > s.dim(j) || seen[static_cast<std::size_t>(k)])
                throw std::invalid_argument("invalid variable permutation");
            seen[static_cast<std::size_t>(k)] = true;
        }
    }
    {
        std::vector<bool> seen(static_cast<std::size_t>(s.poly_count()), false);
        if (static_cast<int>(poly_perm.size()) != s.poly_count())
            throw std::invalid_argument("polynomial permutation arity mismatch");
        for (int i : poly_perm) {
            if (i < 0 || i >= s.poly_count() || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("invalid polynomial permutation");
            seen[static_cast<std::size_t>(i)] = true;
        }
    }

    DecompositionTable<K> table =
        detail::decompose_impl(f, SylvesterIndex::zeros(s), var_perms, poly_perm);
    MultiPoly<K> d = detail::det_of_table(table, f.zero_element());
    ExpVec twist(static_cast<std::size_t>(s.var_count()), 0);
    for (int l = 0; l + 1 < s.r(); ++l) {
        const int v = detail::twist_exponent_base(s, l);
        const int last_var = var_perms[static_cast<std::size_t>(l)][static_cast<std::size_t>(s.dim(l))];
        twist[static_cast<std::size_t>(s.var_index(l, last_var))] = v;
    }
    return d.mul_monomial(twist);
}

// Determinant of iterated partial derivatives prescribed by the Euler
// expansions, times the same twist as the twisted Jacobian. Restricted
// to characteristic zero.
template <class K>
MultiPoly<K> jacobian_determinant(const PolySystem<K>& f)
    requires std::is_same_v<K, Rational>
{
    const GradedStructure& s = *f.structure();
    std::vector<std::vector<MultiPoly<K>>> entries;
    std::vector<MultiDegree> row_degrees;
    std::vector<MultiDegree> col_deficits;
    bool deficits_done = false;
    for (int i = 0; i < s.poly_count(); ++i) {
        std::vector<MultiPoly<K>> row;
        MultiPoly<K> prefix = f[i];
        for (int l = 0; l < s.r(); ++l) {
            const int top = (l == s.r() - 1) ? s.dim(l) : s.dim(l) - 1;
            for (int k = 0; k <= top; ++k) {
                row.push_back(prefix.derivative(l, k));
                if (!deficits_done) {
                    MultiDegree deficit = s.degree(i) - row.back().multidegree();
                    col_deficits.push_back(std::move(deficit));
                }
            }
            if (l < s.r() - 1) prefix = prefix.derivative(l, s.dim(l));
        }
        deficits_done = true;
        entries.push_back(std::move(row));
        row_degrees.push_back(s.degree(i));
    }
    MultiPoly<K> d =
        detail::det_poly_matrix(f.structure(), entries, row_degrees, col_deficits, f.zero_element());
    ExpVec twist(static_cast<std::size_t>(s.var_count()), 0);
    for (int l = 0; l + 1 < s.r(); ++l)
        twist[static_cast<std::size_t>(s.var_index(l, s.dim(l)))] =
            detail::twist_exponent_base(s, l);
    return d.mul_monomial(twist);
}

} // namespace multielim

#endif
