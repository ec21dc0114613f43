#ifndef MULTIELIM_ELIM_HPP
#define MULTIELIM_ELIM_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multielim/forms.hpp"
#include "multielim/linalg.hpp"
#include "multielim/mpoly.hpp"
#include "multielim/regions.hpp"

namespace multielim {

struct KoszulColumn {
    int poly;
    ExpVec monomial;
};

// Index of the monomial basis of degree nu.
class BasisIndex {
public:
    BasisIndex(const GradedStructure& s, const MultiDegree& nu) : list_(monomial_basis(s, nu)) {
        for (std::size_t t = 0; t < list_.size(); ++t) pos_.emplace(list_[t], static_cast<int>(t));
    }

    int size() const { return static_cast<int>(list_.size()); }
    const std::vector<ExpVec>& list() const { return list_; }
    int position(const ExpVec& e) const {
        auto it = pos_.find(e);
        if (it == pos_.end()) throw std::logic_error("monomial outside basis");
        return it->second;
    }

private:
    std::vector<ExpVec> list_;
    std::map<ExpVec, int> pos_;
};

template <class K>
std::vector<K> coefficient_vector(const MultiPoly<K>& p, const BasisIndex& rows) {
    std::vector<K> v(static_cast<std::size_t>(rows.size()), p.zero_element());
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(rows.position(e))] = c;
    return v;
}

// Columns of the graded map (G_0,...,G_m) -> sum G_i g_i at degree nu
// for an arbitrary generator list; degrees with empty sources simply
// contribute no columns.
template <class K>
std::vector<KoszulColumn> koszul_columns(const GradedStructure& s,
                                         const std::vector<const MultiPoly<K>*>& gens,
                                         const MultiDegree& nu) {
    std::vector<KoszulColumn> cols;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const MultiDegree src = nu - gens[i]->multidegree();
        for (const ExpVec& m : monomial_basis(s, src))
            cols.push_back({static_cast<int>(i), m});
    }
    return cols;
}

template <class K>
Matrix<K> ideal_map_matrix(const GradedStructure& s, const std::vector<const MultiPoly<K>*>& gens,
                           const MultiDegree& nu, const K& zero,
                           std::vector<KoszulColumn>* cols_out = nullptr) {
    const BasisIndex rows(s, nu);
    std::vector<KoszulColumn> cols = koszul_columns(s, gens, nu);
    Matrix<K> m(rows.size(), static_cast<int>(cols.size()), zero);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiPoly<K> prod =
            gens[static_cast<std::size_t>(cols[c].poly)]->mul_monomial(cols[c].monomial);
        for (const auto& [e, v] : prod.terms())
            m(rows.position(e), static_cast<int>(c)) = v;
    }
    if (cols_out) *cols_out = std::move(cols);
    return m;
}

template <class K>
std::vector<const MultiPoly<K>*> generator_view(const PolySystem<K>& f) {
    std::vector<const MultiPoly<K>*> v;
    for (int i = 0; i < f.size(); ++i) v.push_back(&f[i]);
    return v;
}

// Elimination matrix in degree nu: rows indexed by the monomial basis,
// Koszul columns grouped by polynomial then monomial order, Sylvester
// columns (hybrid case) last, ordered by the monomial order on indices.
template <class K>
struct ElimMatrix {
    Matrix<K> matrix;
    std::vector<ExpVec> row_monomials;
    std::vector<KoszulColumn> koszul_cols;
    std::vector<SylvesterIndex> sylvester_cols;
    MultiDegree nu;

    int rows() const { return matrix.rows(); }
    int koszul_count() const { return static_cast<int>(koszul_cols.size()); }
    int sylvester_count() const { return static_cast<int>(sylvester_cols.size()); }
    bool is_square() const { return matrix.rows() == matrix.cols(); }
};

template <class K>
ElimMatrix<K> macaulay_matrix(const PolySystem<K>& f, const MultiDegree& nu) {
    if (!nu.is_nonnegative()) throw std::invalid_argument("nu must be componentwise nonnegative");
    const GradedStructure& s = *f.structure();
    ElimMatrix<K> out{Matrix<K>(0, 0, f.zero_element()), monomial_basis(s, nu), {}, {}, nu};
    out.matrix =
        ideal_map_matrix(s, generator_view(f), nu, f.zero_element(), &out.koszul_cols);
    return out;
}

template <class K>
ElimMatrix<K> hybrid_matrix(const PolySystem<K>& f, const MultiDegree& nu) {
    const GradedStructure& s = *f.structure();
    const NuClass cls = classify_nu(s, nu);
    if (cls.kind != NuKind::hybrid) {
        const MultiDegree delta = critical_degree(s);
        throw std::invalid_argument(
            "nu=" + nu.str() + " is not hybrid-admissible: need nu = delta - mu with delta=" +
            delta.str() + " and 0 <= mu_j < min_i d_{i,j} = " + s.min_degrees().str());
    }
    ElimMatrix<K> out{Matrix<K>(0, 0, f.zero_element()), monomial_basis(s, nu), {}, {}, nu};
    const BasisIndex rows(s, nu);
    std::vector<KoszulColumn> kcols = koszul_columns(s, generator_view(f), nu);
    out.sylvester_cols = sylvester_indices(s, cls.mu);

    Matrix<K> m(rows.size(),
                static_cast<int>(kcols.size() + out.sylvester_cols.size()), f.zero_element());
    for (std::size_t c = 0; c < kcols.size(); ++c) {
        const MultiPoly<K> prod = f[kcols[c].poly].mul_monomial(kcols[c].monomial);
        for (const auto& [e, v] : prod.terms()) m(rows.position(e), static_cast<int>(c)) = v;
    }
    for (std::size_t t = 0; t < out.sylvester_cols.size(); ++t) {
        const MultiPoly<K> sylv = sylvester_form(f, out.sylvester_cols[t]);
        if (sylv.multidegree() != nu) throw std::logic_error("sylvester column degree mismatch");
        const int c = static_cast<int>(kcols.size() + t);
        for (const auto& [e, v] : sylv.terms()) m(rows.position(e), c) = v;
    }
    out.matrix = std::move(m);
    out.koszul_cols = std::move(kcols);
    return out;
}

// Macaulay matrix when nu satisfies the Macaulay condition, hybrid
// matrix when nu = delta - mu with small mu; error otherwise.
template <class K>
ElimMatrix<K> elimination_matrix(const PolySystem<K>& f, const MultiDegree& nu) {
    const NuClass cls = classify_nu(*f.structure(), nu);
    switch (cls.kind) {
        case NuKind::hybrid: return hybrid_matrix(f, nu);
        case NuKind::macaulay: return macaulay_matrix(f, nu);
        default:
            throw std::invalid_argument("nu=" + nu.str() +
                                        " is neither Macaulay- nor hybrid-admissible");
    }
}

// Dimension audit without touching coefficients.
struct Shape {
    long long rows = 0;
    long long koszul_cols = 0;
    long long sylvester_cols = 0;
};

inline Shape shape_only(const GradedStructure& s, const MultiDegree& nu) {
    if (!nu.is_nonnegative()) throw std::invalid_argument("nu must be componentwise nonnegative");
    Shape sh;
    sh.rows = monomial_count(s, nu);
    for (int i = 0; i < s.poly_count(); ++i)
        sh.koszul_cols += monomial_count(s, nu - s.degree(i));
    const NuClass cls = classify_nu(s, nu);
    if (cls.kind == NuKind::hybrid)
        sh.sylvester_cols = monomial_count(s, critical_degree(s) - nu);
    return sh;
}

// Streams the nonzero entries of the elimination matrix in degree nu
// without materializing it; used for exporting matrices beyond the
// dense cap. Hybrid columns are emitted iff `hybrid`.
template <class K>
void for_each_matrix_entry(const PolySystem<K>& f, const MultiDegree& nu, bool hybrid,
                           const std::function<void(long long, long long, const K&)>& emit,
                           long long* rows_out = nullptr, long long* cols_out = nullptr) {
    const GradedStructure& s = *f.structure();
    const BasisIndex rows(s, nu);
    if (rows_out) *rows_out = rows.size();
    long long col = 0;
    for (int i = 0; i < f.size(); ++i) {
        for (const ExpVec& m : monomial_basis(s, nu - s.degree(i))) {
            const MultiPoly<K> prod = f[i].mul_monomial(m);
            for (const auto& [e, v] : prod.terms()) emit(rows.position(e), col, v);
            ++col;
        }
    }
    if (hybrid) {
        const NuClass cls = classify_nu(s, nu);
        if (cls.kind != NuKind::hybrid)
            throw std::invalid_argument("nu=" + nu.str() + " is not hybrid-admissible");
        for (const SylvesterIndex& idx : sylvester_indices(s, cls.mu)) {
            const MultiPoly<K> sylv = sylvester_form(f, idx);
            for (const auto& [e, v] : sylv.terms()) emit(rows.position(e), col, v);
            ++col;
        }
    }
    if (cols_out) *cols_out = col;
}

// Root count by corank of the elimination matrix, cross-checked at
// nu + (1,...,1). The count is only reported when the two coranks
// agree; otherwise the system was not verified zero-dimensional.
struct RootCount {
    bool verified = false;
    long long count = -1;
    long long corank_at_nu = -1;
    long long corank_at_next = -1;
    MultiDegree nu;
};

template <class K>
RootCount count_roots(const PolySystem<K>& f, std::optional<MultiDegree> nu_opt = std::nullopt) {
    const GradedStructure& s = *f.structure();
    RootCount rc;
    rc.nu = nu_opt.value_or(drop_of_rank_min(s));
    const MultiDegree next = rc.nu + MultiDegree::ones(s.r());
    rc.corank_at_nu = corank(elimination_matrix(f, rc.nu).matrix);
    rc.corank_at_next = corank(elimination_matrix(f, next).matrix);
    rc.verified = rc.corank_at_nu == rc.corank_at_next;
    if (rc.verified) rc.count = rc.corank_at_nu;
    return rc;
}

} // namespace multielim

#endif
