#ifndef MULTIELIM_MONOMIAL_HPP
#define MULTIELIM_MONOMIAL_HPP

#include <vector>

#include "multielim/structure.hpp"

namespace multielim {

// Dense exponent vector over all variables, blocks concatenated in
// order. Length = structure.var_count().
using ExpVec = std::vector<int>;

int block_degree(const GradedStructure& s, const ExpVec& e, int block);
MultiDegree multidegree_of(const GradedStructure& s, const ExpVec& e);

// Monomial order used for every row/column indexing in the library:
// blocks compared in order 1..r, graded reverse lexicographic inside
// each block. Returns negative/zero/positive like a three-way compare;
// "smaller" monomials are listed first in a basis.
int exp_compare(const GradedStructure& s, const ExpVec& a, const ExpVec& b);
inline bool exp_less(const GradedStructure& s, const ExpVec& a, const ExpVec& b) {
    return exp_compare(s, a, b) < 0;
}

inline ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// All monomials of multidegree nu in the order above. Empty when some
// component of nu is negative.
std::vector<ExpVec> monomial_basis(const GradedStructure& s, const MultiDegree& nu);

// prod_j binom(nu_j + n_j, n_j); 0 when some component is negative.
long long monomial_count(const GradedStructure& s, const MultiDegree& nu);

long long binomial(long long n, long long k);

} // namespace multielim

#endif
