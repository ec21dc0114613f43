#include <doctest.h>

#include "multielim/elim.hpp"
#include "multielim/forms.hpp"

using namespace multielim;

namespace {

// membership of p in the ideal of f at p's own degree
template <class K>
bool in_ideal(const PolySystem<K>& f, const MultiPoly<K>& p) {
    const GradedStructure& s = *f.structure();
    const BasisIndex rows(s, p.multidegree());
    const Matrix<K> m =
        ideal_map_matrix(s, generator_view(f), p.multidegree(), f.zero_element());
    return in_column_space(m, coefficient_vector(p, rows));
}

// canonical routing invariants: inside block l's bucket j every
// remaining exponent at an earlier position stays at or below its
// threshold minus one, and every block passed through during descent
// kept its non-last positions below threshold.
template <class K>
void check_canonical_conditions(const DecompositionTable<K>& table) {
    const GradedStructure& s = *table.s;
    for (std::size_t row = 0; row < table.entries.size(); ++row) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            const auto [block, pos] = table.columns[c];
            for (const auto& [e, coeff] : table.entries[row][c].terms()) {
                for (int l = 0; l < block; ++l)
                    for (int k = 0; k < s.dim(l); ++k)
                        CHECK(e[static_cast<std::size_t>(s.var_index(l, k))] <=
                              table.idx.alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)]);
                for (int k = 0; k < pos; ++k)
                    CHECK(e[static_cast<std::size_t>(s.var_index(block, k))] <=
                          table.idx.alphas[static_cast<std::size_t>(block)][static_cast<std::size_t>(k)]);
            }
        }
    }
}

} // namespace

TEST_CASE("single-graded decomposition routes by smallest index") {
    // F = a x0^2 + b x0 x1 + c x1^2 with zero index: buckets
    // (a x0 + b x1, c x1)
    const auto s = make_structure({1}, {MultiDegree{2}, MultiDegree{2}});
    MultiPoly<Rational> f0(s, MultiDegree{2}, Rational());
    f0.add_term(ExpVec{2, 0}, Rational(3));  // a = 3
    f0.add_term(ExpVec{1, 1}, Rational(5));  // b = 5
    f0.add_term(ExpVec{0, 2}, Rational(7));  // c = 7
    MultiPoly<Rational> f1(s, MultiDegree{2}, Rational());
    f1.add_term(ExpVec{2, 0}, Rational(1));
    const PolySystem<Rational> f(s, {f0, f1});

    const auto table = canonical_decompose(f, SylvesterIndex::zeros(*s));
    REQUIRE(table.columns.size() == 2);
    CHECK(table.entries[0][0].coeff(ExpVec{1, 0}) == Rational(3));
    CHECK(table.entries[0][0].coeff(ExpVec{0, 1}) == Rational(5));
    CHECK(table.entries[0][0].term_count() == 2);
    CHECK(table.entries[0][1].coeff(ExpVec{0, 1}) == Rational(7));
    CHECK(table.entries[0][1].term_count() == 1);

    CHECK(table.reconstruct_row(0) == f0);
    CHECK(table.reconstruct_row(1) == f1);
}

TEST_CASE("index (1,0) sends high x0 powers to bucket 0") {
    const auto s = make_structure({1}, {MultiDegree{3}, MultiDegree{2}});
    const auto f = random_system_fp(s, kDefaultPrime, 17);
    SylvesterIndex idx = SylvesterIndex::zeros(*s);
    idx.alphas[0] = {1, 0}; // |alpha| = 1 < min d = 2
    const auto table = canonical_decompose(f, idx);
    check_canonical_conditions(table);
    // bucket 0 holds exactly the monomials with exp(x0) >= 2, divided by x0^2
    for (const auto& [e, c] : f[0].terms()) {
        if (e[0] >= 2) {
            ExpVec q = e;
            q[0] -= 2;
            CHECK(table.entries[0][0].coeff(q) == c);
        } else {
            ExpVec q = e;
            q[1] -= 1;
            CHECK(table.entries[0][1].coeff(q) == c);
        }
    }
    for (int i = 0; i < 2; ++i) CHECK(table.reconstruct_row(i) == f[i]);
}

TEST_CASE("reconstruction identity holds for random systems and indices") {
    const auto s21 = make_uniform_structure({2, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s21, kDefaultPrime, 23);
    for (const MultiDegree& norms :
         {MultiDegree{0, 0}, MultiDegree{1, 0}, MultiDegree{1, 1}, MultiDegree{0, 1}}) {
        for (const SylvesterIndex& idx : sylvester_indices(*s21, norms)) {
            const auto table = canonical_decompose(f, idx);
            check_canonical_conditions(table);
            for (int i = 0; i < f.size(); ++i) CHECK(table.reconstruct_row(i) == f[i]);
        }
    }
}

TEST_CASE("sylvester form degrees") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 31);
    SylvesterIndex idx = SylvesterIndex::zeros(*s);
    idx.alphas[0] = {1, 0};
    const auto sylv = sylvester_form(f, idx);
    CHECK(sylv.multidegree() == MultiDegree{3, 4}); // delta = (4,4), |alpha_1| = 1
    CHECK_FALSE(sylv.is_zero());

    for (const MultiDegree& norms : {MultiDegree{1, 1}, MultiDegree{0, 1}}) {
        for (const SylvesterIndex& ix : sylvester_indices(*s, norms)) {
            const auto g = sylvester_form(f, ix);
            CHECK(g.multidegree() == critical_degree(*s) - ix.block_norms());
        }
    }
}

TEST_CASE("all-zero index gives the twisted Jacobian of degree delta") {
    const auto s = make_uniform_structure({2, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 47);
    const auto lam = twisted_jacobian(f);
    CHECK(lam == sylvester_form(f, SylvesterIndex::zeros(*s)));
    CHECK(lam.multidegree() == critical_degree(*s));
    CHECK_FALSE(lam.is_zero());
}

TEST_CASE("determinant degree drops by the tail dimensions") {
    // dims (2,2), five generic (3,3) forms: deg D = (10,12)
    const auto s = make_uniform_structure({2, 2}, MultiDegree{3, 3});
    const auto f = random_system_fp(s, kDefaultPrime, 3);
    const auto d = decomposition_determinant(f, SylvesterIndex::zeros(*s));
    CHECK(d.multidegree() == MultiDegree{10, 12});
    CHECK_FALSE(d.is_zero());
}

TEST_CASE("degree-zero twisted Jacobian of two linear forms") {
    const auto s = make_uniform_structure({1}, MultiDegree{1});
    const auto f = random_system_q(s, 11);
    const auto lam = twisted_jacobian(f);
    CHECK(lam.multidegree() == MultiDegree{0});
    // the 2x2 coefficient determinant
    const Rational expect = f[0].coeff(ExpVec{1, 0}) * f[1].coeff(ExpVec{0, 1}) -
                            f[1].coeff(ExpVec{1, 0}) * f[0].coeff(ExpVec{0, 1});
    CHECK(lam.coeff(ExpVec{0, 0}) == expect);
}

TEST_CASE("monomial multiple of the determinant lies in the ideal") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 59);
    const auto d = decomposition_determinant(f, SylvesterIndex::zeros(*s));
    ExpVec sigma(static_cast<std::size_t>(s->var_count()), 0);
    for (int j = 0; j < s->r(); ++j) sigma[static_cast<std::size_t>(s->var_index(j, s->dim(j)))] = 1;
    CHECK(in_ideal(f, d.mul_monomial(sigma)));
    // the twisted Jacobian itself is not in the ideal for generic systems
    CHECK_FALSE(in_ideal(f, twisted_jacobian(f)));
}

TEST_CASE("sylvester forms are linear in each polynomial's coefficients") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 71);
    const Fp c(12345, kDefaultPrime);
    SylvesterIndex idx = SylvesterIndex::zeros(*s);
    idx.alphas[1] = {0, 1};
    const auto base = sylvester_form(f, idx);
    for (int k = 0; k < f.size(); ++k) {
        std::vector<MultiPoly<Fp>> polys = f.polys();
        polys[static_cast<std::size_t>(k)] = polys[static_cast<std::size_t>(k)].scalar_mul(c);
        const PolySystem<Fp> scaled(s, polys);
        CHECK(sylvester_form(scaled, idx) == base.scalar_mul(c));
    }
}

TEST_CASE("jacobian determinant is proportional to the twisted Jacobian") {
    // all degrees 1: the factor prod d_{i,j} is 1, so J - Lambda_0 in I
    const auto s = make_uniform_structure({1, 1}, MultiDegree{1, 1});
    const auto f = random_system_q(s, 7);
    const auto j = jacobian_determinant(f);
    const auto lam = twisted_jacobian(f);
    CHECK(j.multidegree() == lam.multidegree());
    CHECK(in_ideal(f, j - lam));
}

TEST_CASE("order variants agree up to sign modulo the ideal") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 83);
    const auto lam = twisted_jacobian(f);

    const std::vector<std::vector<int>> id_vars{{0, 1}, {0, 1}};
    const std::vector<int> id_polys{0, 1, 2};
    CHECK(order_variant_jacobian(f, id_vars, id_polys) == lam);

    const auto swapped_polys = order_variant_jacobian(f, id_vars, {1, 0, 2});
    const bool minus = in_ideal(f, swapped_polys - lam);
    const bool plus = in_ideal(f, swapped_polys + lam);
    CHECK(minus != plus); // exactly one sign works for generic systems

    const auto swapped_vars = order_variant_jacobian(f, {{1, 0}, {0, 1}}, id_polys);
    const bool vminus = in_ideal(f, swapped_vars - lam);
    const bool vplus = in_ideal(f, swapped_vars + lam);
    CHECK((vminus || vplus));
}

TEST_CASE("inadmissible index names the violated block") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 1});
    const auto f = random_system_fp(s, kDefaultPrime, 97);
    SylvesterIndex idx = SylvesterIndex::zeros(*s);
    idx.alphas[1] = {1, 0}; // norm 1 but min d in block 1 is 1
    CHECK_THROWS_WITH_AS(sylvester_form(f, idx), doctest::Contains("block 1"),
                         std::invalid_argument);
}
