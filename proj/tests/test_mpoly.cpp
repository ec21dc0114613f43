#include <doctest.h>

#include <sstream>

#include "multielim/mpoly.hpp"
#include "multielim/system_io.hpp"

using namespace multielim;

namespace {

StructurePtr bilinear3() {
    return make_uniform_structure({1, 1}, MultiDegree{1, 1});
}

// x0_a * x1_b on P^1 x P^1
ExpVec bl(int a0, int a1, int b0, int b1) { return ExpVec{a0, a1, b0, b1}; }

} // namespace

TEST_CASE("monomial basis counts") {
    const auto s11 = bilinear3();
    CHECK(monomial_basis(*s11, MultiDegree{1, 1}).size() == 4);
    CHECK(monomial_count(*s11, MultiDegree{1, 1}) == 4);

    const auto s22 = make_uniform_structure({2, 2}, MultiDegree{3, 3});
    CHECK(monomial_count(*s22, MultiDegree{12, 12}) == 8281);
    CHECK(monomial_count(*s22, MultiDegree{10, 10}) == 4356);
    CHECK(monomial_basis(*s22, MultiDegree{12, 12}).size() == 8281);

    CHECK(monomial_basis(*s11, MultiDegree{-1, 2}).empty());
    CHECK(monomial_count(*s11, MultiDegree{-1, 2}) == 0);
}

TEST_CASE("monomial basis counts match enumeration for small degrees") {
    const auto s = make_uniform_structure({2, 1}, MultiDegree{2, 2});
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            CHECK(static_cast<long long>(monomial_basis(*s, MultiDegree{a, b}).size()) ==
                  monomial_count(*s, MultiDegree{a, b}));
}

TEST_CASE("monomial order is deterministic and strict") {
    const auto s = bilinear3();
    const auto basis = monomial_basis(*s, MultiDegree{2, 1});
    for (std::size_t t = 1; t < basis.size(); ++t) {
        CHECK(exp_less(*s, basis[t - 1], basis[t]));
        CHECK_FALSE(exp_less(*s, basis[t], basis[t - 1]));
    }
}

TEST_CASE("polynomial arithmetic") {
    const auto s = bilinear3();
    const Rational one(1);

    // (x00 + x01) in block 0 times itself is not multihomogeneous of
    // bidegree (1,1); use honest bidegree (1,1) forms instead.
    MultiPoly<Rational> p(s, MultiDegree{1, 1}, Rational());
    p.add_term(bl(1, 0, 1, 0), one);
    p.add_term(bl(0, 1, 0, 1), one);
    MultiPoly<Rational> q(s, MultiDegree{1, 1}, Rational());
    q.add_term(bl(1, 0, 1, 0), one);
    q.add_term(bl(0, 1, 0, 1), -one);

    const auto prod = p * q;
    CHECK(prod.multidegree() == MultiDegree{2, 2});
    CHECK(prod.coeff(bl(2, 0, 2, 0)) == one);
    CHECK(prod.coeff(bl(0, 2, 0, 2)) == -one);
    CHECK(prod.coeff(bl(1, 1, 1, 1)).is_zero());

    const auto zero = p + p.scalar_mul(Rational(-1));
    CHECK(zero.is_zero());
    CHECK(zero.term_count() == 0);
}

TEST_CASE("derivative and Euler identity") {
    const auto s = make_uniform_structure({1, 1}, MultiDegree{2, 1});
    MultiPoly<Rational> f(s, MultiDegree{2, 1}, Rational());
    // x00^2 * x11 plus a second term to make it interesting
    f.add_term(ExpVec{2, 0, 0, 1}, Rational(1));
    f.add_term(ExpVec{1, 1, 1, 0}, Rational(5));

    const auto d = f.derivative(0, 0);
    CHECK(d.multidegree() == MultiDegree{1, 1});
    CHECK(d.coeff(ExpVec{1, 0, 0, 1}) == Rational(2));
    CHECK(d.coeff(ExpVec{0, 1, 1, 0}) == Rational(5));

    // sum_k x_{j,k} dF/dx_{j,k} = d_j F per block
    for (int block = 0; block < 2; ++block) {
        MultiPoly<Rational> acc(s, f.multidegree(), Rational());
        for (int k = 0; k <= s->dim(block); ++k) {
            ExpVec xv(static_cast<std::size_t>(s->var_count()), 0);
            xv[static_cast<std::size_t>(s->var_index(block, k))] = 1;
            acc = acc + f.derivative(block, k).mul_monomial(xv);
        }
        CHECK(acc == f.scalar_mul(Rational(static_cast<long>(f.multidegree()[block]))));
    }
}

TEST_CASE("degree law under multiplication") {
    const auto s = make_uniform_structure({1, 2}, MultiDegree{2, 2});
    const auto f = random_system_fp(s, kDefaultPrime, 7);
    const auto prod = f[0] * f[1];
    CHECK(prod.multidegree() == f[0].multidegree() + f[1].multidegree());
}

TEST_CASE("structure mismatch is an error") {
    const auto s1 = bilinear3();
    const auto s2 = make_uniform_structure({1, 2}, MultiDegree{1, 1});
    MultiPoly<Rational> a(s1, MultiDegree{1, 1}, Rational());
    MultiPoly<Rational> b(s2, MultiDegree{1, 1}, Rational());
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("random systems are deterministic and dense") {
    const auto s = bilinear3();
    const auto f1 = random_system_fp(s, kDefaultPrime, 123);
    const auto f2 = random_system_fp(s, kDefaultPrime, 123);
    const auto f3 = random_system_fp(s, kDefaultPrime, 124);
    for (int i = 0; i < 3; ++i) {
        CHECK(f1[i] == f2[i]);
        CHECK(f1[i].term_count() == 4);
    }
    CHECK_FALSE(f1[0] == f3[0]);

    const auto q = random_system_q(s, 99);
    CHECK(q[0].term_count() == 4);
}

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(make_structure({0, 1}, {MultiDegree{1, 1}, MultiDegree{1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_uniform_structure({1, 1}, MultiDegree{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_structure({1, 1}, {MultiDegree{1, 1}, MultiDegree{1, 1}}),
                    std::invalid_argument); // needs n+1 = 3 degrees
}

TEST_CASE("json round trip") {
    const auto s = bilinear3();
    const auto f = random_system_fp(s, kDefaultPrime, 5);
    const nlohmann::json j = system_to_json(f);
    const auto loaded = system_from_json(j);
    REQUIRE(std::holds_alternative<PolySystem<Fp>>(loaded));
    const auto& g = std::get<PolySystem<Fp>>(loaded);
    for (int i = 0; i < 3; ++i) CHECK(f[i] == g[i]);

    const auto fq = random_system_q(s, 5);
    const auto jq = system_to_json(fq);
    const auto loadedq = system_from_json(jq);
    REQUIRE(std::holds_alternative<PolySystem<Rational>>(loadedq));
    const auto& gq = std::get<PolySystem<Rational>>(loadedq);
    for (int i = 0; i < 3; ++i) CHECK(fq[i] == gq[i]);
}
