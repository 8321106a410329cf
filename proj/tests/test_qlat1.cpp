#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlat/arith.hpp"
#include "qlat/qlat1.hpp"

using namespace qlat;

TEST_CASE("commensurability is scale-rational") {
    CHECK(commensurable_1d({Rat(1), 4, 1}, {Rat(1, 2), 4, 2}));
    CHECK_FALSE(commensurable_1d({Rat(1), 4, 1}, {Rat(1), 4, 3}));
}

TEST_CASE("groupoid functions: algebra laws") {
    GFunc f = bc_to_groupoid(BCElement(BCMonomial{2, QModZ(1, 3), 1}));
    GFunc g = bc_to_groupoid(BCElement(BCMonomial{1, QModZ(1, 4), 3}));
    CHECK(f.adjoint().adjoint() == f);
    CHECK(f.convolve(g).adjoint() == g.adjoint().convolve(f.adjoint()));
    GFunc one = bc_to_groupoid(BCElement::one());
    CHECK(one.convolve(f) == f);
    CHECK(f.convolve(one) == f);
    // character values are exact roots of unity
    GFunc e = GFunc::delta_e(QModZ(1, 3));
    CHECK(e.eval(Rat(1), 1) == Cyclo::zeta_pow(3, 1));
    CHECK(e.eval(Rat(1), 3) == Cyclo(1));
    CHECK(e.eval(Rat(2), 1) == Cyclo(0));
}

TEST_CASE("representation is multiplicative on monomials") {
    std::vector<BCMonomial> ms;
    for (long n : {1L, 2L, 3L})
        for (long m : {1L, 2L, 5L}) {
            if (lgcd(n, m) != 1) continue;
            for (auto r : {QModZ(0, 1), QModZ(1, 2), QModZ(2, 5)}) ms.push_back({n, r, m});
        }
    for (const auto& x : ms)
        for (const auto& y : ms) CHECK(bc_oracle_check(x, y));
}

TEST_CASE("weight-0 generators at finite level") {
    QLattice1 l{Rat(1), 12, 1};
    // value of a character on the lattice is the expected root of unity
    CHECK(e_of_a(QModZ(1, 12), l) == Cyclo::zeta_pow(12, 1));
    // e1 vanishes at the symmetric label 1/2
    CHECK(e1(QModZ(1, 2), QLattice1{Rat(1), 2, 1}) == Cyclo(0));
    // constant terms of the generating polynomials
    for (unsigned k = 1; k <= 8; ++k) CHECK(pk_poly(k).coeff(0) == lambda_k(k));
    // projection values
    CHECK(pi_n(2, QLattice1{Rat(1), 4, 2}) == 1);
    CHECK(pi_n(2, QLattice1{Rat(1), 4, 1}) == 0);
}

TEST_CASE("division identities") {
    for (long N = 2; N <= 8; ++N) {
        auto r = check_moebius_div(N);
        CHECK_MESSAGE(r.ok, "N=", N, " ", r.witness);
    }
    for (long N = 2; N <= 6; ++N)
        for (unsigned k = 1; k <= 4; ++k) {
            auto r = check_div_rel(N, k);
            CHECK_MESSAGE(r.ok, "N=", N, " k=", k, " ", r.witness);
        }
    for (long N = 2; N <= 4; ++N)
        for (unsigned k = 1; k <= 4; ++k)
            for (long b : {1L, 2L, 3L, 4L, 6L})
                for (long a = 0; a < b; ++a) {
                    if (b > 1 && lgcd(a, b) != 1) continue;
                    auto r = check_div1(N, k, QModZ(a, b));
                    CHECK_MESSAGE(r.ok, "N=", N, " k=", k, " x=", a, "/", b, " ", r.witness);
                }
    CHECK(pi2_identity().ok);
}

TEST_CASE("products of degree-1 generators span the characters") {
    for (long N : {2L, 3L, 4L}) {
        auto r = span_check(N);
        CHECK_MESSAGE(r.ok, "N=", N, " ", r.witness);
    }
}

TEST_CASE("level functions") {
    // pointwise product of level functions matches the product of generators
    LevelFn a = ek_fn(1, QModZ(1, 3), 12);
    LevelFn b = ek_fn(1, QModZ(1, 4), 12);
    LevelFn ab = levelfn_mul(a, b);
    QLattice1 l{Rat(1), 12, 5};
    CHECK(ab.v[5] == e1(QModZ(1, 3), l) * e1(QModZ(1, 4), l));
    CHECK(levelfn_eq(a, a));
    CHECK_FALSE(levelfn_eq(a, b));
}
