#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include "qlat/bc.hpp"
#include "qlat/qlat1.hpp"

using namespace qlat;

namespace {

std::vector<QModZ> labels(long bmax) {
    std::vector<QModZ> out{QModZ(0, 1)};
    for (long b = 2; b <= bmax; ++b)
        for (long a = 1; a < b; ++a)
            if (lgcd(a, b) == 1) out.push_back(QModZ(a, b));
    return out;
}

std::vector<BCMonomial> pool(long bound) {
    std::vector<BCMonomial> out;
    for (long n = 1; n <= bound; ++n)
        for (long m = 1; m <= bound; ++m) {
            if (lgcd(n, m) != 1) continue;
            for (const QModZ& r : labels(bound)) out.push_back({n, r, m});
        }
    return out;
}

}  // namespace

TEST_CASE("generator relations") {
    BCElement one = BCElement::one();
    // isometry: mu_n* mu_n = 1
    for (long n : {2L, 3L, 6L})
        CHECK(bc_product(BCElement(bc_mu_star(n)), BCElement(bc_mu(n))) == one);
    // semigroup: mu_2 mu_3 = mu_6
    CHECK(bc_product(BCElement(bc_mu(2)), BCElement(bc_mu(3))) == BCElement(bc_mu(6)));
    // character group: e(r) e(s) = e(r+s)
    CHECK(bc_product(BCElement(bc_e(QModZ(1, 3))), BCElement(bc_e(QModZ(1, 2)))) ==
          BCElement(bc_e(QModZ(5, 6))));
    // twisting: e(r) mu_n = mu_n e(nr)
    CHECK(bc_product(BCElement(bc_e(QModZ(1, 2))), BCElement(bc_mu(2))) ==
          BCElement(bc_mu(2)));
    CHECK(bc_product(BCElement(bc_e(QModZ(1, 4))), BCElement(bc_mu(2))) ==
          BCElement(BCMonomial{2, QModZ(1, 2), 1}));
    // averaging: mu_n e(r) mu_n* = (1/n) sum_{ns=r} e(s)
    BCElement avg;
    for (const QModZ& s : QModZ(1, 2).divide(2)) avg = avg + Rat(1, 2) * BCElement(bc_e(s));
    CHECK(bc_product(bc_product(BCElement(bc_mu(2)), BCElement(bc_e(QModZ(1, 2)))),
                     BCElement(bc_mu_star(2))) == avg);
}

TEST_CASE("adjoint and eigenvalues") {
    BCMonomial x{2, QModZ(1, 3), 5};
    CHECK(bc_adjoint(bc_adjoint(BCElement(x))) == BCElement(x));
    CHECK(bc_eigenvalue(BCElement(x)) == Rat(2, 5));
    CHECK(bc_eigenvalue(BCElement(bc_e(QModZ(1, 7)))) == Rat(1));
    // mixed eigenvalues are not eigenvectors
    CHECK_FALSE(bc_eigenvalue(BCElement(bc_mu(2)) + BCElement(bc_mu(3))).has_value());
    auto tw = bc_time_evolution(1.0, BCElement(bc_mu(2)));
    CHECK(std::abs(tw.begin()->second - std::polar(1.0, std::log(2.0))) < 1e-12);
}

TEST_CASE("normal-form products match the groupoid picture") {
    auto ms = pool(4);
    for (const auto& x : ms)
        for (const auto& y : ms) CHECK(bc_oracle_check(x, y));
}

TEST_CASE("product associativity on random triples") {
    auto ms = pool(4);
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<size_t> pick(0, ms.size() - 1);
    for (int i = 0; i < 300; ++i) {
        BCElement a(ms[pick(rng)]), b(ms[pick(rng)]), c(ms[pick(rng)]);
        CHECK(bc_product(bc_product(a, b), c) == bc_product(a, bc_product(b, c)));
    }
}

TEST_CASE("equilibrium values glue across the phase transition") {
    QModZ half(1, 2);
    for (double beta : {0.25, 0.5, 0.75, 1.0})
        CHECK(std::abs(kms_low(beta, half) - (std::pow(2.0, 1.0 - beta) - 1.0)) < 1e-10);
    for (double beta : {1.001, 1.5, 3.0}) {
        auto v = kms_high(beta, GroundStateLabel{2, 1}, half, 4000);
        CHECK(v.closed_form);
        CHECK(std::abs(v.value - std::complex<double>(std::pow(2.0, 1.0 - beta) - 1.0)) < 1e-10);
    }
    // low-temperature formal values: ratio form vs Euler product form
    for (long b = 1; b <= 30; ++b)
        for (long e : {-2L, -1L, 0L, 1L, 2L, 3L})
            CHECK(kms_low_formal(e, b) == kms_low_product_formal(e, b));
}

TEST_CASE("eigenvector form of the equilibrium condition") {
    auto ms = pool(3);
    for (const auto& x : ms)
        for (const auto& y : ms) {
            auto r = kms_eigen_check(3.0, BCElement(x), BCElement(y));
            CHECK_MESSAGE(r.ok, x.str(), " ", y.str(), " ", r.witness);
        }
}

TEST_CASE("symmetry action and intertwining") {
    CHECK(symmetry_act(2, 5, BCElement(bc_e(QModZ(1, 5)))) == BCElement(bc_e(QModZ(2, 5))));
    CHECK(symmetry_act(1, 5, BCElement(bc_e(QModZ(1, 5)))) == BCElement(bc_e(QModZ(1, 5))));
    for (long N = 1; N <= 12; ++N)
        for (long k = 1; k < std::max(2L, N); ++k) {
            if (lgcd(k, N) != 1) continue;
            for (long a = 0; a < N; ++a) {
                if (N > 1 && lgcd(a, N) != 1) continue;
                CHECK(intertwine_check(GroundStateLabel{N, 1}, k, QModZ(a, N)));
            }
        }
}

TEST_CASE("phase states") {
    for (long N = 0; N <= 12; ++N) {
        std::vector<std::vector<Cyclo>> th;
        for (long m = 0; m <= N; ++m) th.push_back(phase_state(N, m));
        for (long m = 0; m <= N; ++m)
            for (long mp = 0; mp <= N; ++mp)
                CHECK(phase_inner(th[m], th[mp]) == Cyclo(m == mp ? 1 : 0));
        // the m-th state is the character twist of the uniform state
        for (long m = 0; m <= N; ++m) CHECK(rep_e(QModZ(m, N + 1), th[0]) == th[m]);
    }
}

TEST_CASE("renormalized conditional expectation") {
    for (long n : {2L, 3L}) {
        CHECK(renorm_identity_check(n, {}));
        CHECK(renorm_identity_check(n, {QModZ(1, 12)}));
        CHECK(renorm_identity_check(n, {QModZ(1, 12), QModZ(11, 12)}));
        CHECK(renorm_identity_check(n, {QModZ(5, 12), QModZ(1, 12), QModZ(7, 12)}));
    }
}
