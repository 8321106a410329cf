#pragma once

#include <string>
#include <vector>
#include "qlat/rat.hpp"

namespace qlat {

// Finite-index sublattice of Z^2 in canonical form: basis (a,b), (0,d) with
// a, d > 0 and 0 <= b < d; index = a*d.  Membership: (x,y) in L iff a | x and
// y == (x/a)*b mod d.
struct Sublattice {
    long a = 1;
    long b = 0;
    long d = 1;

    friend auto operator<=>(const Sublattice&, const Sublattice&) = default;
    long index() const { return a * d; }
    bool contains(long x, long y) const;
    std::string str() const;
};

// lattice generated by the columns of [[m00,m01],[m10,m11]], det != 0
Sublattice hnf(long m00, long m01, long m10, long m11);
// lattice generated by a spanning set of integer vectors (full rank required)
Sublattice hnf_of_vectors(const std::vector<std::pair<long, long>>& vs);

Sublattice meet(const Sublattice& L1, const Sublattice& L2);

std::vector<Sublattice> enumerate_index(long n);    // all of index n
std::vector<Sublattice> enumerate_SN(long N);       // N Z^2 <= L <= Z^2

// 2x2 rational matrix
struct Mat2 {
    Rat m00, m01, m10, m11;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 scalar(const Rat& s) { return {s, 0, 0, s}; }
    Rat det() const { return m00 * m11 - m01 * m10; }
    Mat2 inverse() const;
    bool is_integral() const;
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) = default;
    std::string str() const;
};

// partial isometry symbol mu(g, L): g in GL2+(Q) with g(L) <= Z^2
struct MuSymbol {
    Mat2 g;
    Sublattice L;
};

MuSymbol mu_make(const Mat2& g, const Sublattice& L);  // validates g(L) <= Z^2
MuSymbol mu_product(const MuSymbol& x, const MuSymbol& y);
MuSymbol mu_adjoint(const MuSymbol& x);

// left-coset representatives [[a,b],[0,d]], ad = n, 0 <= b < d, gcd(a,b,d)=1
std::vector<std::array<long, 3>> double_coset_reps(long n);
Int omega(long n);  // n prod_{p|n} (1 + 1/p)

// brute-force coset count for the prime-power double class at p^l against the
// diagonal divisibility pattern (p^va, p^vb), 0 <= va <= vb
long omega_ab(long p, long l, long va, long vb);

Int sl2_order(long N);                  // |SL_2(Z/NZ)| closed form
long sl2_order_enumerated(long N);      // exhaustive count (small N)

}  // namespace qlat
