#pragma once

#include <cstddef>
#include <vector>

#include "wheelinv/matrix.hpp"

namespace wheelinv {

// Exact rank via fraction-free (Bareiss) elimination, pivoting on the first
// nonzero candidate so the result is deterministic. Row updates are split
// across OpenMP threads. rank_serial is the reference kept for testing; it
// deliberately uses plain rational Gauss elimination instead, so agreement of
// the two is a dual-route check and not just a pragma toggle.
std::size_t rank(const RatMatrix& m);
std::size_t rank_serial(const RatMatrix& m);

// Exact determinant (Bareiss). Square input required.
Rational determinant(const RatMatrix& m);

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recurrence,
// returned highest degree first: {1, a1, ..., an} encodes
// x^n + a1 x^(n-1) + ... + an. Square input required.
std::vector<Rational> charpoly(const RatMatrix& m);

// Positive semidefiniteness for exactly symmetric matrices: with the
// characteristic polynomial written x^n - c1 x^(n-1) + c2 x^(n-2) - ...,
// every ck must be >= 0. Symmetry makes all eigenvalues real, so the
// coefficient signs decide the spectrum's sign. Throws on asymmetric input.
bool is_psd_symmetric(const RatMatrix& m);

// Exact inverse. Fraction-free Gauss-Jordan over integers after clearing row
// denominators, one exact division by the determinant at the end. Throws
// std::invalid_argument on non-square or singular input.
RatMatrix inverse(const RatMatrix& m);

struct RrefResult {
    RatMatrix r;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

// Reduced row echelon form over the rationals, deterministic pivot choice.
RrefResult rref(const RatMatrix& m);

// Moore-Penrose pseudoinverse by rank factorization: with m = F G where F is
// the pivot columns of m and G the nonzero rows of rref(m),
// pinv = G' (G G')^-1 (F' F)^-1 F'. The zero matrix maps to the zero matrix
// of transposed shape. Independent of the closed forms elsewhere in this
// project by construction; used to cross-check them.
RatMatrix mp_pinv_oracle(const RatMatrix& m);

struct PinvReport {
    bool p1 = false;  // a k a == a
    bool p2 = false;  // k a k == k
    bool p3 = false;  // (a k)' == a k
    bool p4 = false;  // (k a)' == k a
    Rational max_abs_residual;

    bool all() const { return p1 && p2 && p3 && p4; }
};

// Exact check of the four Penrose conditions for the pair (a, k).
PinvReport penrose_check(const RatMatrix& a, const RatMatrix& k);

}  // namespace wheelinv
