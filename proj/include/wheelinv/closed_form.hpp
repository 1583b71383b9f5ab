#pragma once

#include <optional>

#include "wheelinv/matrix.hpp"
#include "wheelinv/special_laplacian.hpp"

namespace wheelinv {

// w = (1/4) (5-n, 1, 1, ..., 1)', length n. Satisfies D w = ((n-1)/4) 1.
RatVector w_vector(int n);

// Moore-Penrose inverse of the wheel distance matrix in closed form:
//   K = -1/2 L + (4/(n-1)) w w'
// with L the special Laplacian. Exact, O(n^2) to assemble.
struct ClosedFormInverse {
    int n = 0;
    RatVector w;
    RatMatrix mat;
};

ClosedFormInverse closed_form_pinv(int n);

// Same combination from a caller-supplied Laplacian-like matrix; lets the
// verification sweep feed a deliberately damaged one through the pipeline.
RatMatrix assemble_pinv(const RatMatrix& slap, int n);

// x read as a rim vector of length n-1; true when x_i = x_(n+1-i) for every
// i in [2, n-1] (1-based), the symmetry class all the row products land in.
bool is_in_delta(const RatVector& x);

// Closed form for c^k Circ(u), when one exists for this (n, k):
//   k = 1   (n >= 7): (2, 2, 3, 4, ..., 4, 3, 2)
//   k = m       : (2, ..., 2, 1, 0, 1, 2, ..., 2)
//   k = m-1 (n >= 7): (4, ..., 4, 3, 2, 2, 2, 3, 4, ..., 4)
//   1 < k < m-1 (n >= 9): 2 at positions k+1 and n-k, 3 at k, k+2, n-k-1,
//                         n-k+1, and 4 everywhere else (1-based).
// std::nullopt when n is too small for the shape.
std::optional<RatVector> row_product_pattern(int n, int k);

// c^k Circ(u) computed directly; cross-checked against the pattern above when
// it exists, and against membership in the delta symmetry class always.
RatVector row_product_ck_dtilde(int n, int k);

// f = sum_k alpha_k (c^k Circ(u)), both as the brute-force sum and as the
// closed pattern (f1, f2, omega/tau alternating, f2). The two routes must
// agree for n >= 9; smaller n keeps the brute-force value as authoritative
// and only records whether the pattern happened to match.
struct FVector {
    int n = 0;
    RatVector f;        // brute-force route, always the returned value
    Rational f1, f2, tau, omega;
    RatVector pattern;  // closed route
    bool pattern_matches = false;
};

FVector f_vector(int n);

// Rim block of L D, derived two independent ways and compared:
//   (a) Circ((n(n-2)/(6(n-1))) u - 1/2 1 + f)
//   (b) Circ(1/2 1 - 2 e_1 + (2/(n-1)) v)
Circulant m_matrix(int n);

// L D in full, checked against its expected block form: corner (1-n)/2, top
// border (5-n)/2, left border 1/2, rim block m_matrix(n).
RatMatrix ld_product(int n);
RatMatrix expected_ld_matrix(int n);

// K D, checked against I - (1/(n-1)) blockdiag(0, Circ(v)).
RatMatrix kd_product(int n);
RatMatrix expected_kd_matrix(int n);

// theta = -1/2 P D P. ok means theta passes all four Penrose conditions as
// the pseudoinverse of the special Laplacian and reproduces every distance
// via d_ij = theta_ii + theta_jj - 2 theta_ij.
struct ThetaResult {
    RatMatrix theta;
    bool ok = false;
};

ThetaResult theta_identity(int n);

}  // namespace wheelinv
