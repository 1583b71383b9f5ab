#pragma once

#include "wheelinv/matrix.hpp"

namespace wheelinv {

// Coefficient table alpha_1..alpha_m, m = (n-1)/2, with
//   alpha_k = (-1)^(g(k)) (2 m^2 - 6 (m-k)^2 + 1) / (6 (n-1)),
//   g(k)    = (n + (-1)^(m-k)) / 2.
struct AlphaTable {
    int n = 0;
    RatVector alphas;  // alphas[k-1] holds alpha_k
};

AlphaTable alpha_table(int n);

// c^k: length n-1, ones exactly at rim positions k+1 and n-k (1-based); the
// two coincide for k = m. Zero elsewhere.
RatVector special_vector(int n, int k);
Circulant special_matrix(int n, int k);

// Alternating rim vector (1, -1, 1, ..., -1) of length n-1 and its circulant.
RatVector v_vector(int n);
Circulant v_matrix(int n);

// The distance matrix of the odd wheel is not a graph Laplacian, but it has a
// Laplacian-like companion: hub corner (n-1)/2, hub borders -1/2, rim block
//   (n (n-2) / (6 (n-1))) I + sum_k alpha_k C_k,
// which is what the closed-form pseudoinverse is assembled from.
struct SpecialLaplacian {
    int n = 0;
    RatMatrix mat;
};

SpecialLaplacian special_laplacian(int n);

// Scalar identities the alpha table satisfies; each one is a step the
// closed-form derivation leans on, checked here independently of it.
//   I1: sum_k (-1)^g(k) q(k)          with q(k) = 2m^2 - 6(m-k)^2 + 1
//   I2: sum_k (-1)^(k+g(k)) q(k)
//   I3: 2 sum_k alpha_k - alpha_m
//   I4: 2 alpha_(j-1) + alpha_j + alpha_(j-2), for a chosen j in [3, m]
//   I5: 2 sum_k (-1)^k alpha_k - (-1)^m alpha_m
enum class AlphaIdentity { I1, I2, I3, I4, I5 };

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

// j participates only for I4 and must then lie in [3, m]; it is ignored for
// the others. Throws std::invalid_argument on a bad n or j.
IdentityCheck identity_check(AlphaIdentity which, int n, int j = 0);

}  // namespace wheelinv
