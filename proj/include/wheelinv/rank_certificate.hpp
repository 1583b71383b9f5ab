#pragma once

#include "wheelinv/matrix.hpp"

namespace wheelinv {

// Rank-n-2 certificate for the special Laplacian, n >= 9. X is built from
// fixed small vectors so that L D X lands exactly on C, a matrix of full
// column rank n-2; together with the two known left null vectors of L this
// pins rank(L) = n - 2 without any elimination on L itself.
//
// p, q (length n-2) and y (length n-3) follow a parity rule with a special
// first entry; the k = 1 clause wins over the parity clauses:
//   p: p_1 = -1, p_k = -2 for even k, 0 for odd k > 1
//   q: q_1 = -1, q_k =  0 for even k, -2 for odd k > 1
//   y: y_1 = -2, y_k =  0 for even k, -1 for odd k > 1
struct RankWitness {
    int n = 0;
    RatVector p;
    RatVector q;
    RatVector y;
    RatMatrix c;  // n x (n-2): stacked 2 I, then rows p' and q'
    RatMatrix x;  // n x (n-2): bordered Circ(y) block, two zero rows below
};

// Throws std::invalid_argument unless n is odd and >= 9.
RankWitness build_rank_witness(int n);

// Checks L D X = C exactly, rank(C) = n - 2, the column sums of X (all -2)
// and of y (sum (1-n)/2), and rank(L) = n - 2.
bool verify_rank_certificate(int n);

std::size_t rank_of_special_laplacian(int n);

}  // namespace wheelinv
