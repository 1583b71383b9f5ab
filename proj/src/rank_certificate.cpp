#include "wheelinv/rank_certificate.hpp"

#include <stdexcept>

#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/special_laplacian.hpp"
#include "wheelinv/wheel.hpp"

namespace wheelinv {

RankWitness build_rank_witness(int n) {
    require_valid_order(n);
    if (n < 9) throw std::invalid_argument("build_rank_witness: n must be at least 9");

    RankWitness w;
    w.n = n;
    w.p.resize(n - 2);
    w.q.resize(n - 2);
    for (int k = 1; k <= n - 2; ++k) {
        if (k == 1) {
            w.p[0] = -1;
            w.q[0] = -1;
        } else if (k % 2 == 0) {
            w.p[k - 1] = -2;
            w.q[k - 1] = 0;
        } else {
            w.p[k - 1] = 0;
            w.q[k - 1] = -2;
        }
    }
    w.y.resize(n - 3);
    for (int k = 1; k <= n - 3; ++k)
        w.y[k - 1] = (k == 1) ? Rational(-2) : (k % 2 == 0 ? Rational(0) : Rational(-1));

    w.c = RatMatrix(n, n - 2);
    for (int j = 0; j < n - 2; ++j) {
        w.c(j, j) = 2;
        w.c(n - 2, j) = w.p[j];
        w.c(n - 1, j) = w.q[j];
    }

    // X = 1/2 [ n-7, (n-5) 1' ; -1, 2 Circ(y) ; 0, 0 ]
    w.x = RatMatrix(n, n - 2);
    w.x(0, 0) = Rational(n - 7, 2);
    for (int j = 1; j < n - 2; ++j) w.x(0, j) = Rational(n - 5, 2);
    RatMatrix ymat = Circulant(w.y).to_dense();
    for (int i = 1; i <= n - 3; ++i) {
        w.x(i, 0) = Rational(-1, 2);
        for (int j = 1; j < n - 2; ++j) w.x(i, j) = ymat(i - 1, j - 1);
    }
    // rows n-2 and n-1 stay zero
    return w;
}

bool verify_rank_certificate(int n) {
    RankWitness w = build_rank_witness(n);

    Rational ysum;
    for (const auto& e : w.y) ysum += e;
    if (ysum != Rational(1 - static_cast<long>(n), 2)) return false;

    for (std::size_t j = 0; j < w.x.cols(); ++j) {
        Rational s;
        for (std::size_t i = 0; i < w.x.rows(); ++i) s += w.x(i, j);
        if (s != Rational(-2)) return false;
    }

    RatMatrix ld = mul(special_laplacian(n).mat, distance_matrix_closed(n).mat);
    if (mul(ld, w.x) != w.c) return false;

    if (rank(w.c) != static_cast<std::size_t>(n - 2)) return false;
    return rank_of_special_laplacian(n) == static_cast<std::size_t>(n - 2);
}

std::size_t rank_of_special_laplacian(int n) { return rank(special_laplacian(n).mat); }

}  // namespace wheelinv
