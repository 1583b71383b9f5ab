#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "golden_data.hpp"
#include "wheelinv/closed_form.hpp"
#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/wheel.hpp"

using namespace wheelinv;

TEST_CASE("w vector") {
    CHECK(w_vector(5) == golden::w5());
    CHECK(w_vector(7) == golden::w7());
    for (int n = 5; n <= 21; n += 2) {
        RatVector dw = mat_vec(distance_matrix_closed(n).mat, w_vector(n));
        for (const auto& e : dw) CHECK(e == Rational(n - 1, 4));
    }
}

TEST_CASE("closed form inverse matches goldens") {
    ClosedFormInverse k5 = closed_form_pinv(5);
    CHECK(k5.mat == golden::pinv5());
    CHECK(k5.w == golden::w5());
    ClosedFormInverse k7 = closed_form_pinv(7);
    CHECK(k7.mat == golden::pinv7());
    CHECK(k7.mat(2, 2) == Rational(-4, 9));
}

TEST_CASE("closed form inverse equals the oracle and passes the penrose conditions") {
    for (int n = 5; n <= 17; n += 2) {
        RatMatrix d = distance_matrix_closed(n).mat;
        RatMatrix k = closed_form_pinv(n).mat;
        CHECK(k == mp_pinv_oracle(d));
        CHECK(penrose_check(d, k).all());
    }
}

TEST_CASE("inverse row identities") {
    for (int n = 5; n <= 21; n += 2) {
        RatMatrix k = closed_form_pinv(n).mat;
        RatVector w = w_vector(n);
        RatVector ones(n, Rational(1));
        RatVector k1 = mat_vec(k, ones);
        Rational c(4, n - 1);
        for (int i = 0; i < n; ++i) CHECK(k1[i] == c * w[i]);
        Rational total;
        for (const auto& e : k1) total += e;
        CHECK(total == c);
    }
}

TEST_CASE("delta membership predicate") {
    CHECK(is_in_delta({Rational(7), Rational(1), Rational(2), Rational(1)}));
    CHECK_FALSE(is_in_delta({Rational(7), Rational(1), Rational(2), Rational(3)}));
    CHECK(is_in_delta({Rational(7)}));
}

TEST_CASE("row products for the first shape") {
    RatVector q = row_product_ck_dtilde(9, 1);
    CHECK(q == RatVector{Rational(2), Rational(2), Rational(3), Rational(4), Rational(4),
                         Rational(4), Rational(3), Rational(2)});
    CHECK(row_product_pattern(5, 1) == std::nullopt);
}

TEST_CASE("row products for the coinciding shape") {
    CHECK(row_product_ck_dtilde(5, 2) ==
          RatVector{Rational(2), Rational(1), Rational(0), Rational(1)});
    CHECK(row_product_ck_dtilde(9, 4) ==
          RatVector{Rational(2), Rational(2), Rational(2), Rational(1), Rational(0), Rational(1),
                    Rational(2), Rational(2)});
}

TEST_CASE("row products for the neighbouring shape") {
    CHECK(row_product_ck_dtilde(7, 2) ==
          RatVector{Rational(4), Rational(3), Rational(2), Rational(2), Rational(2), Rational(3)});
    CHECK(row_product_ck_dtilde(9, 3) ==
          RatVector{Rational(4), Rational(4), Rational(3), Rational(2), Rational(2), Rational(2),
                    Rational(3), Rational(4)});
}

TEST_CASE("row products for the interior shape") {
    // 1-based: 2 at positions k+1 and n-k; 3 at k, k+2, n-k-1, n-k+1; else 4
    CHECK(row_product_ck_dtilde(11, 3) ==
          RatVector{Rational(4), Rational(4), Rational(3), Rational(2), Rational(3), Rational(4),
                    Rational(3), Rational(2), Rational(3), Rational(4)});
    CHECK(row_product_ck_dtilde(9, 2) ==
          RatVector{Rational(4), Rational(3), Rational(2), Rational(3), Rational(4), Rational(3),
                    Rational(2), Rational(3)});
}

TEST_CASE("every row product stays in the symmetry class and matches dense algebra") {
    for (int n = 5; n <= 21; n += 2) {
        int m = (n - 1) / 2;
        Circulant dt(wheel_u_vector(n));
        for (int k = 1; k <= m; ++k) {
            RatVector q = row_product_ck_dtilde(n, k);
            CHECK(is_in_delta(q));
            CHECK(q == vec_mat(special_vector(n, k), dt.to_dense()));
            // the circulant of c^k times the rim block, row reading
            RatMatrix lhs = mul(special_matrix(n, k).to_dense(), dt.to_dense());
            CHECK(lhs == Circulant(q).to_dense());
        }
    }
}

TEST_CASE("f vector") {
    FVector f5 = f_vector(5);
    CHECK(f5.f == RatVector{Rational(-1, 2), Rational(-1, 8), Rational(1, 4), Rational(-1, 8)});
    CHECK(f5.pattern_matches);  // observation, not the contract below n = 9

    FVector f9 = f_vector(9);
    CHECK(f9.f1 == Rational(-3, 4));
    CHECK(f9.tau == Rational(-15, 8));
    CHECK(f9.f[0] == f9.f1);
    CHECK(f9.pattern_matches);
    CHECK(is_in_delta(f9.f));

    for (int n = 9; n <= 31; n += 2) {
        FVector f = f_vector(n);
        CHECK(f.pattern_matches);
        CHECK(f.pattern == f.f);
        CHECK(is_in_delta(f.f));
    }
}

TEST_CASE("rim block of the product, both constructions") {
    CHECK(m_matrix(5).first_row() ==
          RatVector{Rational(-1), Rational(0), Rational(1), Rational(0)});
    CHECK(m_matrix(7).first_row() ==
          RatVector{Rational(-7, 6), Rational(1, 6), Rational(5, 6), Rational(1, 6),
                    Rational(5, 6), Rational(1, 6)});
    for (int n = 5; n <= 21; n += 2) CHECK_NOTHROW(m_matrix(n));
}

TEST_CASE("laplacian times distance matrix") {
    RatMatrix p5 = ld_product(5);
    CHECK(p5(0, 0) == Rational(-2));
    CHECK(p5(0, 1) == Rational(0));
    CHECK(p5(1, 0) == Rational(1, 2));
    CHECK(p5(1, 1) == Rational(-1));
    for (int n = 5; n <= 17; n += 2) {
        RatMatrix prod = ld_product(n);
        CHECK(prod == expected_ld_matrix(n));
        CHECK(prod(0, 0) == Rational(1 - static_cast<long>(n), 2));
        for (int j = 1; j < n; ++j) {
            CHECK(prod(0, j) == Rational(5 - static_cast<long>(n), 2));
            CHECK(prod(j, 0) == Rational(1, 2));
        }
    }
}

TEST_CASE("closed form inverse times distance matrix") {
    RatMatrix kd5 = kd_product(5);
    RatMatrix expect5 = RatMatrix::identity(5);
    RatMatrix v5 = v_matrix(5).to_dense();
    for (int i = 1; i < 5; ++i)
        for (int j = 1; j < 5; ++j) expect5(i, j) -= Rational(1, 4) * v5(i - 1, j - 1);
    CHECK(kd5 == expect5);
    for (int n = 5; n <= 17; n += 2) CHECK(kd_product(n) == expected_kd_matrix(n));
}

TEST_CASE("alternating circulant annihilations") {
    for (int n = 5; n <= 17; n += 2) {
        RatMatrix dt = Circulant(wheel_u_vector(n)).to_dense();
        RatMatrix v = v_matrix(n).to_dense();
        CHECK(mul(dt, v).is_zero());

        RatMatrix bd(n, n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) bd(i, j) = v(i - 1, j - 1);
        CHECK(mul(bd, special_laplacian(n).mat).is_zero());
    }
}

TEST_CASE("centered gram matrix inverts the laplacian") {
    for (int n = 5; n <= 13; n += 2) {
        ThetaResult t = theta_identity(n);
        CHECK(t.ok);
        CHECK(t.theta.is_symmetric());
        CHECK(is_psd_symmetric(t.theta));
    }
}

TEST_CASE("damaged laplacian no longer assembles the inverse") {
    RatMatrix slap = special_laplacian(9).mat;
    slap(1, 2) += 1;
    RatMatrix k = assemble_pinv(slap, 9);
    CHECK(k != closed_form_pinv(9).mat);
    CHECK_FALSE(penrose_check(distance_matrix_closed(9).mat, k).all());
}
