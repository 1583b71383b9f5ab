#include "wheelinv/closed_form.hpp"

#include <stdexcept>

#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/wheel.hpp"

namespace wheelinv {

RatVector w_vector(int n) {
    require_valid_order(n);
    RatVector w(n, Rational(1, 4));
    w[0] = Rational(5 - static_cast<long>(n), 4);
    return w;
}

RatMatrix assemble_pinv(const RatMatrix& slap, int n) {
    if (slap.rows() != static_cast<std::size_t>(n) || slap.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("assemble_pinv: shape mismatch");
    RatVector w = w_vector(n);
    RatMatrix k = slap.scaled(Rational(-1, 2));
    Rational c(4, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(i, j) += c * w[i] * w[j];
    return k;
}

ClosedFormInverse closed_form_pinv(int n) {
    require_valid_order(n);
    ClosedFormInverse out;
    out.n = n;
    out.w = w_vector(n);
    out.mat = assemble_pinv(special_laplacian(n).mat, n);
    return out;
}

bool is_in_delta(const RatVector& x) {
    // rim vector of some wheel of order n = |x| + 1; condition pairs index i
    // with n-i (0-based: i with |x|-i)
    const std::size_t len = x.size();
    for (std::size_t i = 1; i < len; ++i)
        if (x[i] != x[len - i]) return false;
    return true;
}

std::optional<RatVector> row_product_pattern(int n, int k) {
    require_valid_order(n);
    const int m = (n - 1) / 2;
    if (k < 1 || k > m) throw std::invalid_argument("row_product_pattern: k out of range");

    RatVector p(n - 1);
    auto set1 = [&](int j, long val) { p[j - 1] = val; };  // 1-based position

    if (k == m) {
        for (int j = 1; j <= (n - 3) / 2; ++j) set1(j, 2);
        set1((n - 1) / 2, 1);
        set1((n + 1) / 2, 0);
        set1((n + 3) / 2, 1);
        for (int j = (n + 5) / 2; j <= n - 1; ++j) set1(j, 2);
        return p;
    }
    if (k == 1) {
        if (n < 7) return std::nullopt;
        set1(1, 2);
        set1(2, 2);
        set1(3, 3);
        for (int j = 4; j <= n - 3; ++j) set1(j, 4);
        set1(n - 2, 3);
        set1(n - 1, 2);
        return p;
    }
    if (k == m - 1) {
        if (n < 7) return std::nullopt;
        for (int j = 1; j <= n - 1; ++j) set1(j, 4);
        set1(m - 1, 3);
        set1(m, 2);
        set1(m + 1, 2);
        set1(m + 2, 2);
        set1(m + 3, 3);
        return p;
    }
    // 1 < k < m-1 only occurs once n >= 9
    for (int j = 1; j <= n - 1; ++j) set1(j, 4);
    set1(k, 3);
    set1(k + 2, 3);
    set1(n - k - 1, 3);
    set1(n - k + 1, 3);
    set1(k + 1, 2);
    set1(n - k, 2);
    return p;
}

RatVector row_product_ck_dtilde(int n, int k) {
    RatVector c = special_vector(n, k);
    RatVector q = circ_mul_row(c, Circulant(wheel_u_vector(n)));
    if (!is_in_delta(q)) throw std::logic_error("row_product_ck_dtilde: product left the delta class");
    if (auto p = row_product_pattern(n, k); p && *p != q)
        throw std::logic_error("row_product_ck_dtilde: closed pattern disagrees with direct product");
    return q;
}

FVector f_vector(int n) {
    require_valid_order(n);
    const int m = (n - 1) / 2;
    const long nl = n;
    AlphaTable t = alpha_table(n);
    Circulant dtilde(wheel_u_vector(n));

    FVector out;
    out.n = n;
    out.f.assign(n - 1, Rational());
    for (int k = 1; k <= m; ++k) {
        RatVector q = circ_mul_row(special_vector(n, k), dtilde);
        for (int j = 0; j < n - 1; ++j) out.f[j].add_mul(t.alphas[k - 1], q[j]);
    }

    out.f1 = Rational(3 - nl, nl - 1);
    out.f2 = Rational(-nl * nl + 8 * nl - 18, 6 * (nl - 1));
    out.tau = Rational(-2 * nl * nl + 10 * nl - 18, 6 * (nl - 1));
    out.omega = Rational(-2 * nl * nl + 10 * nl + 6, 6 * (nl - 1));

    out.pattern.assign(n - 1, Rational());
    out.pattern[0] = out.f1;
    out.pattern[1] = out.f2;
    out.pattern[n - 2] = out.f2;
    for (int j = 3; j <= n - 2; ++j)  // 1-based positions strictly inside
        out.pattern[j - 1] = (j % 2 == 1) ? out.omega : out.tau;

    out.pattern_matches = (out.pattern == out.f);
    if (n >= 9 && !out.pattern_matches)
        throw std::logic_error("f_vector: closed pattern disagrees with brute-force sum");
    return out;
}

Circulant m_matrix(int n) {
    require_valid_order(n);
    const long nl = n;
    FVector fv = f_vector(n);
    RatVector u = wheel_u_vector(n);

    RatVector ha(n - 1);
    Rational scale(nl * (nl - 2), 6 * (nl - 1));
    for (int j = 0; j < n - 1; ++j) ha[j] = scale * u[j] - Rational(1, 2) + fv.f[j];

    RatVector v = v_vector(n);
    RatVector hb(n - 1);
    Rational vcoef(2, nl - 1);
    for (int j = 0; j < n - 1; ++j) hb[j] = Rational(1, 2) + vcoef * v[j];
    hb[0] -= 2;

    if (ha != hb) throw std::logic_error("m_matrix: the two constructions disagree");
    return Circulant(ha);
}

RatMatrix expected_ld_matrix(int n) {
    require_valid_order(n);
    RatMatrix e(n, n);
    e(0, 0) = Rational(1 - static_cast<long>(n), 2);
    for (int j = 1; j < n; ++j) {
        e(0, j) = Rational(5 - static_cast<long>(n), 2);
        e(j, 0) = Rational(1, 2);
    }
    RatMatrix rim = m_matrix(n).to_dense();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) e(i, j) = rim(i - 1, j - 1);
    return e;
}

RatMatrix ld_product(int n) {
    RatMatrix prod = mul(special_laplacian(n).mat, distance_matrix_closed(n).mat);
    if (prod != expected_ld_matrix(n))
        throw std::logic_error("ld_product: block form violated");
    return prod;
}

RatMatrix expected_kd_matrix(int n) {
    require_valid_order(n);
    RatMatrix e = RatMatrix::identity(n);
    RatMatrix v = v_matrix(n).to_dense();
    Rational c(-1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) e(i, j) += c * v(i - 1, j - 1);
    return e;
}

RatMatrix kd_product(int n) {
    RatMatrix prod = mul(closed_form_pinv(n).mat, distance_matrix_closed(n).mat);
    if (prod != expected_kd_matrix(n))
        throw std::logic_error("kd_product: expected form violated");
    return prod;
}

ThetaResult theta_identity(int n) {
    require_valid_order(n);
    RatMatrix d = distance_matrix_closed(n).mat;
    ThetaResult out;
    out.theta = gram_G(d);
    bool ok = penrose_check(special_laplacian(n).mat, out.theta).all();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            ok = (d(i, j) == out.theta(i, i) + out.theta(j, j) - Rational(2) * out.theta(i, j));
    out.ok = ok;
    return out;
}

}  // namespace wheelinv
