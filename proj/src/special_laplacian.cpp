#include "wheelinv/special_laplacian.hpp"

#include <stdexcept>

#include "wheelinv/wheel.hpp"

namespace wheelinv {

namespace {

long quad_term(long m, long k) { return 2 * m * m - 6 * (m - k) * (m - k) + 1; }

// g(k) = (n + (-1)^(m-k)) / 2; n odd keeps this an integer
long g_exponent(long n, long m, long k) {
    long sign = ((m - k) % 2 == 0) ? 1 : -1;
    return (n + sign) / 2;
}

Rational alpha_of(long n, long m, long k) {
    long num = quad_term(m, k);
    if (g_exponent(n, m, k) % 2 != 0) num = -num;
    return Rational(num, 6 * (n - 1));
}

}  // namespace

AlphaTable alpha_table(int n) {
    require_valid_order(n);
    const long m = (n - 1) / 2;
    AlphaTable t;
    t.n = n;
    t.alphas.resize(m);
    for (long k = 1; k <= m; ++k) t.alphas[k - 1] = alpha_of(n, m, k);
    return t;
}

RatVector special_vector(int n, int k) {
    require_valid_order(n);
    const int m = (n - 1) / 2;
    if (k < 1 || k > m) throw std::invalid_argument("special_vector: k out of range");
    RatVector c(n - 1);
    c[k] = 1;           // rim position k+1, 1-based
    c[n - 1 - k] = 1;   // rim position n-k, 1-based; same slot when k = m
    return c;
}

Circulant special_matrix(int n, int k) { return Circulant(special_vector(n, k)); }

RatVector v_vector(int n) {
    require_valid_order(n);
    RatVector v(n - 1);
    for (int i = 0; i < n - 1; ++i) v[i] = (i % 2 == 0) ? 1 : -1;
    return v;
}

Circulant v_matrix(int n) { return Circulant(v_vector(n)); }

SpecialLaplacian special_laplacian(int n) {
    require_valid_order(n);
    const int m = (n - 1) / 2;
    AlphaTable t = alpha_table(n);

    // rim block is a circulant: identity plus every C_k is one
    RatVector base(n - 1);
    base[0] = Rational(static_cast<long>(n) * (n - 2), 6L * (n - 1));
    for (int k = 1; k <= m; ++k) {
        base[k] += t.alphas[k - 1];
        if (n - 1 - k != k) base[n - 1 - k] += t.alphas[k - 1];
    }
    RatMatrix rim = Circulant(base).to_dense();

    SpecialLaplacian s;
    s.n = n;
    s.mat = RatMatrix(n, n);
    s.mat(0, 0) = Rational(n - 1, 2);
    for (int j = 1; j < n; ++j) {
        s.mat(0, j) = Rational(-1, 2);
        s.mat(j, 0) = Rational(-1, 2);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) s.mat(i, j) = rim(i - 1, j - 1);
    return s;
}

IdentityCheck identity_check(AlphaIdentity which, int n, int j) {
    require_valid_order(n);
    const long m = (n - 1) / 2;
    IdentityCheck out;

    switch (which) {
        case AlphaIdentity::I1: {
            Rational lhs;
            for (long k = 1; k <= m; ++k) {
                long term = quad_term(m, k);
                lhs += Rational(g_exponent(n, m, k) % 2 == 0 ? term : -term);
            }
            out.lhs = lhs;
            out.rhs = (m % 2 == 0) ? Rational(-3 * m * m + 3 * m) : Rational(-m * m + 3 * m + 1);
            break;
        }
        case AlphaIdentity::I2: {
            Rational lhs;
            for (long k = 1; k <= m; ++k) {
                long term = quad_term(m, k);
                lhs += Rational((k + g_exponent(n, m, k)) % 2 == 0 ? term : -term);
            }
            out.lhs = lhs;
            out.rhs = Rational(-3 * m * m);
            break;
        }
        case AlphaIdentity::I3: {
            Rational sum;
            for (long k = 1; k <= m; ++k) sum += alpha_of(n, m, k);
            out.lhs = Rational(2) * sum - alpha_of(n, m, m);
            out.rhs = Rational(6 * m - 4 * m * m + 1, 6L * (n - 1));
            break;
        }
        case AlphaIdentity::I4: {
            if (j < 3 || j > m) throw std::invalid_argument("identity_check: I4 needs j in [3, m]");
            out.lhs = Rational(2) * alpha_of(n, m, j - 1) + alpha_of(n, m, j) + alpha_of(n, m, j - 2);
            out.rhs = Rational(j % 2 == 0 ? 2 : -2, n - 1);
            break;
        }
        case AlphaIdentity::I5: {
            Rational sum;
            for (long k = 1; k <= m; ++k) {
                Rational a = alpha_of(n, m, k);
                sum += (k % 2 == 0) ? a : -a;
            }
            Rational am = alpha_of(n, m, m);
            out.lhs = Rational(2) * sum - (m % 2 == 0 ? am : -am);
            out.rhs = Rational(2L * n - static_cast<long>(n) * n, 6L * (n - 1));
            break;
        }
    }
    out.holds = (out.lhs == out.rhs);
    return out;
}

}  // namespace wheelinv
