#include "wheelinv/exact_algebra.hpp"

#include <gmpxx.h>
#include <omp.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wheelinv {

namespace {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;

struct IntForm {
    ZMat a;
    std::vector<mpz_class> row_scale;  // positive; a = diag(row_scale) * m
};

IntForm integerize(const RatMatrix& m) {
    IntForm f;
    f.a.assign(m.rows(), ZRow(m.cols()));
    f.row_scale.assign(m.rows(), mpz_class(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            f.a[i][j] = m(i, j).num() * (l / m(i, j).den());
        f.row_scale[i] = l;
    }
    return f;
}

mpz_class divexact_checked(const mpz_class& t, const mpz_class& d) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

struct BareissOut {
    std::size_t rank = 0;
    int sign = 1;
    mpz_class last_pivot = 1;  // det of the integer matrix when square and full rank
};

// In-place fraction-free forward elimination. Deterministic: pivot is the
// first row with a nonzero entry in the current column.
BareissOut bareiss_forward(ZMat& a) {
    BareissOut out;
    if (a.empty()) return out;
    const std::size_t rows = a.size(), cols = a[0].size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            out.sign = -out.sign;
        }
        const mpz_class piv = a[r][c];
        const long lo = static_cast<long>(r) + 1;
#pragma omp parallel for schedule(dynamic)
        for (long li = lo; li < static_cast<long>(rows); ++li) {
            auto i = static_cast<std::size_t>(li);
            const mpz_class fac = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = divexact_checked(piv * a[i][j] - fac * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntForm f = integerize(m);  // positive row scaling preserves rank
    return bareiss_forward(f.a).rank;
}

std::size_t rank_serial(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    RatMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational fac = a(i, c) / a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j).sub_mul(fac, a(r, j));
        }
        ++r;
    }
    return r;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntForm f = integerize(m);
    BareissOut out = bareiss_forward(f.a);
    if (out.rank < n) return 0;
    mpz_class den(1);
    for (const auto& s : f.row_scale) den *= s;
    mpz_class num = out.sign > 0 ? out.last_pivot : mpz_class(-out.last_pivot);
    return Rational(num, den);
}

std::vector<Rational> charpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: square matrix required");
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1);
    coeffs[0] = 1;
    if (n == 0) return coeffs;
    RatMatrix mk = m;
    coeffs[1] = -mk.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        RatMatrix shifted = mk;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[k - 1];
        mk = mul(m, shifted);
        coeffs[k] = -mk.trace() / Rational(static_cast<long>(k));
    }
    return coeffs;
}

bool is_psd_symmetric(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd_symmetric: symmetric matrix required");
    std::vector<Rational> a = charpoly(m);
    // write p(x) = x^n - c1 x^(n-1) + c2 x^(n-2) - ...; need every ck >= 0
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational ck = (k % 2 == 1) ? -a[k] : a[k];
        if (ck.sign() < 0) return false;
    }
    return true;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    IntForm f = integerize(m);

    // fraction-free Gauss-Jordan on [A | I]: each step eliminates the pivot
    // column in every other row, dividing by the previous pivot (exact).
    // Ends with the left block diagonal; row i of the inverse of A is then
    // right_block_row_i / left_diag_i.
    ZMat t(n, ZRow(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = f.a[i][j];
        t[i][n + i] = 1;
    }
    mpz_class prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && t[p][k] == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        if (p != k) std::swap(t[p], t[k]);
        const mpz_class piv = t[k][k];
        // every non-pivot row is updated, including zero-factor ones: the
        // piv/prev rescale is what keeps all divisions exact
#pragma omp parallel for schedule(dynamic)
        for (long li = 0; li < static_cast<long>(n); ++li) {
            auto i = static_cast<std::size_t>(li);
            if (i == k) continue;
            const mpz_class fac = t[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                t[i][j] = divexact_checked(piv * t[i][j] - fac * t[k][j], prev);
            }
            t[i][k] = 0;
        }
        prev = piv;
    }

    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class& d = t[i][i];
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = Rational(t[i][n + j] * f.row_scale[j], d);
    }
    return inv;
}

RrefResult rref(const RatMatrix& m) {
    RrefResult out;
    out.r = m;
    RatMatrix& a = out.r;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Rational piv = a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) /= piv;
        const long lrows = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic)
        for (long li = 0; li < lrows; ++li) {
            auto i = static_cast<std::size_t>(li);
            if (i == r || a(i, c).is_zero()) continue;
            Rational fac = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j).sub_mul(fac, a(r, j));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

RatMatrix mp_pinv_oracle(const RatMatrix& m) {
    RrefResult rr = rref(m);
    if (rr.rank == 0) return RatMatrix(m.cols(), m.rows());
    const std::size_t r = rr.rank;
    RatMatrix fcols(m.rows(), r);  // pivot columns of m
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) fcols(i, j) = m(i, rr.pivot_cols[j]);
    RatMatrix g(r, m.cols());  // nonzero rows of the rref
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = rr.r(i, j);

    RatMatrix gt = g.transpose();
    RatMatrix ft = fcols.transpose();
    RatMatrix mid = mul(inverse(mul(g, gt)), inverse(mul(ft, fcols)));
    return mul(gt, mul(mid, ft));
}

PinvReport penrose_check(const RatMatrix& a, const RatMatrix& k) {
    if (a.rows() != k.cols() || a.cols() != k.rows())
        throw std::invalid_argument("penrose_check: k must have the transposed shape of a");
    PinvReport rep;
    RatMatrix ak = mul(a, k);
    RatMatrix ka = mul(k, a);
    RatMatrix r1 = mul(ak, a) - a;
    RatMatrix r2 = mul(ka, k) - k;
    RatMatrix r3 = ak.transpose() - ak;
    RatMatrix r4 = ka.transpose() - ka;
    rep.p1 = r1.is_zero();
    rep.p2 = r2.is_zero();
    rep.p3 = r3.is_zero();
    rep.p4 = r4.is_zero();
    Rational best;
    for (const RatMatrix* r : {&r1, &r2, &r3, &r4})
        for (std::size_t i = 0; i < r->rows(); ++i)
            for (std::size_t j = 0; j < r->cols(); ++j) {
                Rational v = (*r)(i, j).abs();
                if (v > best) best = v;
            }
    rep.max_abs_residual = best;
    return rep;
}

}  // namespace wheelinv
