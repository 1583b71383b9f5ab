// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Everything here is exact arithmetic; the only tolerances are wall-clock
// budgets on the two criteria that carry one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "golden_data.hpp"
#include "wheelinv/bench.hpp"
#include "wheelinv/closed_form.hpp"
#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/rank_certificate.hpp"
#include "wheelinv/special_laplacian.hpp"
#include "wheelinv/verify.hpp"
#include "wheelinv/wheel.hpp"

using namespace wheelinv;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
};

bool require(bool cond, const std::string& msg, std::string& why) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

bool golden_case(int n, const RatMatrix& d, const RatVector& alphas, const RatMatrix& slap,
                 const RatMatrix& pinv, const RatVector& w, std::string& why) {
    bool ok = true;
    ok &= require(distance_matrix_closed(n).mat == d, "distance matrix mismatch", why);
    ok &= require(alpha_table(n).alphas == alphas, "alpha table mismatch", why);
    ok &= require(special_laplacian(n).mat == slap, "special laplacian mismatch", why);
    ClosedFormInverse cf = closed_form_pinv(n);
    ok &= require(cf.mat == pinv, "closed-form inverse mismatch", why);
    ok &= require(cf.w == w, "w vector mismatch", why);
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "frozen values for the 5-vertex wheel (under one second)",
                        [](std::string& why) {
                            auto t0 = std::chrono::steady_clock::now();
                            bool ok = golden_case(5, golden::d5(), golden::alphas5(),
                                                  golden::slap5(), golden::pinv5(), golden::w5(),
                                                  why);
                            double dt = std::chrono::duration<double>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count();
                            return require(ok && dt < 1.0,
                                           ok ? "took " + std::to_string(dt) + " s" : why, why);
                        }});

    criteria.push_back({2, "frozen values for the 7-vertex wheel", [](std::string& why) {
                            return golden_case(7, golden::d7(), golden::alphas7(), golden::slap7(),
                                               golden::pinv7(), golden::w7(), why);
                        }});

    criteria.push_back(
        {3, "closed form equals the oracle with all Penrose conditions, n in [5,41], under 2 min",
         [](std::string& why) {
             auto t0 = std::chrono::steady_clock::now();
             for (int n = 5; n <= 41; n += 2) {
                 RatMatrix d = distance_matrix_closed(n).mat;
                 RatMatrix k = closed_form_pinv(n).mat;
                 if (!require(k == mp_pinv_oracle(d),
                              "oracle disagrees at n=" + std::to_string(n), why))
                     return false;
                 if (!require(penrose_check(d, k).all(),
                              "a Penrose condition fails at n=" + std::to_string(n), why))
                     return false;
             }
             double dt =
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
             return require(dt < 120.0, "sweep took " + std::to_string(dt) + " s", why);
         }});

    criteria.push_back(
        {4, "special laplacian is symmetric PSD with zero row sums and rank n-2, n in [5,41]",
         [](std::string& why) {
             for (int n = 5; n <= 41; n += 2) {
                 RatMatrix s = special_laplacian(n).mat;
                 std::string at = " at n=" + std::to_string(n);
                 if (!require(s.is_symmetric(), "asymmetric" + at, why)) return false;
                 RatVector ones(n, Rational(1));
                 for (const auto& e : mat_vec(s, ones))
                     if (!require(e.is_zero(), "nonzero row sum" + at, why)) return false;
                 if (!require(rank(s) == static_cast<std::size_t>(n - 2), "rank off" + at, why))
                     return false;
                 if (!require(is_psd_symmetric(s), "not PSD" + at, why)) return false;
             }
             return true;
         }});

    criteria.push_back(
        {5, "centered gram matrix inverts the laplacian and rebuilds distances, n in [5,41]",
         [](std::string& why) {
             for (int n = 5; n <= 41; n += 2)
                 if (!require(theta_identity(n).ok, "fails at n=" + std::to_string(n), why))
                     return false;
             return true;
         }});

    criteria.push_back({6, "all five alpha identities hold for n in [5,101]", [](std::string& why) {
                            for (int n = 5; n <= 101; n += 2) {
                                std::string at = " at n=" + std::to_string(n);
                                for (auto which :
                                     {AlphaIdentity::I1, AlphaIdentity::I2, AlphaIdentity::I3,
                                      AlphaIdentity::I5})
                                    if (!require(identity_check(which, n).holds,
                                                 "identity fails" + at, why))
                                        return false;
                                int m = (n - 1) / 2;
                                for (int j = 3; j <= m; ++j)
                                    if (!require(identity_check(AlphaIdentity::I4, n, j).holds,
                                                 "windowed identity fails" + at +
                                                     " j=" + std::to_string(j),
                                                 why))
                                        return false;
                            }
                            return true;
                        }});

    criteria.push_back(
        {7, "row products, dual constructions, annihilations and the rank certificate, n in [9,41]",
         [](std::string& why) {
             for (int n = 9; n <= 41; n += 2) {
                 std::string at = " at n=" + std::to_string(n);
                 int m = (n - 1) / 2;
                 try {
                     for (int k = 1; k <= m; ++k) {
                         RatVector q = row_product_ck_dtilde(n, k);
                         if (!require(is_in_delta(q), "product left delta" + at, why))
                             return false;
                         if (!require(row_product_pattern(n, k).has_value(),
                                      "missing closed shape" + at + " k=" + std::to_string(k),
                                      why))
                             return false;
                     }
                     FVector f = f_vector(n);
                     if (!require(f.pattern_matches && is_in_delta(f.f), "f vector off" + at, why))
                         return false;
                     m_matrix(n);
                     ld_product(n);
                     kd_product(n);
                 } catch (const std::exception& e) {
                     return require(false, std::string(e.what()) + at, why);
                 }
                 RatMatrix dt = Circulant(wheel_u_vector(n)).to_dense();
                 RatMatrix v = v_matrix(n).to_dense();
                 if (!require(mul(dt, v).is_zero(), "rim product not annihilated" + at, why))
                     return false;
                 RatMatrix bd(n, n);
                 for (int i = 1; i < n; ++i)
                     for (int j = 1; j < n; ++j) bd(i, j) = v(i - 1, j - 1);
                 if (!require(mul(bd, special_laplacian(n).mat).is_zero(),
                              "laplacian not annihilated" + at, why))
                     return false;
                 if (!require(verify_rank_certificate(n), "rank certificate fails" + at, why))
                     return false;
             }
             return true;
         }});

    criteria.push_back(
        {8, "distance matrix routes, kernel vector and row identities, n in [5,41]",
         [](std::string& why) {
             for (int n = 5; n <= 41; n += 2) {
                 std::string at = " at n=" + std::to_string(n);
                 RatMatrix d = distance_matrix_closed(n).mat;
                 if (!require(distance_matrix_bfs(build_wheel(n)).mat == d,
                              "search route differs" + at, why))
                     return false;
                 for (const auto& e : mat_vec(d, null_vector_d(n)))
                     if (!require(e.is_zero(), "kernel vector missed" + at, why)) return false;
                 RatVector u = wheel_u_vector(n);
                 Rational s;
                 for (const auto& e : u) s += e;
                 if (!require(s == Rational(2L * (n - 3)), "rim row sum off" + at, why))
                     return false;
                 for (const auto& e : mat_vec(d, w_vector(n)))
                     if (!require(e == Rational(n - 1, 4), "w image off" + at, why)) return false;
                 RatMatrix k = closed_form_pinv(n).mat;
                 RatVector ones(n, Rational(1));
                 RatVector k1 = mat_vec(k, ones);
                 Rational c(4, n - 1);
                 RatVector w = w_vector(n);
                 for (int i = 0; i < n; ++i)
                     if (!require(k1[i] == c * w[i], "row sums off" + at, why)) return false;
                 Rational total;
                 for (const auto& e : k1) total += e;
                 if (!require(total == c, "total sum off" + at, why)) return false;
             }
             return true;
         }});

    criteria.push_back(
        {9, "damaged laplacian turns the verification run red through the real binary",
         [](std::string& why) {
             try {
                 cli::RunResult healthy = cli::run("verify --n-max 9 --report /tmp/wa_ok.json");
                 if (!require(healthy.exit_code == 0, "healthy run did not exit 0", why))
                     return false;
                 cli::RunResult hurt =
                     cli::run("verify --n-max 9 --perturb --report /tmp/wa_bad.json");
                 std::remove("/tmp/wa_ok.json");
                 std::remove("/tmp/wa_bad.json");
                 bool named = hurt.out.find("FAIL") != std::string::npos &&
                              hurt.out.find("slap_symmetric") != std::string::npos;
                 if (!require(hurt.exit_code == 1, "perturbed run did not exit 1", why))
                     return false;
                 return require(named, "no failing check named on stdout", why);
             } catch (const std::exception& e) {
                 return require(false, e.what(), why);
             }
         }});

    criteria.push_back(
        {10, "closed form beats the oracle at n=101 and n=201 with agreement checked",
         [](std::string& why) {
             BenchOptions opt;
             opt.n_list = {101, 201};
             opt.repeats = 1;
             std::vector<BenchRecord> recs = run_bench(opt);
             double closed_s[2] = {0, 0}, oracle_s[2] = {0, 0};
             int idx = 0;
             for (const auto& r : recs) {
                 if (r.skipped) return require(false, "oracle row skipped unexpectedly", why);
                 if (!require(r.verified, "methods disagree at n=" + std::to_string(r.n), why))
                     return false;
                 (r.method == "closed" ? closed_s : oracle_s)[r.n == 201] = r.seconds;
                 ++idx;
             }
             if (!require(idx == 4, "expected four records", why)) return false;
             for (int i : {0, 1}) {
                 std::string at = i ? " at n=201" : " at n=101";
                 if (!require(closed_s[i] < oracle_s[i],
                              "closed form not faster" + at + " (" +
                                  std::to_string(closed_s[i]) + " vs " +
                                  std::to_string(oracle_s[i]) + " s)",
                              why))
                     return false;
             }
             return true;
         }});

    int failed = 0;
    for (auto& c : criteria) {
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok) {
            std::printf("PASS  criterion %2d: %s (%.2f s)\n", c.id, c.label.c_str(), dt);
        } else {
            ++failed;
            std::printf("FAIL  criterion %2d: %s (%.2f s)%s%s\n", c.id, c.label.c_str(), dt,
                        why.empty() ? "" : " -- ", why.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
