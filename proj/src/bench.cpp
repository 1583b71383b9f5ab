#include "wheelinv/bench.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "wheelinv/closed_form.hpp"
#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/wheel.hpp"

namespace wheelinv {

namespace {

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

template <typename F>
double timed_median(int repeats, F&& run) {
    std::vector<double> times;
    times.reserve(repeats);
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        run();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    return median(std::move(times));
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
    if (opt.repeats < 1) throw std::invalid_argument("run_bench: repeats must be positive");
    if (opt.n_list.empty()) throw std::invalid_argument("run_bench: empty n list");
    for (int n : opt.n_list) require_valid_order(n);

    int prev_threads = omp_get_max_threads();
    omp_set_num_threads(1);

    std::vector<BenchRecord> records;
    for (int n : opt.n_list) {
        RatMatrix closed_out, oracle_out;
        BenchRecord closed_rec, oracle_rec;
        bool have_closed = false, have_oracle = false;

        if (opt.run_closed) {
            closed_rec.n = n;
            closed_rec.method = "closed";
            closed_rec.seconds =
                timed_median(opt.repeats, [&]() { closed_out = closed_form_pinv(n).mat; });
            closed_rec.peak_bits = closed_out.max_entry_bits();
            have_closed = true;
        }
        if (opt.run_oracle) {
            oracle_rec.n = n;
            oracle_rec.method = "oracle";
            if (n > opt.oracle_cutoff) {
                oracle_rec.skipped = true;
            } else {
                RatMatrix d = distance_matrix_closed(n).mat;  // input prep outside the clock
                oracle_rec.seconds =
                    timed_median(opt.repeats, [&]() { oracle_out = mp_pinv_oracle(d); });
                oracle_rec.peak_bits = oracle_out.max_entry_bits();
                have_oracle = true;
            }
        }
        if (have_closed && have_oracle) {
            bool agree = closed_out == oracle_out;
            closed_rec.verified = agree;
            oracle_rec.verified = agree;
        }
        if (opt.run_closed) records.push_back(std::move(closed_rec));
        if (opt.run_oracle) records.push_back(std::move(oracle_rec));
    }

    omp_set_num_threads(prev_threads);
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "n,method,seconds,peak_bits,verified\n";
    char buf[64];
    for (const auto& r : records) {
        out += std::to_string(r.n) + "," + r.method + ",";
        if (!r.skipped) {
            std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
            out += buf;
        }
        out += "," + std::to_string(r.skipped ? 0 : r.peak_bits);
        out += r.verified ? ",true" : ",false";
        out += '\n';
    }
    return out;
}

}  // namespace wheelinv
