// Compares the OpenMP kernels against their serial references on random
// rational matrices: wall time side by side, plus an exact equality check of
// the results. Usage: bench_kernels [size ...], default sizes 32 64 96.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/matrix.hpp"

using namespace wheelinv;

namespace {

RatMatrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

template <typename F>
double time_once(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    for (int i = 1; i < argc; ++i) {
        long v = std::strtol(argv[i], nullptr, 10);
        if (v < 2) {
            std::fprintf(stderr, "usage: bench_kernels [size ...]\n");
            return 2;
        }
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) sizes = {32, 64, 96};

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-8s %-10s %12s %12s %9s %6s\n", "kernel", "size", "serial_s", "parallel_s",
                "speedup", "agree");

    std::mt19937 rng(20240817);
    for (std::size_t n : sizes) {
        RatMatrix a = random_matrix(n, rng);
        RatMatrix b = random_matrix(n, rng);

        RatMatrix ref, par;
        double ts = time_once([&]() { ref = mul_serial(a, b); });
        double tp = time_once([&]() { par = mul(a, b); });
        std::printf("%-8s %-10zu %12.4f %12.4f %8.2fx %6s\n", "mul", n, ts, tp, ts / tp,
                    ref == par ? "yes" : "NO");

        std::size_t rs = 0, rp = 0;
        ts = time_once([&]() { rs = rank_serial(a); });
        tp = time_once([&]() { rp = rank(a); });
        std::printf("%-8s %-10zu %12.4f %12.4f %8.2fx %6s\n", "rank", n, ts, tp, ts / tp,
                    rs == rp ? "yes" : "NO");
    }
    return 0;
}
