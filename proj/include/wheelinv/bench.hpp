#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wheelinv {

struct BenchRecord {
    int n = 0;
    std::string method;        // "closed" or "oracle"
    double seconds = 0.0;      // median over repeats; meaningless when skipped
    std::size_t peak_bits = 0; // largest numerator/denominator bit length in the output
    bool verified = false;     // both methods ran for this n and agreed exactly
    bool skipped = false;      // oracle row suppressed by the cutoff
};

struct BenchOptions {
    std::vector<int> n_list;
    bool run_closed = true;
    bool run_oracle = true;
    int repeats = 3;
    int oracle_cutoff = 201;  // oracle rows with n above this are skipped
};

// Times the closed-form assembly against the rank-factorization oracle on the
// same inputs. Runs sequentially on one thread so the numbers compare the
// algorithms, not the scheduler.
std::vector<BenchRecord> run_bench(const BenchOptions& opt);

// "n,method,seconds,peak_bits,verified" header plus one line per record;
// a skipped row keeps its place with an empty seconds field.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace wheelinv
