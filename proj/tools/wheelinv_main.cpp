#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wheelinv/bench.hpp"
#include "wheelinv/closed_form.hpp"
#include "wheelinv/exact_algebra.hpp"
#include "wheelinv/serialize.hpp"
#include "wheelinv/special_laplacian.hpp"
#include "wheelinv/verify.hpp"
#include "wheelinv/wheel.hpp"

namespace {

using namespace wheelinv;

std::string format_matrix(const RatMatrix& m, const std::string& format) {
    if (format == "csv") return to_csv(m);
    if (format == "json") return to_json(m);
    return to_latex(m);
}

std::string format_vector(const RatVector& v, int n, const std::string& format) {
    if (format == "csv") return join_rationals(v, ",") + "\n";
    if (format == "json") {
        std::string out = "{\"n\":" + std::to_string(n) + ",\"alphas\":[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += "\"" + v[i].str() + "\"";
        }
        return out + "]}\n";
    }
    RatMatrix row(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row(0, i) = v[i];
    return to_latex(row);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

int run_verify(int n_max, bool perturb, const std::string& report_path) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.perturb = perturb;
    VerificationReport rep = run_verification(opt);
    std::string json = report_to_json(rep);

    if (report_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(report_path);
        if (!out || !(out << json)) {
            std::cerr << "error: cannot write report to " << report_path << "\n";
            return 2;
        }
        int failed = 0;
        for (const auto& c : rep.checks)
            if (!c.passed) {
                ++failed;
                std::cout << "FAIL " << c.check_id << " n=" << c.n << ": " << c.detail << "\n";
            }
        std::cout << "checks: " << rep.checks.size() - failed << " passed, " << failed
                  << " failed; overall " << (rep.overall ? "PASS" : "FAIL") << "\n";
    }
    return rep.overall ? 0 : 1;
}

int run_bench_cmd(const std::string& n_list, const std::string& methods, int repeats,
                  int oracle_cutoff) {
    BenchOptions opt;
    opt.n_list = parse_int_list(n_list);
    opt.repeats = repeats;
    opt.oracle_cutoff = oracle_cutoff;
    opt.run_closed = false;
    opt.run_oracle = false;
    std::stringstream ss(methods);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "closed")
            opt.run_closed = true;
        else if (item == "oracle")
            opt.run_oracle = true;
        else
            throw std::invalid_argument("unknown method '" + item + "'");
    }
    if (!opt.run_closed && !opt.run_oracle) throw std::invalid_argument("no methods selected");

    std::vector<BenchRecord> records = run_bench(opt);
    std::cout << bench_csv(records);
    bool mismatch = false;
    for (const auto& r : records) {
        if (r.skipped)
            std::cerr << "note: oracle skipped for n=" << r.n << " (cutoff " << oracle_cutoff
                      << ")\n";
        if (r.method == "closed" && opt.run_oracle && !r.skipped && r.n <= oracle_cutoff &&
            !r.verified)
            mismatch = true;
    }
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudoinverse toolkit for distance matrices of odd wheel graphs"};
    app.require_subcommand(1);

    int n = 5;
    std::string format = "csv";
    std::string method = "closed";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "latex"}));
    };

    CLI::App* dist = app.add_subcommand("dist", "distance matrix of the wheel on n vertices");
    dist->add_option("--n", n, "number of vertices, odd, >= 5")->required();
    add_format(dist);

    CLI::App* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of the distance matrix");
    pinv->add_option("--n", n, "number of vertices, odd, >= 5")->required();
    pinv->add_option("--method", method, "closed form or rank-factorization oracle")
        ->check(CLI::IsMember({"closed", "oracle"}));
    add_format(pinv);

    CLI::App* slap = app.add_subcommand("slap", "special Laplacian the closed form is built from");
    slap->add_option("--n", n, "number of vertices, odd, >= 5")->required();
    add_format(slap);

    CLI::App* alphas = app.add_subcommand("alphas", "coefficient table alpha_1..alpha_m");
    alphas->add_option("--n", n, "number of vertices, odd, >= 5")->required();
    add_format(alphas);

    int n_max = 21;
    bool perturb = false;
    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "run the whole check battery for odd n in [5, n-max]");
    verify->add_option("--n-max", n_max, "largest order to sweep (odd, >= 5)");
    verify->add_flag("--perturb", perturb,
                     "damage one Laplacian entry first; the run must then fail (test hook)");
    verify->add_option("--report", report_path, "write the JSON report here instead of stdout");

    std::string n_list, methods = "closed,oracle";
    int repeats = 3, oracle_cutoff = 201;
    CLI::App* bench = app.add_subcommand("bench", "time closed form vs oracle on the same inputs");
    bench->add_option("--n-list", n_list, "comma-separated wheel orders")->required();
    bench->add_option("--methods", methods, "subset of closed,oracle");
    bench->add_option("--repeats", repeats, "timing repeats per cell (median is reported)");
    bench->add_option("--oracle-cutoff", oracle_cutoff, "skip oracle runs for n above this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // normalize CLI11's usage-error codes
    }

    try {
        if (dist->parsed()) {
            std::cout << format_matrix(distance_matrix_closed(n).mat, format);
            return 0;
        }
        if (pinv->parsed()) {
            RatMatrix k = (method == "closed") ? closed_form_pinv(n).mat
                                               : mp_pinv_oracle(distance_matrix_closed(n).mat);
            std::cout << format_matrix(k, format);
            return 0;
        }
        if (slap->parsed()) {
            std::cout << format_matrix(special_laplacian(n).mat, format);
            return 0;
        }
        if (alphas->parsed()) {
            std::cout << format_vector(alpha_table(n).alphas, n, format);
            return 0;
        }
        if (verify->parsed()) return run_verify(n_max, perturb, report_path);
        if (bench->parsed()) return run_bench_cmd(n_list, methods, repeats, oracle_cutoff);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
