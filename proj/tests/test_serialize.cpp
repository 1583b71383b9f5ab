#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "golden_data.hpp"
#include "wheelinv/serialize.hpp"
#include "wheelinv/special_laplacian.hpp"
#include "wheelinv/wheel.hpp"

using namespace wheelinv;

namespace {

std::string strip_layout(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\n' && c != '\t' && c != '~') out += c;
    return out;
}

}  // namespace

TEST_CASE("csv emission") {
    CHECK(to_csv(distance_matrix_closed(5).mat) ==
          "0,1,1,1,1\n"
          "1,0,1,2,1\n"
          "1,1,0,1,2\n"
          "1,2,1,0,1\n"
          "1,1,2,1,0\n");
    CHECK(to_csv(golden::pinv5()).substr(0, 14) == "-1,1/4,1/4,1/4");
}

TEST_CASE("csv round trip") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 99);
    for (int iter = 0; iter < 10; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        RatMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(num(rng), den(rng));
        CHECK(parse_csv(to_csv(m)) == m);
    }
    CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("1,2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("1,x\n"), std::invalid_argument);
}

TEST_CASE("json round trip and schema") {
    RatMatrix m = golden::slap5();
    std::string j = to_json(m);
    CHECK(j.substr(0, 6) == "{\"n\":5");
    CHECK(j.find("\"rows\":[[\"2\",\"-1/2\"") != std::string::npos);
    CHECK(parse_json(j) == m);
    CHECK_THROWS_AS(parse_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("{\"n\":2,\"rows\":[[\"1\"]]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("{\"n\":1,\"rows\":[[1]]}"), std::invalid_argument);
}

TEST_CASE("latex uses one factored denominator") {
    std::string got = to_latex(special_laplacian(5).mat);
    std::string expected =
        "\\frac{1}{8}\\left[\\begin{array}{ccccc}\n"
        "16 & -4 & -4 & -4 & -4 \\\\\n"
        "-4 & 5 & 1 & -3 & 1 \\\\\n"
        "-4 & 1 & 5 & 1 & -3 \\\\\n"
        "-4 & -3 & 1 & 5 & 1 \\\\\n"
        "-4 & 1 & -3 & 1 & 5\n"
        "\\end{array}\\right]\n";
    CHECK(strip_layout(got) == strip_layout(expected));

    std::string plain = to_latex(distance_matrix_closed(5).mat);
    CHECK(plain.find("\\frac") == std::string::npos);
    CHECK(plain.substr(0, 5) == "\\left");
}

TEST_CASE("emission is deterministic") {
    RatMatrix m = special_laplacian(9).mat;
    CHECK(to_csv(m) == to_csv(m));
    CHECK(to_json(m) == to_json(m));
    CHECK(to_latex(m) == to_latex(m));
}

TEST_CASE("join rationals") {
    CHECK(join_rationals({Rational(1, 8), Rational(-3, 8)}, ",") == "1/8,-3/8");
    CHECK(join_rationals({}, ",").empty());
}
