#include "wheelinv/serialize.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace wheelinv {

std::string join_rationals(const RatVector& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

std::string to_csv(const RatMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += join_rationals(m.row(i), ",");
        out += '\n';
    }
    return out;
}

RatMatrix parse_csv(const std::string& text) {
    std::vector<RatVector> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        RatVector row;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string cell = line.substr(start, comma == std::string::npos ? comma : comma - start);
            row.push_back(Rational::from_string(cell));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("parse_csv: no rows");
    return RatMatrix::from_rows(rows);
}

std::string to_json(const RatMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.rows();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
}

RatMatrix parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("parse_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("parse_json: expected {\"n\": ..., \"rows\": [...]}");
    std::vector<RatVector> rows;
    for (const auto& jr : j["rows"]) {
        if (!jr.is_array()) throw std::invalid_argument("parse_json: rows must be arrays");
        RatVector row;
        for (const auto& cell : jr) {
            if (!cell.is_string()) throw std::invalid_argument("parse_json: entries must be strings");
            row.push_back(Rational::from_string(cell.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || !j["n"].is_number_integer() ||
        j["n"].get<long>() != static_cast<long>(rows.size()))
        throw std::invalid_argument("parse_json: n does not match row count");
    return RatMatrix::from_rows(rows);
}

std::string to_latex(const RatMatrix& m) {
    mpz_class den(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).den().get_mpz_t());

    std::string out;
    if (den != 1) out += "\\frac{1}{" + den.get_str() + "}";
    out += "\\left[\\begin{array}{";
    out += std::string(m.cols(), 'c');
    out += "}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " & ";
            mpz_class scaled = m(i, j).num() * (den / m(i, j).den());
            out += scaled.get_str();
        }
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    out += "\\end{array}\\right]\n";
    return out;
}

}  // namespace wheelinv
