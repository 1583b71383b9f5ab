#pragma once

#include <string>

#include "wheelinv/matrix.hpp"

namespace wheelinv {

// Rationals render as "p/q" with "/q" omitted when the denominator is 1.
// All emitters are pure functions of their input, so output bytes are stable.

// One matrix row per line, entries comma-separated, trailing newline.
std::string to_csv(const RatMatrix& m);
RatMatrix parse_csv(const std::string& text);

// {"n": <rows>, "rows": [["p/q", ...], ...]} on a single line.
std::string to_json(const RatMatrix& m);
RatMatrix parse_json(const std::string& text);

// Common-denominator display: \frac{1}{q}\left[\begin{array}{cc...} integer
// entries \end{array}\right], the \frac prefix dropped when q is 1.
std::string to_latex(const RatMatrix& m);

std::string join_rationals(const RatVector& v, const std::string& sep);

}  // namespace wheelinv
