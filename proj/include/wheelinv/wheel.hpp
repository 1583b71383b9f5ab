#pragma once

#include <cstddef>
#include <vector>

#include "wheelinv/matrix.hpp"

namespace wheelinv {

// Wheel graph on n vertices: vertex 0 is the hub, vertices 1..n-1 form the
// rim cycle, and the hub is adjacent to every rim vertex. Only odd n >= 5 is
// accepted anywhere in this project; the closed forms downstream need the
// even rim length.
struct WheelGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;
};

// Throws std::invalid_argument unless n is odd and >= 5.
WheelGraph build_wheel(int n);
void require_valid_order(int n);

struct DistanceMatrix {
    int n = 0;
    RatMatrix mat;
};

// Rim-to-rim distance template: first row of the rim block of the distance
// matrix, u = (0, 1, 2, 2, ..., 2, 1) of length n-1.
RatVector wheel_u_vector(int n);

// Distance matrix straight from the hub/rim structure: hub row and column all
// ones, rim block the circulant of wheel_u_vector.
DistanceMatrix distance_matrix_closed(int n);

// Distance matrix by breadth-first search over the adjacency lists, kept as
// an independent route to the same matrix.
DistanceMatrix distance_matrix_bfs(const WheelGraph& g);

// Kernel vector of the distance matrix: (0, 1, -1, 1, ..., -1), hub entry 0,
// alternating on the rim.
RatVector null_vector_d(int n);

// Centering projector I - (1/n) J.
RatMatrix centering_P(int n);

// Gram matrix -1/2 P d P of a squared-distance-like matrix d.
RatMatrix gram_G(const RatMatrix& d);

}  // namespace wheelinv
