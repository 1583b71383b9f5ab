#include "wheelinv/wheel.hpp"

#include <queue>
#include <stdexcept>

namespace wheelinv {

void require_valid_order(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("wheel order must be odd and at least 5");
}

WheelGraph build_wheel(int n) {
    require_valid_order(n);
    WheelGraph g;
    g.n = n;
    g.adj.assign(n, std::vector<bool>(n, false));
    auto connect = [&](int a, int b) {
        g.adj[a][b] = true;
        g.adj[b][a] = true;
    };
    for (int v = 1; v < n; ++v) connect(0, v);
    for (int v = 1; v < n - 1; ++v) connect(v, v + 1);
    connect(n - 1, 1);
    return g;
}

RatVector wheel_u_vector(int n) {
    require_valid_order(n);
    RatVector u(n - 1);
    u[0] = 0;
    for (int j = 1; j < n - 1; ++j) u[j] = (j == 1 || j == n - 2) ? 1 : 2;
    return u;
}

DistanceMatrix distance_matrix_closed(int n) {
    require_valid_order(n);
    DistanceMatrix d;
    d.n = n;
    d.mat = RatMatrix(n, n);
    for (int j = 1; j < n; ++j) {
        d.mat(0, j) = 1;
        d.mat(j, 0) = 1;
    }
    RatMatrix rim = Circulant(wheel_u_vector(n)).to_dense();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) d.mat(i, j) = rim(i - 1, j - 1);
    return d;
}

DistanceMatrix distance_matrix_bfs(const WheelGraph& g) {
    const int n = g.n;
    require_valid_order(n);
    DistanceMatrix d;
    d.n = n;
    d.mat = RatMatrix(n, n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w)
                if (g.adj[v][w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int t = 0; t < n; ++t) {
            if (dist[t] < 0) throw std::logic_error("bfs: graph not connected");
            d.mat(s, t) = dist[t];
        }
    }
    return d;
}

RatVector null_vector_d(int n) {
    require_valid_order(n);
    RatVector v(n);
    v[0] = 0;
    for (int i = 1; i < n; ++i) v[i] = (i % 2 == 1) ? 1 : -1;
    return v;
}

RatMatrix centering_P(int n) {
    if (n <= 0) throw std::invalid_argument("centering_P: positive order required");
    RatMatrix p(n, n);
    Rational offdiag(-1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = (i == j) ? Rational(n - 1, n) : offdiag;
    return p;
}

RatMatrix gram_G(const RatMatrix& d) {
    if (d.rows() != d.cols()) throw std::invalid_argument("gram_G: square matrix required");
    RatMatrix p = centering_P(static_cast<int>(d.rows()));
    return mul(p, mul(d, p)).scaled(Rational(-1, 2));
}

}  // namespace wheelinv
