#include "frechet/oracle.hpp"

#include <algorithm>
#include <limits>

namespace frechet {

FrechetResult dfd_dp(const Curve& a, const Curve& b, Norm norm) {
    require_same_dim(a, b);
    const std::size_t n = a.size(), m = b.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // T[i*m+j] = min over viable paths ending at (i,j) of the max distance.
    std::vector<double> t(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = dist(a[i], b[j], norm);
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = kInf;
                if (i > 0) best = std::min(best, t[(i - 1) * m + j]);
                if (j > 0) best = std::min(best, t[i * m + j - 1]);
                if (i > 0 && j > 0) best = std::min(best, t[(i - 1) * m + j - 1]);
            }
            t[i * m + j] = std::max(d, best);
        }
    }

    FrechetResult res;
    res.value = t[n * m - 1];

    // Backtrack along minimal predecessors.
    Correspondence path;
    std::size_t i = n - 1, j = m - 1;
    path.emplace_back(i, j);
    while (i > 0 || j > 0) {
        double best = kInf;
        std::size_t bi = i, bj = j;
        if (i > 0 && j > 0 && t[(i - 1) * m + j - 1] <= best) {
            best = t[(i - 1) * m + j - 1];
            bi = i - 1;
            bj = j - 1;
        }
        if (i > 0 && t[(i - 1) * m + j] < best) {
            best = t[(i - 1) * m + j];
            bi = i - 1;
            bj = j;
        }
        if (j > 0 && t[i * m + j - 1] < best) {
            best = t[i * m + j - 1];
            bi = i;
            bj = j - 1;
        }
        i = bi;
        j = bj;
        path.emplace_back(i, j);
    }
    std::reverse(path.begin(), path.end());

    double worst = -1.0;
    for (const auto& [pi, qj] : path) {
        const double d = dist(a[pi], b[qj], norm);
        if (d > worst) {
            worst = d;
            res.witness_pair = {pi, qj};
        }
    }
    res.witness = std::move(path);
    return res;
}

bool dfd_decision_naive(const Curve& a, const Curve& b, double delta, Norm norm) {
    require_same_dim(a, b);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    const std::size_t n = a.size(), m = b.size();
    std::vector<char> reach(n * m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (dist(a[i], b[j], norm) > delta) continue;
            bool r = (i == 0 && j == 0);
            if (i > 0) r = r || reach[(i - 1) * m + j];
            if (j > 0) r = r || reach[i * m + j - 1];
            if (i > 0 && j > 0) r = r || reach[(i - 1) * m + j - 1];
            reach[i * m + j] = r ? 1 : 0;
        }
    }
    return reach[n * m - 1] != 0;
}

std::vector<std::size_t> reachable_column_naive(const Curve& a, const Curve& b, double delta,
                                                Norm norm, std::size_t col) {
    require_same_dim(a, b);
    const std::size_t n = a.size(), m = b.size();
    if (col >= n) throw std::invalid_argument("column index out of range");
    std::vector<char> reach(n * m, 0);
    for (std::size_t i = 0; i <= col; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (dist(a[i], b[j], norm) > delta) continue;
            bool r = (i == 0 && j == 0);
            if (i > 0) r = r || reach[(i - 1) * m + j];
            if (j > 0) r = r || reach[i * m + j - 1];
            if (i > 0 && j > 0) r = r || reach[(i - 1) * m + j - 1];
            reach[i * m + j] = r ? 1 : 0;
        }
    }
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < m; ++j)
        if (reach[col * m + j]) rows.push_back(j);
    return rows;
}

}  // namespace frechet
