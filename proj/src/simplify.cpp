#include "frechet/simplify.hpp"

#include <stdexcept>

namespace frechet {

Simplification greedy_simplify(const Curve& c, double mu, Norm norm) {
    if (mu < 0.0) throw std::invalid_argument("mu must be >= 0");
    const std::size_t n = c.size();

    Simplification s;
    s.mu = mu;
    s.index_map.push_back(0);

    std::size_t cur = 0;
    while (cur + 1 < n) {
        // First vertex after cur that exits the closed mu-ball around c[cur].
        std::size_t t = cur + 1;
        while (t < n && dist(c[cur], c[t], norm) <= mu) ++t;
        if (t == n) break;
        s.index_map.push_back(t);
        cur = t;
    }
    if (cur != n - 1) s.index_map.push_back(n - 1);

    std::vector<Point> verts;
    verts.reserve(s.index_map.size());
    for (std::size_t idx : s.index_map) verts.push_back(c[idx]);
    s.curve = Curve(std::move(verts));
    return s;
}

}  // namespace frechet
