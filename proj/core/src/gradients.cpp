#include "mzres/gradients.hpp"

namespace mzres {

LsqGradients::LsqGradients(const Grid& grid) {
    const std::size_t n = grid.n_nodes();
    inv_.assign(n, {0.0, 0.0, 0.0});
    std::vector<std::array<double, 3>> normal(n, {0.0, 0.0, 0.0});
    for (const Edge& e : grid.edges) {
        const Vec2 d = grid.xy[e.k] - grid.xy[e.j];
        normal[e.j][0] += d.x * d.x;
        normal[e.j][1] += d.x * d.y;
        normal[e.j][2] += d.y * d.y;
        normal[e.k][0] += d.x * d.x;
        normal[e.k][1] += d.x * d.y;
        normal[e.k][2] += d.y * d.y;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double a = normal[j][0], b = normal[j][1], c = normal[j][2];
        const double det = a * c - b * b;
        const double scale = a + c;
        if (!(det > 1e-24 * scale * scale)) {
            rank_warnings_ += 1; // gradient stays zero at this node
            continue;
        }
        inv_[j] = {c / det, -b / det, a / det};
    }
}

void LsqGradients::evaluate(const Grid& grid, const PrimitiveState& w,
                            std::vector<Grad4>& out) const {
    const std::size_t n = grid.n_nodes();
    out.assign(n, Grad4{Vec2{0, 0}, Vec2{0, 0}, Vec2{0, 0}, Vec2{0, 0}});
    std::vector<Grad4>& rhs = out; // accumulate moments in place, solve after
    for (const Edge& e : grid.edges) {
        const Vec2 d = grid.xy[e.k] - grid.xy[e.j];
        for (int c = 0; c < 4; ++c) {
            const double dw = w[e.k][c] - w[e.j][c];
            // (-d, -dw) gives the same products, so both endpoints share them.
            rhs[e.j][c].x += d.x * dw;
            rhs[e.j][c].y += d.y * dw;
            rhs[e.k][c].x += d.x * dw;
            rhs[e.k][c].y += d.y * dw;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& m = inv_[j];
        for (int c = 0; c < 4; ++c) {
            const Vec2 r = rhs[j][c];
            out[j][c] = Vec2{m[0] * r.x + m[1] * r.y, m[1] * r.x + m[2] * r.y};
        }
    }
}

} // namespace mzres
