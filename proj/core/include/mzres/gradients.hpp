#pragma once

#include <array>
#include <vector>

#include "mzres/grid.hpp"
#include "mzres/state.hpp"

namespace mzres {

/// Gradient of each primitive variable at one node.
using Grad4 = std::array<Vec2, 4>;

/// Unweighted least-squares gradients over edge neighbors. Exact for linear
/// fields. A rank-deficient stencil (fewer than two non-collinear neighbors)
/// yields a zero gradient and is counted, not fatal.
class LsqGradients {
  public:
    explicit LsqGradients(const Grid& grid);

    void evaluate(const Grid& grid, const PrimitiveState& w,
                  std::vector<Grad4>& out) const;

    int rank_warnings() const { return rank_warnings_; }

  private:
    // Row-major inverse normal matrices; zeroed where rank-deficient.
    std::vector<std::array<double, 3>> inv_; // (ixx, ixy, iyy)
    int rank_warnings_ = 0;
};

} // namespace mzres
