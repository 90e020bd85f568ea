#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mzres/types.hpp"

namespace mzres {

enum class BoundaryKind : std::uint8_t {
    Freestream,
    SlipWall,
    NoSlipWall,
    Outflow,
};

std::string to_string(BoundaryKind k);
BoundaryKind boundary_kind_from_string(const std::string& name);

/// Interior dual face attached to grid edge (j, k). The directed area vector
/// points from j toward k; the flux through it enters node j's residual with
/// a plus sign and node k's with a minus sign.
struct Edge {
    std::int32_t j = -1;
    std::int32_t k = -1;
    Vec2 normal; // directed area vector (length = face measure)
};

/// Half-edge piece of the boundary closing one node's dual volume.
struct BoundaryFace {
    std::int32_t node = -1;
    Vec2 normal; // outward directed area vector
    BoundaryKind kind = BoundaryKind::Freestream;
};

/// Ordered node chain making up one tagged boundary segment (file format unit).
struct BoundarySegment {
    std::string condition;
    std::vector<std::int32_t> nodes;
};

/// Wall constraint attached to a node by the surrounding boundary faces.
enum class NodeConstraint : std::uint8_t {
    None,
    SlipTangency, // velocity projected onto the wall tangent
    NoSlip,       // velocity pinned to zero
};

/// Node-centered median-dual grid. Immutable after construction through
/// build_grid(); solvers only ever read it.
struct Grid {
    std::vector<Vec2> xy;
    std::vector<std::array<std::int32_t, 3>> triangles;
    std::vector<std::array<std::int32_t, 4>> quads;
    std::vector<BoundarySegment> segments;

    std::vector<Edge> edges;
    std::vector<double> volumes;
    std::vector<BoundaryFace> bfaces;

    // CSR adjacency over edges: for node j, incident edge ids are
    // edge_ids[edge_offset[j] .. edge_offset[j+1]).
    std::vector<std::int32_t> edge_offset;
    std::vector<std::int32_t> edge_ids;

    std::vector<NodeConstraint> constraint;
    std::vector<Vec2> wall_normal; // unit, only meaningful for SlipTangency nodes

    std::size_t n_nodes() const { return xy.size(); }

    /// Sum of all directed area vectors incident to a node (edges respecting
    /// orientation plus boundary faces); zero for a closed dual volume.
    Vec2 closure_defect(std::int32_t node) const;

    double total_volume() const;
};

/// Assembles dual metrics, adjacency and wall constraints from nodes,
/// triangles and tagged boundary segments. Throws GridError for degenerate
/// elements (non-positive area, naming the element) and inconsistent
/// boundary chains.
Grid build_grid(std::vector<Vec2> nodes,
                std::vector<std::array<std::int32_t, 3>> triangles,
                std::vector<BoundarySegment> segments);

/// As above with quad elements; metrics treat each quad as two triangles
/// split along the (n1, n3) diagonal, while the element lists keep the file
/// connectivity for exact round-trip I/O.
Grid build_grid(std::vector<Vec2> nodes,
                std::vector<std::array<std::int32_t, 3>> triangles,
                std::vector<std::array<std::int32_t, 4>> quads,
                std::vector<BoundarySegment> segments);

} // namespace mzres
