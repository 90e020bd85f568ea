#include "mzres/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace mzres {

std::string to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::Freestream: return "freestream";
        case BoundaryKind::SlipWall: return "slip_wall";
        case BoundaryKind::NoSlipWall: return "noslip_wall";
        case BoundaryKind::Outflow: return "outflow";
    }
    return "unknown";
}

BoundaryKind boundary_kind_from_string(const std::string& name) {
    if (name == "freestream") return BoundaryKind::Freestream;
    if (name == "slip_wall") return BoundaryKind::SlipWall;
    if (name == "noslip_wall") return BoundaryKind::NoSlipWall;
    if (name == "outflow") return BoundaryKind::Outflow;
    throw GridError("unknown boundary condition name: '" + name + "'");
}

Vec2 Grid::closure_defect(std::int32_t node) const {
    Vec2 sum{0, 0};
    for (std::int32_t e = edge_offset[node]; e < edge_offset[node + 1]; ++e) {
        const Edge& ed = edges[edge_ids[e]];
        sum += (ed.j == node) ? ed.normal : ed.normal * -1.0;
    }
    for (const BoundaryFace& f : bfaces) {
        if (f.node == node) sum += f.normal;
    }
    return sum;
}

double Grid::total_volume() const {
    double v = 0.0;
    for (double vj : volumes) v += vj;
    return v;
}

namespace {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// Outward normal of a boundary piece when the interior lies on the left of d.
Vec2 rot_right(const Vec2& d) { return {d.y, -d.x}; }

} // namespace

Grid build_grid(std::vector<Vec2> nodes,
                std::vector<std::array<std::int32_t, 3>> triangles,
                std::vector<BoundarySegment> segments) {
    return build_grid(std::move(nodes), std::move(triangles), {}, std::move(segments));
}

Grid build_grid(std::vector<Vec2> nodes,
                std::vector<std::array<std::int32_t, 3>> triangles,
                std::vector<std::array<std::int32_t, 4>> quads,
                std::vector<BoundarySegment> segments) {
    Grid g;
    g.xy = std::move(nodes);
    g.triangles = std::move(triangles);
    g.quads = std::move(quads);
    g.segments = std::move(segments);
    const std::size_t n = g.xy.size();
    if (n == 0) throw GridError("grid has no nodes");

    std::vector<std::array<std::int32_t, 3>> tris = g.triangles;
    tris.reserve(tris.size() + 2 * g.quads.size());
    for (const auto& q : g.quads) {
        tris.push_back({q[0], q[1], q[2]});
        tris.push_back({q[0], q[2], q[3]});
    }

    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& tri = tris[t];
        for (int v = 0; v < 3; ++v) {
            if (tri[v] < 0 || static_cast<std::size_t>(tri[v]) >= n)
                throw GridError("triangle " + std::to_string(t) + " references invalid node");
        }
        if (signed_area(g.xy[tri[0]], g.xy[tri[1]], g.xy[tri[2]]) <= 0.0)
            throw GridError("degenerate cell (non-positive area) at triangle " +
                            std::to_string(t));
    }

    // Canonical edge numbering: (min,max) pairs in lexicographic order, so the
    // accumulation order (and hence the bits of every metric) is fixed by the
    // connectivity alone.
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> edge_index;
    for (const auto& tri : tris) {
        for (int v = 0; v < 3; ++v) {
            std::int32_t p = tri[v], q = tri[(v + 1) % 3];
            edge_index.emplace(std::minmax(p, q), -1);
        }
    }
    g.edges.reserve(edge_index.size());
    for (auto& [key, idx] : edge_index) {
        idx = static_cast<std::int32_t>(g.edges.size());
        g.edges.push_back(Edge{key.first, key.second, {0, 0}});
    }

    g.volumes.assign(n, 0.0);
    std::map<std::pair<std::int32_t, std::int32_t>, int> edge_use; // boundary detection
    for (const auto& tri : tris) {
        const Vec2 a = g.xy[tri[0]], b = g.xy[tri[1]], c = g.xy[tri[2]];
        const double area = signed_area(a, b, c);
        const Vec2 centroid = (a + b + c) * (1.0 / 3.0);
        for (int v = 0; v < 3; ++v) {
            // The median dual splits a triangle into three equal-area quads.
            g.volumes[tri[v]] += area / 3.0;
            const std::int32_t p = tri[v], q = tri[(v + 1) % 3];
            const Vec2 mid = (g.xy[p] + g.xy[q]) * 0.5;
            const Vec2 contrib = rot_right(centroid - mid); // points from p toward q
            Edge& e = g.edges[edge_index.at(std::minmax(p, q))];
            if (e.j == p)
                e.normal += contrib;
            else
                e.normal += contrib * -1.0;
            edge_use[std::minmax(p, q)] += 1;
        }
    }

    // Boundary faces from tagged segment chains; interior must sit on the left
    // of each consecutive pair, matching the adjacent triangle's orientation.
    std::map<std::pair<std::int32_t, std::int32_t>, bool> directed_tri_edge;
    for (const auto& tri : tris) {
        for (int v = 0; v < 3; ++v)
            directed_tri_edge[{tri[v], tri[(v + 1) % 3]}] = true;
    }
    std::map<std::pair<std::int32_t, std::int32_t>, int> tagged;
    for (const auto& seg : g.segments) {
        const BoundaryKind kind = boundary_kind_from_string(seg.condition);
        if (seg.nodes.size() < 2)
            throw GridError("boundary segment '" + seg.condition + "' has fewer than 2 nodes");
        for (std::size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
            std::int32_t p = seg.nodes[i], q = seg.nodes[i + 1];
            auto use = edge_use.find(std::minmax(p, q));
            if (use == edge_use.end() || use->second != 1)
                throw GridError("boundary segment '" + seg.condition +
                                "' pair (" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not a boundary edge");
            if (!directed_tri_edge.count({p, q})) std::swap(p, q);
            if (!directed_tri_edge.count({p, q}))
                throw GridError("boundary pair not adjacent to any triangle");
            tagged[std::minmax(p, q)] += 1;
            const Vec2 mid = (g.xy[p] + g.xy[q]) * 0.5;
            g.bfaces.push_back(BoundaryFace{p, rot_right(mid - g.xy[p]), kind});
            g.bfaces.push_back(BoundaryFace{q, rot_right(g.xy[q] - mid), kind});
        }
    }
    for (const auto& [key, uses] : edge_use) {
        if (uses == 1 && !tagged.count(key))
            throw GridError("untagged boundary edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
        if (uses > 2)
            throw GridError("non-manifold edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
        if (tagged.count(key) && tagged.at(key) > 1)
            throw GridError("boundary edge tagged twice");
    }

    // CSR adjacency over edges.
    g.edge_offset.assign(n + 1, 0);
    for (const Edge& e : g.edges) {
        g.edge_offset[e.j + 1] += 1;
        g.edge_offset[e.k + 1] += 1;
    }
    for (std::size_t j = 0; j < n; ++j) g.edge_offset[j + 1] += g.edge_offset[j];
    g.edge_ids.assign(g.edges.size() * 2, -1);
    {
        std::vector<std::int32_t> cursor(g.edge_offset.begin(), g.edge_offset.end() - 1);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            g.edge_ids[cursor[g.edges[e].j]++] = static_cast<std::int32_t>(e);
            g.edge_ids[cursor[g.edges[e].k]++] = static_cast<std::int32_t>(e);
        }
    }

    // Wall constraints. No-slip wins over slip where both meet (plate leading
    // edge); a slip node whose face normals nearly cancel (sharp cusp) is left
    // unconstrained because no single tangency direction exists there.
    g.constraint.assign(n, NodeConstraint::None);
    g.wall_normal.assign(n, Vec2{0, 0});
    std::vector<Vec2> slip_sum(n, Vec2{0, 0});
    std::vector<double> slip_mag(n, 0.0);
    for (const BoundaryFace& f : g.bfaces) {
        if (f.kind == BoundaryKind::NoSlipWall) {
            g.constraint[f.node] = NodeConstraint::NoSlip;
        } else if (f.kind == BoundaryKind::SlipWall) {
            slip_sum[f.node] += f.normal;
            slip_mag[f.node] += f.normal.norm();
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (g.constraint[j] == NodeConstraint::NoSlip) continue;
        if (slip_mag[j] > 0.0) {
            const double mag = slip_sum[j].norm();
            if (mag > 0.5 * slip_mag[j]) {
                g.constraint[j] = NodeConstraint::SlipTangency;
                g.wall_normal[j] = slip_sum[j] * (1.0 / mag);
            }
        }
    }
    return g;
}

} // namespace mzres
