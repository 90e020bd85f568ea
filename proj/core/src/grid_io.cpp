#include "mzres/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mzres {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <class T>
T read_value(std::istream& in, const char* what) {
    T v;
    if (!(in >> v)) throw GridError(std::string("grid file: failed to read ") + what);
    return v;
}

} // namespace

Grid read_grid(std::istream& in) {
    const auto nnodes = read_value<std::int64_t>(in, "node count");
    const auto ntria = read_value<std::int64_t>(in, "triangle count");
    const auto nquad = read_value<std::int64_t>(in, "quad count");
    if (nnodes <= 0 || ntria < 0 || nquad < 0)
        throw GridError("grid file: invalid header counts");

    std::vector<Vec2> nodes(nnodes);
    for (auto& p : nodes) {
        p.x = read_value<double>(in, "node x");
        p.y = read_value<double>(in, "node y");
    }
    std::vector<std::array<std::int32_t, 3>> tris(ntria);
    for (auto& t : tris) {
        for (int v = 0; v < 3; ++v)
            t[v] = read_value<std::int32_t>(in, "triangle node") - 1;
    }
    std::vector<std::array<std::int32_t, 4>> quads(nquad);
    for (auto& q : quads) {
        for (int v = 0; v < 4; ++v)
            q[v] = read_value<std::int32_t>(in, "quad node") - 1;
    }
    const auto nbound = read_value<std::int64_t>(in, "boundary segment count");
    if (nbound < 0) throw GridError("grid file: invalid boundary segment count");
    std::vector<BoundarySegment> segments(nbound);
    for (auto& seg : segments) {
        seg.condition = read_value<std::string>(in, "boundary condition name");
        boundary_kind_from_string(seg.condition);
        const auto count = read_value<std::int64_t>(in, "boundary node count");
        if (count < 2) throw GridError("grid file: boundary segment too short");
        seg.nodes.resize(count);
        for (auto& idx : seg.nodes)
            idx = read_value<std::int32_t>(in, "boundary node index") - 1;
    }
    return build_grid(std::move(nodes), std::move(tris), std::move(quads),
                      std::move(segments));
}

Grid read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GridError("cannot open grid file: " + path);
    return read_grid(in);
}

void write_grid(const Grid& g, std::ostream& out) {
    out << g.n_nodes() << ' ' << g.triangles.size() << ' ' << g.quads.size() << '\n';
    for (const Vec2& p : g.xy) out << fmt17(p.x) << ' ' << fmt17(p.y) << '\n';
    for (const auto& t : g.triangles)
        out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    for (const auto& q : g.quads)
        out << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
    out << g.segments.size() << '\n';
    for (const auto& seg : g.segments) {
        out << seg.condition << ' ' << seg.nodes.size() << '\n';
        for (auto idx : seg.nodes) out << idx + 1 << '\n';
    }
}

void write_grid_file(const Grid& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GridError("cannot open grid file for writing: " + path);
    write_grid(g, out);
}

} // namespace mzres
