#include "mzres/gridgen.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace mzres {

void JoukowskyGridSpec::validate() const {
    if (n_circumferential < 8 || n_circumferential % 2 != 0)
        throw GridError("joukowsky grid: n_circumferential must be even and >= 8");
    if (n_radial < 4) throw GridError("joukowsky grid: n_radial must be >= 4");
    if (!(outer_radius_chords > 5.0))
        throw GridError("joukowsky grid: outer radius must exceed 5 chords");
    if (!(radial_stretch >= 1.0))
        throw GridError("joukowsky grid: radial stretch must be >= 1");
    // The map z = zeta + 1/zeta needs the circle through +1 to strictly
    // enclose the other critical point -1; otherwise the image degenerates
    // (zero offset maps the circle onto a flat segment).
    const std::complex<double> zc(center_x, center_y);
    const double r0 = std::abs(1.0 - zc);
    if (!(r0 - std::abs(-1.0 - zc) > 1e-6))
        throw GridError("joukowsky grid: circle center offset gives a degenerate "
                        "(zero-thickness) airfoil");
}

void FlatPlateGridSpec::validate() const {
    if (nx < 4 || ny < 4) throw GridError("flat plate grid: nx and ny must be >= 4");
    if (!(stretch >= 1.0)) throw GridError("flat plate grid: stretching factor must be >= 1");
    if (!(x_max > x_min)) throw GridError("flat plate grid: empty x extent");
    if (!(height > 0.0)) throw GridError("flat plate grid: height must be positive");
    // plate_start past x_max is allowed and yields an all-symmetry bottom.
}

namespace {

// Fixed-diagonal split of the structured quad (i,k)-(i+1,k)-(i+1,k+1)-(i,k+1).
void split_quad(std::vector<std::array<std::int32_t, 3>>& tris, std::int32_t a,
                std::int32_t b, std::int32_t c, std::int32_t d) {
    tris.push_back({a, b, c});
    tris.push_back({a, c, d});
}

} // namespace

Grid generate_joukowsky_ogrid(const JoukowskyGridSpec& spec) {
    spec.validate();
    const int nc = spec.n_circumferential;
    const int nr = spec.n_radial;
    const std::complex<double> zc(spec.center_x, spec.center_y);
    const double r0 = std::abs(1.0 - zc);
    const double theta_te = std::arg(1.0 - zc);

    // Chord of the mapped airfoil, for normalization to unit chord.
    auto map = [&](std::complex<double> zeta) { return zeta + 1.0 / zeta; };
    double x_lo = 1e300, x_hi = -1e300;
    for (int i = 0; i < 4 * nc; ++i) {
        const double th = theta_te + 2.0 * M_PI * i / (4.0 * nc);
        const auto z = map(zc + std::polar(r0, th));
        x_lo = std::min(x_lo, z.real());
        x_hi = std::max(x_hi, z.real());
    }
    const double chord = x_hi - x_lo;

    // Geometric radial distribution in the map plane; s = r/r0 runs from 1 to
    // the scale whose image sits near the requested farfield distance.
    const double s_max = spec.outer_radius_chords * chord / r0;
    std::vector<double> s(nr, 1.0);
    {
        const double q = spec.radial_stretch;
        double total = 0.0, step = 1.0;
        for (int k = 1; k < nr; ++k) {
            total += step;
            step *= q;
        }
        double acc = 0.0;
        step = (s_max - 1.0) / total;
        for (int k = 1; k < nr; ++k) {
            acc += step;
            s[k] = 1.0 + acc;
            step *= q;
        }
    }

    std::vector<Vec2> nodes(static_cast<std::size_t>(nc) * nr);
    for (int k = 0; k < nr; ++k) {
        for (int i = 0; i < nc; ++i) {
            const double th = theta_te + 2.0 * M_PI * i / nc;
            const auto z = map(zc + std::polar(r0 * s[k], th));
            nodes[static_cast<std::size_t>(k) * nc + i] =
                Vec2{(z.real() - x_lo) / chord, z.imag() / chord};
        }
    }

    auto id = [&](int i, int k) { return static_cast<std::int32_t>(k * nc + (i % nc)); };
    std::vector<std::array<std::int32_t, 3>> tris;
    tris.reserve(static_cast<std::size_t>(2) * nc * (nr - 1));
    // Counterclockwise in the physical plane: radially out first, since the
    // circumferential index runs clockwise around the body seen from outside.
    for (int k = 0; k + 1 < nr; ++k) {
        for (int i = 0; i < nc; ++i)
            split_quad(tris, id(i, k), id(i, k + 1), id(i + 1, k + 1), id(i + 1, k));
    }

    BoundarySegment wall{to_string(BoundaryKind::SlipWall), {}};
    BoundarySegment farfield{to_string(BoundaryKind::Freestream), {}};
    for (int i = 0; i <= nc; ++i) {
        wall.nodes.push_back(id(i, 0));
        farfield.nodes.push_back(id(i, nr - 1));
    }
    return build_grid(std::move(nodes), std::move(tris), {std::move(wall), std::move(farfield)});
}

Grid generate_flatplate_grid(const FlatPlateGridSpec& spec) {
    spec.validate();
    const int nx = spec.nx, ny = spec.ny;
    const double dx = (spec.x_max - spec.x_min) / (nx - 1);

    std::vector<double> y(ny, 0.0);
    if (spec.stretch == 1.0) {
        for (int j = 0; j < ny; ++j) y[j] = spec.height * j / (ny - 1);
    } else {
        double total = 0.0, step = 1.0;
        for (int j = 1; j < ny; ++j) {
            total += step;
            step *= spec.stretch;
        }
        double acc = 0.0;
        step = spec.height / total;
        for (int j = 1; j < ny; ++j) {
            acc += step;
            y[j] = acc;
            step *= spec.stretch;
        }
    }

    std::vector<Vec2> nodes(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i)
            nodes[static_cast<std::size_t>(j) * nx + i] = Vec2{spec.x_min + i * dx, y[j]};
    }

    auto id = [&](int i, int j) { return static_cast<std::int32_t>(j * nx + i); };
    std::vector<std::array<std::int32_t, 3>> tris;
    tris.reserve(static_cast<std::size_t>(2) * (nx - 1) * (ny - 1));
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i)
            split_quad(tris, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
    }

    std::vector<BoundarySegment> segments;
    // Bottom: symmetry upstream of the plate, no-slip wall from plate_start on.
    // A face belongs to the plate when its midpoint lies past plate_start.
    {
        BoundarySegment sym{to_string(BoundaryKind::SlipWall), {}};
        BoundarySegment plate{to_string(BoundaryKind::NoSlipWall), {}};
        for (int i = 0; i + 1 < nx; ++i) {
            const double xm = spec.x_min + (i + 0.5) * dx;
            BoundarySegment& seg = (xm > spec.plate_start) ? plate : sym;
            if (seg.nodes.empty()) seg.nodes.push_back(id(i, 0));
            seg.nodes.push_back(id(i + 1, 0));
        }
        if (!sym.nodes.empty()) segments.push_back(std::move(sym));
        if (!plate.nodes.empty()) segments.push_back(std::move(plate));
    }
    {
        BoundarySegment outflow{to_string(BoundaryKind::Outflow), {}};
        for (int j = 0; j < ny; ++j) outflow.nodes.push_back(id(nx - 1, j));
        segments.push_back(std::move(outflow));
    }
    {
        BoundarySegment top{to_string(BoundaryKind::Freestream), {}};
        for (int i = nx - 1; i >= 0; --i) top.nodes.push_back(id(i, ny - 1));
        segments.push_back(std::move(top));
    }
    {
        BoundarySegment inflow{to_string(BoundaryKind::Freestream), {}};
        for (int j = ny - 1; j >= 0; --j) inflow.nodes.push_back(id(0, j));
        segments.push_back(std::move(inflow));
    }
    return build_grid(std::move(nodes), std::move(tris), std::move(segments));
}

} // namespace mzres
