#pragma once

#include "mzres/grid.hpp"

namespace mzres {

/// O-grid around a Joukowsky airfoil, built from concentric circles in the
/// map plane. n_circumferential counts unique nodes around the body (the
/// usual structured label is (n_circumferential+1) x n_radial with the wrap
/// column repeated). The circle center offset sets thickness (negative x)
/// and camber (positive y); the mapped chord is normalized to 1.
struct JoukowskyGridSpec {
    int n_circumferential = 128;
    int n_radial = 33;
    double center_x = -0.1;
    double center_y = 0.0;
    double outer_radius_chords = 20.0;
    double radial_stretch = 1.22;

    void validate() const;
};

/// Rectangular viscous flat-plate grid: uniform in x, geometrically
/// stretched off the wall in y, quads split into triangles along a fixed
/// diagonal. The bottom boundary is a symmetry (slip) segment upstream of
/// plate_start and a no-slip wall from there on.
struct FlatPlateGridSpec {
    int nx = 137;
    int ny = 97;
    double x_min = -0.25;
    double x_max = 1.11;
    double height = 1.0;
    double plate_start = 0.0;
    double stretch = 1.06;

    void validate() const;
};

Grid generate_joukowsky_ogrid(const JoukowskyGridSpec& spec);
Grid generate_flatplate_grid(const FlatPlateGridSpec& spec);

} // namespace mzres
