#pragma once

#include <cstddef>
#include <vector>

#include "mzres/gas.hpp"
#include "mzres/types.hpp"

namespace mzres {

/// Primitive variables w = (p', u, v, T) stored at nodes. p' is gauge
/// pressure relative to p_inf, so its freestream value is exactly zero.
struct PrimitiveState {
    std::vector<Vec4> w;

    PrimitiveState() = default;
    explicit PrimitiveState(std::size_t n, Vec4 fill = {0, 0, 0, 0}) : w(n, fill) {}

    std::size_t size() const { return w.size(); }
    Vec4& operator[](std::size_t j) { return w[j]; }
    const Vec4& operator[](std::size_t j) const { return w[j]; }
};

/// Uniform freestream state on n nodes.
PrimitiveState uniform_freestream(std::size_t n, const FreestreamConditions& fs,
                                  const GasModel& gas);

bool is_physical(const Vec4& w, double p_inf);

/// Throws PhysicsError naming the first offending node if any node has
/// non-positive temperature or absolute pressure.
void validate_state(const PrimitiveState& s, double p_inf);

/// (p', u, v, T) -> (rho, rho u, rho v, rho E). Throws on non-physical input.
Vec4 primitive_to_conservative(const Vec4& w, const GasModel& gas, double p_inf);

/// Inverse of primitive_to_conservative. Throws on non-physical input.
Vec4 conservative_to_primitive(const Vec4& u, const GasModel& gas, double p_inf);

} // namespace mzres
