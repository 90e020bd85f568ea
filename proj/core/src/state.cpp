#include "mzres/state.hpp"

#include <string>

namespace mzres {

PrimitiveState uniform_freestream(std::size_t n, const FreestreamConditions& fs,
                                  const GasModel& gas) {
    return PrimitiveState(n, fs.primitive(gas));
}

bool is_physical(const Vec4& w, double p_inf) {
    return w[3] > 0.0 && w[0] + p_inf > 0.0;
}

void validate_state(const PrimitiveState& s, double p_inf) {
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (!is_physical(s[j], p_inf)) {
            throw PhysicsError("non-physical state at node " + std::to_string(j) +
                               ": p = " + std::to_string(s[j][0] + p_inf) +
                               " Pa, T = " + std::to_string(s[j][3]) + " K");
        }
    }
}

Vec4 primitive_to_conservative(const Vec4& w, const GasModel& gas, double p_inf) {
    if (!is_physical(w, p_inf)) {
        throw PhysicsError("primitive_to_conservative: non-physical state (p = " +
                           std::to_string(w[0] + p_inf) + " Pa, T = " +
                           std::to_string(w[3]) + " K)");
    }
    const double p = w[0] + p_inf;
    const double rho = p / (gas.gas_constant * w[3]);
    const double ke = 0.5 * (w[1] * w[1] + w[2] * w[2]);
    const double rho_e = p / (gas.gamma - 1.0) + rho * ke;
    return {rho, rho * w[1], rho * w[2], rho_e};
}

Vec4 conservative_to_primitive(const Vec4& u, const GasModel& gas, double p_inf) {
    const double rho = u[0];
    if (!(rho > 0.0)) throw PhysicsError("conservative_to_primitive: non-positive density");
    const double vx = u[1] / rho;
    const double vy = u[2] / rho;
    const double p = (gas.gamma - 1.0) * (u[3] - 0.5 * rho * (vx * vx + vy * vy));
    if (!(p > 0.0)) throw PhysicsError("conservative_to_primitive: non-positive pressure");
    const double t = p / (rho * gas.gas_constant);
    return {p - p_inf, vx, vy, t};
}

} // namespace mzres
