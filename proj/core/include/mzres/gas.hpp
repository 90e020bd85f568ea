#pragma once

#include "mzres/types.hpp"

namespace mzres {

enum class ViscosityLaw {
    Constant,   // mu fixed, typically derived from the freestream Reynolds number
    Sutherland, // mu(T) = mu_ref (T/T_ref)^1.5 (T_ref + S) / (T + S)
};

/// Calorically perfect gas. Defaults are standard air.
struct GasModel {
    double gamma = 1.4;
    double gas_constant = 287.05; // J/(kg K)
    double prandtl = 0.72;

    ViscosityLaw viscosity_law = ViscosityLaw::Constant;
    double mu_constant = 0.0;          // Pa s, used by ViscosityLaw::Constant
    double sutherland_mu_ref = 1.716e-5;
    double sutherland_t_ref = 273.15;
    double sutherland_s = 110.4;

    double cp() const { return gamma * gas_constant / (gamma - 1.0); }
    double cv() const { return gas_constant / (gamma - 1.0); }

    double viscosity(double t) const {
        if (viscosity_law == ViscosityLaw::Constant) return mu_constant;
        const double r = t / sutherland_t_ref;
        return sutherland_mu_ref * r * std::sqrt(r) *
               (sutherland_t_ref + sutherland_s) / (t + sutherland_s);
    }

    double heat_conductivity(double t) const { return viscosity(t) * cp() / prandtl; }

    void validate() const {
        if (!(gamma > 1.0)) throw PhysicsError("gas model: gamma must exceed 1");
        if (!(gas_constant > 0.0)) throw PhysicsError("gas model: gas constant must be positive");
        if (!(prandtl > 0.0)) throw PhysicsError("gas model: Prandtl number must be positive");
        if (mu_constant < 0.0) throw PhysicsError("gas model: viscosity must be non-negative");
    }
};

/// Freestream definition. Velocity follows from Mach number and the angle of
/// attack; density from the ideal-gas law. The stored pressure variable
/// everywhere else in the code is gauge pressure, which is zero at freestream.
struct FreestreamConditions {
    double mach = 0.0;
    double angle_of_attack_deg = 0.0;
    double p_inf = 101325.0; // Pa
    double t_inf = 288.15;   // K
    double reynolds = 0.0;   // based on reference_length; 0 for inviscid cases
    double reference_length = 1.0; // m

    double density(const GasModel& gas) const {
        return p_inf / (gas.gas_constant * t_inf);
    }
    double sound_speed(const GasModel& gas) const {
        return std::sqrt(gas.gamma * gas.gas_constant * t_inf);
    }
    double speed(const GasModel& gas) const { return mach * sound_speed(gas); }
    Vec2 velocity(const GasModel& gas) const {
        const double a = angle_of_attack_deg * M_PI / 180.0;
        const double q = speed(gas);
        return {q * std::cos(a), q * std::sin(a)};
    }
    /// Constant viscosity matching the requested Reynolds number.
    double viscosity_from_reynolds(const GasModel& gas) const {
        if (reynolds <= 0.0) return 0.0;
        return density(gas) * speed(gas) * reference_length / reynolds;
    }
    /// Freestream primitive state (p_gauge = 0 by definition).
    Vec4 primitive(const GasModel& gas) const {
        const Vec2 vel = velocity(gas);
        return {0.0, vel.x, vel.y, t_inf};
    }

    void validate() const {
        if (!(p_inf > 0.0)) throw PhysicsError("freestream: p_inf must be positive");
        if (!(t_inf > 0.0)) throw PhysicsError("freestream: T_inf must be positive");
        if (mach < 0.0) throw PhysicsError("freestream: Mach number must be non-negative");
        if (!(reference_length > 0.0)) throw PhysicsError("freestream: reference length must be positive");
    }
};

} // namespace mzres
