#pragma once

#include "mzres/gas.hpp"
#include "mzres/gradients.hpp"
#include "mzres/types.hpp"

namespace mzres {

enum class LimiterKind { None, VanAlbada };

struct NumericalFluxConfig {
    double entropy_fix = 0.05; // fraction of |u_n| + a applied to acoustic waves
    double alpha_damping = 4.0 / 3.0;
    bool reconstruction = true;
    LimiterKind limiter = LimiterKind::None;
    double limiter_freeze_orders = 4.0;

    void validate() const {
        if (entropy_fix < 0.0 || entropy_fix > 0.5)
            throw ConfigError("flux config: entropy fix parameter must lie in [0, 0.5]");
        if (!(alpha_damping > 0.0))
            throw ConfigError("flux config: alpha damping coefficient must be positive");
    }
};

/// Exact projected Euler flux of one state through directed area n.
Vec4 euler_flux(const Vec4& w, const GasModel& gas, double p_inf, const Vec2& n);

/// Approximate Riemann flux with Roe averaging; entropy fix on the acoustic
/// waves only. Consistent: wL == wR returns euler_flux. Zero-area faces
/// return a zero flux.
Vec4 roe_flux(const Vec4& wL, const Vec4& wR, const GasModel& gas, double p_inf,
              const Vec2& n, double entropy_fix);

/// Edge viscous flux from damped face gradients:
///   grad_f = mean(gradL, gradR) + (alpha/|e|) (dw - mean grad . e) e_hat
/// which is exact for linear fields and damps the odd-even mode for alpha > 0.
/// e is the edge vector from the left to the right node; mu and conductivity
/// are evaluated at the face. Sign convention: the returned vector is the
/// outward viscous flux, to be subtracted from the inviscid flux.
Vec4 viscous_flux(const Vec4& wL, const Vec4& wR, const Grad4& gradL,
                  const Grad4& gradR, const Vec2& e, const Vec2& n,
                  const GasModel& gas, double mu, double alpha);

} // namespace mzres
